#ifndef WARRANT_VERIFY_HPP
#define WARRANT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "warrant/abstraction.hpp"
#include "warrant/synthesis.hpp"

namespace warrant {

struct Budgets {
    std::uint64_t max_states = 200000;
    // One check is one (state, abstract action, schema, argument tuple)
    // combination examined.
    std::uint64_t max_checks = 10000000;
};

struct CheckStats {
    std::uint64_t states = 0;
    std::uint64_t checks = 0;
};

// A counterexample to guarantee validity: the state satisfies the
// abstract precondition and the schema disjunct at the tuple, yet the
// ground action does not instantiate the abstract action.
struct GuaranteeCounterexample {
    State state;
    std::string abstract_action;
    std::string ground_action;
    ReprVerdict verdict;
};

struct GuaranteeReport {
    bool valid = false;
    std::optional<GuaranteeCounterexample> counterexample;
    CheckStats stats;
};

// For every state in scope, abstract action, schema and argument tuple:
// when the abstract precondition and the disjunct hold, the ground action
// must instantiate the abstract action. Reports the first violation in
// enumeration order (BFS-earliest state first).
GuaranteeReport check_guarantee_valid(const GuaranteeSet& guarantees,
                                      const Abstraction& abs,
                                      const Problem& prob, Scope scope,
                                      const Budgets& budgets);

struct SoundnessWitness {
    State state;
    std::string abstract_action;
};

struct SoundnessReport {
    bool sound = false;
    std::optional<SoundnessWitness> witness;
    CheckStats stats;
};

// For every reachable state and abstract action applicable in its
// valuation, searches the ground actions for one that instantiates it;
// the BFS-earliest state with an uninstantiable applicable abstract
// action is the witness.
SoundnessReport check_soundness_direct(const Abstraction& abs,
                                       const Problem& prob,
                                       const Budgets& budgets);

enum class MembershipVerdict { Member, FailsCompliance, FailsImplication };

struct MembershipReport {
    MembershipVerdict verdict = MembershipVerdict::Member;
    std::string detail;
    std::optional<State> witness;
    std::optional<std::string> abstract_action;
    CheckStats stats;
};

// Membership in the guaranteed subcollection: the abstraction complies
// with the instance and Pre(abar) implies the assembled sufficient
// sentence on every reachable state.
MembershipReport check_membership(const Abstraction& abs,
                                  const GuaranteeSet& guarantees,
                                  const Problem& prob, const Budgets& budgets);

struct InvariantReport {
    bool holds = false;
    std::optional<State> witness;  // BFS-earliest failing state
    CheckStats stats;
};

// Evaluates a closed formula on every reachable state.
InvariantReport check_invariant(const FormulaRef& f, const Problem& prob,
                                const Budgets& budgets);

enum class ChooseMode { First, All };

enum class PolicyOutcome {
    GoalReached,
    Stuck,            // no ground action instantiates the chosen action
    StepLimit,
    PolicyIncomplete, // no rule for an encountered valuation
    NonTerminating,   // a branch revisits a state
};

struct PolicyStep {
    std::string abstract_action;
    std::string ground_action;
};

struct PolicyReport {
    PolicyOutcome outcome = PolicyOutcome::GoalReached;
    std::vector<PolicyStep> trace;       // first failing or first successful branch
    std::optional<State> stop_state;
    std::uint64_t branches_explored = 0;
    std::uint64_t max_depth = 0;
};

// Executes the policy from the initial state. First mode follows the
// lexicographically least instantiating ground action; All mode explores
// every instantiating choice and requires all branches to reach the goal,
// reporting revisited states as non-terminating branches.
PolicyReport run_policy(const Policy& policy, const Abstraction& abs,
                        const Problem& prob, std::uint64_t max_steps,
                        ChooseMode chooser);

} // namespace warrant

#endif
