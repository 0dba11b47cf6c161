#include "warrant/verify.hpp"

#include <algorithm>
#include <functional>

namespace warrant {

namespace {

void spend(CheckStats& stats, const Budgets& budgets, std::uint64_t n = 1) {
    stats.checks += n;
    if (stats.checks > budgets.max_checks) {
        throw BudgetExceeded("max-checks", budgets.max_checks);
    }
}

std::vector<State> states_in_scope(const Problem& prob, Scope scope,
                                   const Budgets& budgets) {
    if (scope == Scope::Reachable) {
        return reachable(prob, budgets.max_states).states;
    }
    return all_states(prob, budgets.max_states);
}

// Evaluates a formula over a state's structure with an argument binding
// for the schema parameters.
bool holds_on_state(const FormulaRef& f, const Structure& st,
                    const std::vector<std::string>& params,
                    const std::vector<int>& args) {
    Valuation val(st);
    for (std::size_t i = 0; i < params.size(); ++i) val.bind(params[i], args[i]);
    return val.eval(f);
}

} // namespace

GuaranteeReport check_guarantee_valid(const GuaranteeSet& guarantees,
                                      const Abstraction& abs,
                                      const Problem& prob, Scope scope,
                                      const Budgets& budgets) {
    GuaranteeReport report;
    FeatureEvaluator eval(abs, prob);
    auto states = states_in_scope(prob, scope, budgets);
    report.stats.states = states.size();

    // Group the ground actions by schema for tuple enumeration.
    std::vector<std::vector<const GroundAction*>> by_schema(
        prob.domain().schemas.size());
    for (const auto& ga : prob.actions()) {
        by_schema[ga.schema_index].push_back(&ga);
    }

    for (const auto& s : states) {
        Structure st = prob.structure_of(s);
        AbstractState v = eval.valuation(s);
        for (const auto& entry : guarantees.sufficient) {
            const AbstractAction* abar = abs.action(entry.abstract_action);
            if (!abar) {
                throw InputError("guarantee names unknown abstract action " +
                                 entry.abstract_action);
            }
            if (!abstract_applicable(*abar, v)) continue;
            for (std::size_t si = 0; si < entry.disjuncts.size(); ++si) {
                const auto& [schema_name, psi] = entry.disjuncts[si];
                const ActionSchema* schema = prob.domain().schema(schema_name);
                if (!schema) {
                    throw InputError("guarantee names unknown schema " + schema_name);
                }
                for (const GroundAction* ga : by_schema[si]) {
                    spend(report.stats, budgets);
                    if (!holds_on_state(psi, st, schema->params, ga->args)) {
                        continue;
                    }
                    ReprVerdict verdict = represents(*abar, *ga, eval, s);
                    if (!verdict.yes) {
                        report.valid = false;
                        report.counterexample = GuaranteeCounterexample{
                            s, abar->name, ga->name, verdict};
                        return report;
                    }
                }
            }
        }
    }
    report.valid = true;
    return report;
}

SoundnessReport check_soundness_direct(const Abstraction& abs,
                                       const Problem& prob,
                                       const Budgets& budgets) {
    SoundnessReport report;
    FeatureEvaluator eval(abs, prob);
    auto states = reachable(prob, budgets.max_states).states;
    report.stats.states = states.size();
    for (const auto& s : states) {
        AbstractState v = eval.valuation(s);
        for (const auto& abar : abs.actions) {
            if (!abstract_applicable(abar, v)) continue;
            bool instantiated = false;
            for (const auto& ga : prob.actions()) {
                spend(report.stats, budgets);
                if (represents(abar, ga, eval, s).yes) {
                    instantiated = true;
                    break;
                }
            }
            if (!instantiated) {
                report.sound = false;
                report.witness = SoundnessWitness{s, abar.name};
                return report;
            }
        }
    }
    report.sound = true;
    return report;
}

MembershipReport check_membership(const Abstraction& abs,
                                  const GuaranteeSet& guarantees,
                                  const Problem& prob, const Budgets& budgets) {
    MembershipReport report;
    auto compliance = complies(abs, prob, Scope::Reachable, budgets.max_states);
    if (!compliance.complies) {
        report.verdict = MembershipVerdict::FailsCompliance;
        report.detail = compliance.reason;
        report.witness = compliance.witness;
        return report;
    }
    FeatureEvaluator eval(abs, prob);
    auto states = reachable(prob, budgets.max_states).states;
    report.stats.states = states.size();
    for (const auto& s : states) {
        Structure st = prob.structure_of(s);
        AbstractState v = eval.valuation(s);
        for (const auto& entry : guarantees.sufficient) {
            const AbstractAction* abar = abs.action(entry.abstract_action);
            if (!abar) {
                throw InputError("guarantee names unknown abstract action " +
                                 entry.abstract_action);
            }
            if (!abstract_applicable(*abar, v)) continue;
            spend(report.stats, budgets);
            if (!holds_on_state(entry.assembled, st, {}, {})) {
                report.verdict = MembershipVerdict::FailsImplication;
                report.detail = "Pre(" + abar->name +
                                ") holds but the sufficient sentence fails";
                report.witness = s;
                report.abstract_action = abar->name;
                return report;
            }
        }
    }
    report.verdict = MembershipVerdict::Member;
    return report;
}

InvariantReport check_invariant(const FormulaRef& f, const Problem& prob,
                                const Budgets& budgets) {
    if (!free_vars(f).empty()) {
        throw InputError("invariant formula must be closed");
    }
    InvariantReport report;
    auto states = reachable(prob, budgets.max_states).states;
    report.stats.states = states.size();
    for (const auto& s : states) {
        spend(report.stats, budgets);
        Structure st = prob.structure_of(s);
        if (!holds_on_state(f, st, {}, {})) {
            report.holds = false;
            report.witness = s;
            return report;
        }
    }
    report.holds = true;
    return report;
}

namespace {

struct PolicyRun {
    const Policy& policy;
    const Abstraction& abs;
    const Problem& prob;
    std::uint64_t max_steps;
    FeatureEvaluator eval;
    PolicyReport report;

    PolicyRun(const Policy& p, const Abstraction& a, const Problem& pr,
              std::uint64_t ms)
        : policy(p), abs(a), prob(pr), max_steps(ms), eval(a, pr) {}

    std::vector<const GroundAction*> instantiations(const AbstractAction& abar,
                                                    const State& s) {
        std::vector<const GroundAction*> out;
        for (const auto& ga : prob.actions()) {
            if (represents(abar, ga, eval, s).yes) out.push_back(&ga);
        }
        return out;
    }

    // Depth-first exploration of every spawned execution. Path states
    // catch cycles; memo caches states whose every branch reaches the
    // goal.
    bool explore_all(const State& s, std::uint64_t depth,
                     std::vector<PolicyStep>& trace,
                     std::unordered_map<State, int, StateHash>& status) {
        report.max_depth = std::max(report.max_depth, depth);
        if (prob.goal_satisfied(s)) {
            ++report.branches_explored;
            return true;
        }
        if (depth >= max_steps) {
            fail(PolicyOutcome::StepLimit, s, trace);
            return false;
        }
        auto it = status.find(s);
        if (it != status.end()) {
            if (it->second == 1) {  // on current path: cycle
                fail(PolicyOutcome::NonTerminating, s, trace);
                return false;
            }
            if (it->second == 2) {  // settled good
                ++report.branches_explored;
                return true;
            }
        }
        AbstractState v = eval.valuation(s);
        auto chosen = policy.choose(v);
        if (!chosen) {
            fail(PolicyOutcome::PolicyIncomplete, s, trace);
            return false;
        }
        const AbstractAction* abar = abs.action(*chosen);
        if (!abar) throw InputError("policy names unknown action " + *chosen);
        auto ground_choices = instantiations(*abar, s);
        if (ground_choices.empty()) {
            fail(PolicyOutcome::Stuck, s, trace);
            return false;
        }
        status[s] = 1;
        for (const GroundAction* ga : ground_choices) {
            trace.push_back({abar->name, ga->name});
            if (!explore_all(res(s, *ga), depth + 1, trace, status)) {
                status[s] = 0;
                return false;
            }
            trace.pop_back();
        }
        status[s] = 2;
        return true;
    }

    void fail(PolicyOutcome outcome, const State& s,
              const std::vector<PolicyStep>& trace) {
        report.outcome = outcome;
        report.stop_state = s;
        report.trace = trace;
    }
};

} // namespace

PolicyReport run_policy(const Policy& policy, const Abstraction& abs,
                        const Problem& prob, std::uint64_t max_steps,
                        ChooseMode chooser) {
    PolicyRun run(policy, abs, prob, max_steps);
    State s = prob.initial_state();

    if (chooser == ChooseMode::All) {
        std::vector<PolicyStep> trace;
        std::unordered_map<State, int, StateHash> status;
        if (run.explore_all(s, 0, trace, status)) {
            run.report.outcome = PolicyOutcome::GoalReached;
        }
        return run.report;
    }

    std::uint64_t steps = 0;
    std::unordered_map<State, bool, StateHash> visited;
    for (;;) {
        run.report.max_depth = std::max(run.report.max_depth, steps);
        if (prob.goal_satisfied(s)) {
            run.report.outcome = PolicyOutcome::GoalReached;
            run.report.branches_explored = 1;
            return run.report;
        }
        if (steps >= max_steps) {
            run.fail(PolicyOutcome::StepLimit, s, run.report.trace);
            return run.report;
        }
        if (visited[s]) {
            run.fail(PolicyOutcome::NonTerminating, s, run.report.trace);
            return run.report;
        }
        visited[s] = true;
        AbstractState v = run.eval.valuation(s);
        auto chosen = policy.choose(v);
        if (!chosen) {
            run.fail(PolicyOutcome::PolicyIncomplete, s, run.report.trace);
            return run.report;
        }
        const AbstractAction* abar = abs.action(*chosen);
        if (!abar) throw InputError("policy names unknown action " + *chosen);
        auto choices = run.instantiations(*abar, s);
        if (choices.empty()) {
            run.fail(PolicyOutcome::Stuck, s, run.report.trace);
            return run.report;
        }
        run.report.trace.push_back({abar->name, choices.front()->name});
        s = res(s, *choices.front());
        ++steps;
    }
}

} // namespace warrant
