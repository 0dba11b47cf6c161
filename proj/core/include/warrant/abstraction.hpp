#ifndef WARRANT_ABSTRACTION_HPP
#define WARRANT_ABSTRACTION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "warrant/formula.hpp"
#include "warrant/strips.hpp"

namespace warrant {

enum class FeatureKind { Boolean, Numerical };

// A feature is a first-order concept plus a reading: boolean features are
// true iff the concept's extension is nonempty, numerical features take
// its cardinality.
struct Feature {
    std::string name;
    FeatureKind kind = FeatureKind::Numerical;
    std::vector<std::string> concept_vars;
    FormulaRef concept_formula;
};

enum class LiteralKind { BoolTrue, BoolFalse, NumPositive, NumZero };

struct FeatureLiteral {
    std::string feature;
    LiteralKind kind = LiteralKind::BoolTrue;

    bool operator==(const FeatureLiteral& o) const {
        return feature == o.feature && kind == o.kind;
    }
    std::string to_string() const;
};

enum class EffectKind { SetTrue, SetFalse, Inc, Dec };

struct AbstractEffect {
    std::string feature;
    EffectKind kind = EffectKind::Inc;
    std::string to_string() const;
};

struct AbstractAction {
    std::string name;
    std::vector<FeatureLiteral> pre;
    std::vector<AbstractEffect> eff;

    std::optional<EffectKind> effect_on(const std::string& feature) const;
    std::optional<LiteralKind> precondition_on(const std::string& feature) const;
};

struct Abstraction {
    std::vector<Feature> features;
    std::vector<AbstractAction> actions;
    std::vector<FeatureLiteral> init_lits;  // must be maximal consistent
    std::vector<FeatureLiteral> goal_lits;  // must be consistent

    const Feature* feature(const std::string& name) const;
    const AbstractAction* action(const std::string& name) const;
    // Structural checks: known feature names, literal kinds matching
    // feature kinds, consistent pre/eff/goal, maximal consistent init.
    void validate() const;
};

// Boolean valuation of the feature set on a concrete state: one literal
// per feature.
struct AbstractState {
    std::vector<FeatureLiteral> literals;  // in feature declaration order

    bool satisfies(const FeatureLiteral& lit) const;
    bool satisfies_all(const std::vector<FeatureLiteral>& lits) const;
    std::string to_string() const;

    bool operator==(const AbstractState& o) const { return literals == o.literals; }
};

// Cached per-state feature evaluation for one problem.
class FeatureEvaluator {
public:
    FeatureEvaluator(const Abstraction& abs, const Problem& prob);

    // Extension of feature fi on s as a sorted list of object-index tuples.
    const std::vector<std::vector<int>>& extension(int fi, const State& s);
    std::uint64_t extension_size(int fi, const State& s);
    AbstractState valuation(const State& s);

    const Abstraction& abstraction() const { return abs_; }
    const Problem& problem() const { return prob_; }

private:
    struct Entry {
        State state;
        std::vector<std::vector<std::vector<int>>> ext;  // per feature
        std::vector<bool> computed;
    };
    const Abstraction& abs_;
    const Problem& prob_;
    std::unordered_map<State, Entry, StateHash> cache_;
    Entry& entry(const State& s);
};

AbstractState valuation(const Abstraction& abs, const Problem& prob,
                        const State& s);

bool abstract_applicable(const AbstractAction& a, const AbstractState& v);

enum class ReprClause { Pre, BoolFlip, BoolEffect, Numeric };

struct ReprVerdict {
    bool yes = false;
    ReprClause violated = ReprClause::Pre;  // valid when !yes
    std::string detail;

    explicit operator bool() const { return yes; }
};

// Does the ground action instantiate the abstract action in state s:
// both preconditions hold, boolean feature flips are announced and
// announced boolean effects happen, and numerical in/decrements appear in
// the effects exactly when the extension cardinality moves that way.
ReprVerdict represents(const AbstractAction& abar, const GroundAction& a,
                       FeatureEvaluator& eval, const State& s);

enum class Scope { Reachable, AllStates };

struct ComplianceReport {
    bool complies = false;
    std::string reason;                  // valid when !complies
    std::optional<State> witness;
};

// Checks the two compliance clauses: the initial state is consistent with
// the abstract init literals, and every state in scope consistent with
// the abstract goal literals is a goal state.
ComplianceReport complies(const Abstraction& abs, const Problem& prob,
                          Scope scope, std::uint64_t max_states);

struct MonotonicityReport {
    bool monotone = false;
    std::optional<Transition> witness;
    std::string detail;
};

// Extension containment along every reachable transition.
MonotonicityReport monotone(const Feature& feature, const Abstraction& abs,
                            const Problem& prob, std::uint64_t max_states);

struct DeltaPartition {
    std::vector<int> inc, dec, eq, set_true, set_false;  // feature indices
};

// Partition of the features by the abstract action's effect on them;
// every feature lands in exactly one part.
DeltaPartition effect_partition(const AbstractAction& a,
                                const std::vector<Feature>& features);

// First-order rendering of the abstract action's precondition on one
// feature: top when unconstrained, exists x. Psi when required
// true/positive, forall x. not Psi when required false/zero.
FormulaRef pre_formula(const AbstractAction& a, const Feature& feature);

// Conjunction of pre_formula over all features.
FormulaRef pre_formula_all(const AbstractAction& a,
                           const std::vector<Feature>& features);

// Partial mapping from valuations to abstract actions, represented as an
// ordered rule list; the first rule whose literals all hold fires.
struct Policy {
    struct Rule {
        std::vector<FeatureLiteral> condition;
        std::string action;
    };
    std::vector<Rule> rules;

    std::optional<std::string> choose(const AbstractState& v) const;
};

} // namespace warrant

#endif
