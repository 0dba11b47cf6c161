#ifndef WARRANT_SYNTHESIS_HPP
#define WARRANT_SYNTHESIS_HPP

#include <string>
#include <vector>

#include "warrant/abstraction.hpp"
#include "warrant/base.hpp"

namespace warrant {

// Propagates the base's per-atom conditions through an arbitrary formula
// by structural induction: conjunction and disjunction componentwise,
// negation swapping necessary and sufficient, quantifiers passing
// through, equalities and logical constants mapping to themselves (their
// denotation is state-independent). The formula must be free of p+ atoms;
// run eliminate_plus first.
FormulaRef lift(const SynthesisBase& base, const ActionSchema& schema,
                const FormulaRef& formula, CondKind kind);

enum class ChangeKind { Inc, Dec, Eq, ToTrue, ToFalse };

// Condition over the schema parameters for the feature's value to change
// as described when the schema fires. Necessary conditions use the plain
// forms; sufficient ones strengthen Inc and Dec with the containment
// conjunct that rules out non-monotone jumps. Inc/Dec apply to numerical
// features only, ToTrue/ToFalse to boolean ones.
FormulaRef change_condition(const SynthesisBase& base, CondKind kind,
                            ChangeKind change, const Feature& feature,
                            const ActionSchema& schema);

struct GuaranteeEntry {
    std::string abstract_action;
    // Per schema, in domain declaration order: the disjunct over the
    // schema's parameters.
    std::vector<std::pair<std::string, FormulaRef>> disjuncts;
    // The assembled closed sentence: exists z (disjunct_1 or ... or
    // disjunct_k) over the concatenated schema parameters.
    FormulaRef assembled;
    // First-order rendering of the abstract action's precondition.
    FormulaRef precondition;
};

struct GuaranteeSet {
    std::vector<GuaranteeEntry> sufficient;
    std::vector<GuaranteeEntry> necessary;

    const GuaranteeEntry* sufficient_for(const std::string& action) const;
    const GuaranteeEntry* necessary_for(const std::string& action) const;
};

// Sufficient guarantees: for each abstract action, per-schema disjuncts
//   Pre(a(z)) and per-feature (Pre(abar)_C and S^change_C(z))
// joined as an existentially closed disjunction. Output is simplified.
GuaranteeSet synthesize_sufficient(const Abstraction& abs,
                                   const DomainSchema& domain,
                                   const SynthesisBase& base);

// Necessary counterparts: per-schema
//   Pre(a(z)) and per-feature N^change_C(z)
// using the plain change conditions and omitting the abstract
// precondition conjuncts.
GuaranteeSet synthesize_necessary(const Abstraction& abs,
                                  const DomainSchema& domain,
                                  const SynthesisBase& base);

// Both halves in one set.
GuaranteeSet synthesize(const Abstraction& abs, const DomainSchema& domain,
                        const SynthesisBase& base);

} // namespace warrant

#endif
