#ifndef WARRANT_EQUIVALENCE_HPP
#define WARRANT_EQUIVALENCE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "warrant/formula.hpp"
#include "warrant/structure.hpp"

namespace warrant {

struct EquivCounterexample {
    Structure structure;
    std::map<std::string, std::string> binding;  // free var -> object name
};

struct EquivResult {
    bool equivalent = false;
    std::optional<EquivCounterexample> counterexample;
    // Number of (structure, constant-interpretation) pairs the verdict
    // covers, saturating at uint64 max.
    std::uint64_t structures_covered = 0;

    explicit operator bool() const { return equivalent; }
};

// Bounded semantic-equivalence oracle: enumerates every interpretation of
// the signature's predicates and every injective denotation of its
// constants (unique names) over universes of size 1..max_universe, and
// every binding of the formulas' free variables. Returns the first
// counterexample in enumeration order — ordered by (universe size,
// constant map, structure, binding), where structures are identified with
// integers whose bit i is the truth of ground atom i (atoms indexed
// predicate-major, plain predicates before closure-enabled ones, each in
// declaration order, tuples lexicographic) and visited in ascending
// order — or the equivalent-up-to-bound verdict. This is an exhaustive
// check up to the bound, not a proof.
EquivResult semantically_equivalent(const FormulaRef& f1, const FormulaRef& f2,
                                    std::shared_ptr<const Signature> sig,
                                    int max_universe);

// f valid (true on every structure/binding) up to the bound.
EquivResult bounded_valid(const FormulaRef& f,
                          std::shared_ptr<const Signature> sig,
                          int max_universe);

// f1 => f2 on every structure/binding up to the bound.
EquivResult bounded_implies(const FormulaRef& f1, const FormulaRef& f2,
                            std::shared_ptr<const Signature> sig,
                            int max_universe);

} // namespace warrant

#endif
