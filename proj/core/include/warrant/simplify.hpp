#ifndef WARRANT_SIMPLIFY_HPP
#define WARRANT_SIMPLIFY_HPP

#include "warrant/formula.hpp"

namespace warrant {

// Best-effort logical simplification. The result is logically equivalent
// to the input on every structure with a nonempty universe (the only kind
// this library interprets formulas on); it is not a canonical form.
// Rules: constant folding, double negation, negation pushing, And/Or
// flattening and deduplication, unit propagation between siblings,
// equality folding (t = t, distinct constants under unique names),
// reflexive closure atoms, vacuous-quantifier removal, quantifier scope
// narrowing, and one-point elimination of quantified equalities. A final
// presentation pass folds mixed disjunctions back into implications.
FormulaRef simplify(const FormulaRef& f);

} // namespace warrant

#endif
