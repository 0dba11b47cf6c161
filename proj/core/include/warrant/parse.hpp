#ifndef WARRANT_PARSE_HPP
#define WARRANT_PARSE_HPP

#include <memory>
#include <string>

#include "warrant/abstraction.hpp"
#include "warrant/sexpr.hpp"
#include "warrant/strips.hpp"

namespace warrant {

// Formula syntax: (and f...) (or f...) (not f) (implies f g)
// (exists (y...) f) (forall (x...) f) (= t1 t2) (p t1 ... tn)
// (p* t1 t2) (p+ t1 t2), plus the atoms true/false. Symbols matching a
// declared constant are constants, everything else is a variable.
FormulaRef parse_formula(const Sexpr& node, const Signature& sig);
FormulaRef parse_formula_text(const std::string& text, const Signature& sig,
                              const std::string& file = "<formula>");
FormulaRef parse_formula_file(const std::string& path, const Signature& sig);

// Domain files:
//   (domain (constants A)
//           (predicates (on 2) (clear 1))
//           (action Newtower :params (z1 z2)
//                   :pre ((on z1 z2) (clear z1))
//                   :add ((ontable z1) (clear z2))
//                   :del ((on z1 z2))))
// Closure relations are available for every binary predicate.
std::shared_ptr<const DomainSchema> parse_domain(const Sexpr& node);
std::shared_ptr<const DomainSchema> parse_domain_file(const std::string& path);

// Instance files: (instance (objects B1 B2) (init atoms...) (goal atoms...)).
std::shared_ptr<const Instance>
parse_instance(const Sexpr& node, std::shared_ptr<const DomainSchema> domain);
std::shared_ptr<const Instance>
parse_instance_file(const std::string& path,
                    std::shared_ptr<const DomainSchema> domain);

// Abstraction files:
//   (abstraction
//     (features (num n (x) FORMULA) (bool X (x) FORMULA) ...)
//     (actions (name :pre (LITS) :eff (EFFS)) ...)
//     (init (LITS)) (goal (LITS)))
// with literals (gt n) (eqz n) (true X) (false X) and effects
// (inc n) (dec n) (true X) (false X).
Abstraction parse_abstraction(const Sexpr& node, const Signature& sig);
Abstraction parse_abstraction_file(const std::string& path, const Signature& sig);

// Policy files: (policy (rule (LITS) action-name) ...); the first rule
// whose literals all hold fires.
Policy parse_policy(const Sexpr& node, const Abstraction& abs);
Policy parse_policy_file(const std::string& path, const Abstraction& abs);

} // namespace warrant

#endif
