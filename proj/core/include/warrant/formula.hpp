#ifndef WARRANT_FORMULA_HPP
#define WARRANT_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "warrant/signature.hpp"

namespace warrant {

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

enum class ClosureKind { Plus, Star };

// Immutable first-order formula over a domain signature. Atoms use the
// domain predicates; Closure atoms use the derived relations p+ / p*.
// Quantifiers bind a list of variables. Formulas are plain value trees;
// use the static factory functions, never mutate.
class Formula {
public:
    enum class Kind {
        True, False, Atom, Closure, Equal, Not, And, Or, Implies, Exists, Forall
    };

    Kind kind() const { return kind_; }
    const std::string& pred() const { return pred_; }
    ClosureKind closure_kind() const { return ckind_; }
    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<FormulaRef>& children() const { return kids_; }
    const FormulaRef& child(std::size_t i) const { return kids_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }

    static FormulaRef truth();
    static FormulaRef falsity();
    static FormulaRef boolean(bool b) { return b ? truth() : falsity(); }
    static FormulaRef atom(std::string pred, std::vector<Term> terms);
    static FormulaRef closure(std::string pred, ClosureKind kind, Term a, Term b);
    static FormulaRef equal(Term a, Term b);
    static FormulaRef negation(FormulaRef f);
    static FormulaRef conj(std::vector<FormulaRef> kids);   // empty -> true
    static FormulaRef disj(std::vector<FormulaRef> kids);   // empty -> false
    static FormulaRef implies(FormulaRef a, FormulaRef b);
    static FormulaRef exists(std::vector<std::string> vars, FormulaRef body);
    static FormulaRef forall(std::vector<std::string> vars, FormulaRef body);

    // (t1...tn) = (s1...sn) as a conjunction of equalities, and its negation.
    static FormulaRef tuple_equal(const std::vector<Term>& a,
                                  const std::vector<Term>& b);
    static FormulaRef tuple_not_equal(const std::vector<Term>& a,
                                      const std::vector<Term>& b);

private:
    Kind kind_;
    std::string pred_;
    ClosureKind ckind_ = ClosureKind::Star;
    std::vector<Term> terms_;
    std::vector<FormulaRef> kids_;
    std::vector<std::string> vars_;

    explicit Formula(Kind k) : kind_(k) {}
    friend FormulaRef make_formula(Formula&&);
};

bool structurally_equal(const FormulaRef& a, const FormulaRef& b);
std::size_t structural_hash(const FormulaRef& f);

// Free variables in lexicographic order.
std::vector<std::string> free_vars(const FormulaRef& f);
void collect_free_vars(const FormulaRef& f, std::set<std::string>& out);

// All variable names occurring in f, bound or free.
void collect_all_vars(const FormulaRef& f, std::set<std::string>& out);

// Capture-avoiding substitution of free variables by terms. Bound
// variables are renamed when they would capture a substituted term.
FormulaRef substitute(const FormulaRef& f,
                      const std::map<std::string, Term>& subst);

// Renames every bound variable that collides with `reserved` (or with an
// already-used fresh name) to a fresh name. Used before composing formulas
// whose variable namespaces must not clash.
FormulaRef avoid_bound_vars(const FormulaRef& f,
                            const std::set<std::string>& reserved);

// Deterministic fresh-name source: base, base1, base2, ... skipping taken
// names. Records produced names as taken.
class VarNamer {
public:
    explicit VarNamer(std::set<std::string> taken = {}) : taken_(std::move(taken)) {}
    void reserve(const std::string& name) { taken_.insert(name); }
    void reserve_all_vars(const FormulaRef& f);
    std::string fresh(const std::string& base);

private:
    std::set<std::string> taken_;
};

// S-expression rendering, the syntax accepted by parse_formula.
std::string to_sexpr(const FormulaRef& f);

// Validates f against the signature: known predicates and constants,
// matching arities, closure atoms only on closure-enabled binary
// predicates. Throws InputError.
void check_well_formed(const FormulaRef& f, const Signature& sig);

} // namespace warrant

#endif
