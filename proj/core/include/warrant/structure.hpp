#ifndef WARRANT_STRUCTURE_HPP
#define WARRANT_STRUCTURE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "warrant/formula.hpp"
#include "warrant/signature.hpp"

namespace warrant {

// Finite first-order structure: a universe of named objects, one relation
// per signature predicate, and a denotation for every constant. Closures
// (p+ / p*) are never stored as relations; they are derived from the
// stored p-relation at construction time. Immutable once built.
class Structure {
public:
    // `atoms` lists the true ground atoms as (predicate, object-name tuple).
    // Every constant must name an object of the universe; if a constant is
    // missing from `constant_map` it denotes the universe object with its
    // own name, which then must exist.
    Structure(std::shared_ptr<const Signature> sig,
              std::vector<std::string> universe,
              const std::vector<std::pair<std::string, std::vector<std::string>>>& atoms,
              const std::map<std::string, std::string>& constant_map = {});

    const Signature& signature() const { return *sig_; }
    const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }
    const std::vector<std::string>& universe() const { return universe_; }
    int object_count() const { return static_cast<int>(universe_.size()); }

    int object_index(const std::string& name) const;  // throws InputError
    const std::string& object_name(int idx) const { return universe_[idx]; }
    int constant_object(int constant_idx) const { return constant_map_[constant_idx]; }

    bool holds(int pred_idx, std::span<const int> objs) const;
    bool closure_holds(int pred_idx, ClosureKind kind, int a, int b) const;

    // True ground tuples of a predicate, in lexicographic object-index order.
    std::vector<std::vector<int>> tuples(int pred_idx) const;

private:
    std::shared_ptr<const Signature> sig_;
    std::vector<std::string> universe_;
    std::map<std::string, int> object_idx_;
    std::vector<int> constant_map_;                 // constant idx -> object idx
    std::vector<std::vector<std::uint64_t>> rels_;  // per predicate, bitset over n^arity
    std::vector<std::uint64_t> pred_size_;          // n^arity per predicate
    // For each closure-enabled predicate (indexed by predicate idx):
    // n*n bitsets for the transitive and reflexive-transitive closure.
    std::vector<std::vector<std::uint64_t>> plus_, star_;

    std::uint64_t tuple_index(int pred_idx, std::span<const int> objs) const;
    void compute_closures();
};

// Tarskian evaluation of f on st under the given variable binding (object
// names). Throws InputError on unbound free variables or symbols unknown
// to st's signature.
bool evaluate(const FormulaRef& f, const Structure& st,
              const std::map<std::string, std::string>& binding);

// Exact closure of the p-relation as object-name pairs, lexicographic.
// Star includes (u,u) for every universe object. Throws InputError when p
// is not binary.
std::vector<std::pair<std::string, std::string>>
closure(const Structure& st, const std::string& pred, ClosureKind kind);

// Extension of a concept: all tuples over the universe (object names,
// lexicographic index order) satisfying the formula when free_vars are
// bound componentwise. Free variables of the formula must be contained in
// free_vars.
std::vector<std::vector<std::string>>
extension(const FormulaRef& concept_formula,
          const std::vector<std::string>& free_vars, const Structure& st);

// Internal fast path shared with the feature machinery: evaluation with
// object indices instead of names.
class Valuation {
public:
    explicit Valuation(const Structure& st);
    void bind(const std::string& var, int obj);
    void unbind(const std::string& var);
    bool eval(const FormulaRef& f);

private:
    const Structure& st_;
    std::vector<std::pair<std::string, int>> env_;
    int lookup(const Term& t) const;
};

} // namespace warrant

#endif
