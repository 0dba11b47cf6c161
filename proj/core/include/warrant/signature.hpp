#ifndef WARRANT_SIGNATURE_HPP
#define WARRANT_SIGNATURE_HPP

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "warrant/errors.hpp"

namespace warrant {

struct PredicateDecl {
    std::string name;
    int arity = 0;
};

// Relational signature of a planning domain: constant symbols, predicate
// symbols, and the set of binary predicates for which the derived closure
// relations p+ and p* exist. Constants obey the unique-names assumption:
// distinct constant symbols always denote distinct objects.
class Signature {
public:
    Signature() = default;
    Signature(std::vector<std::string> constants,
              std::vector<PredicateDecl> predicates,
              std::set<std::string> closure_enabled);

    // Convenience: closures enabled for every binary predicate.
    static Signature with_all_closures(std::vector<std::string> constants,
                                       std::vector<PredicateDecl> predicates);

    const std::vector<std::string>& constants() const { return constants_; }
    const std::vector<PredicateDecl>& predicates() const { return predicates_; }
    const std::set<std::string>& closure_enabled() const { return closure_enabled_; }

    std::optional<int> constant_index(const std::string& name) const;
    std::optional<int> predicate_index(const std::string& name) const;
    const PredicateDecl& predicate(int index) const { return predicates_[index]; }
    bool is_constant(const std::string& name) const;
    bool is_closure_enabled(const std::string& pred) const;

    bool operator==(const Signature& other) const;

private:
    std::vector<std::string> constants_;
    std::vector<PredicateDecl> predicates_;
    std::set<std::string> closure_enabled_;
    std::unordered_map<std::string, int> constant_idx_;
    std::unordered_map<std::string, int> predicate_idx_;
};

// A term is a variable or a constant of the signature. Which one a name
// denotes is resolved against the signature when parsing: declared
// constants resolve to constants, everything else to variables.
struct Term {
    enum class Kind { Variable, Constant };
    Kind kind = Kind::Variable;
    std::string name;

    static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
    static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
    bool is_var() const { return kind == Kind::Variable; }

    bool operator==(const Term& o) const { return kind == o.kind && name == o.name; }
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const {
        if (kind != o.kind) return kind < o.kind;
        return name < o.name;
    }
};

// Resolves a symbol to a term using the signature's constant table.
Term resolve_term(const Signature& sig, const std::string& name);

} // namespace warrant

#endif
