#include "warrant/signature.hpp"

namespace warrant {

Signature::Signature(std::vector<std::string> constants,
                     std::vector<PredicateDecl> predicates,
                     std::set<std::string> closure_enabled)
    : constants_(std::move(constants)),
      predicates_(std::move(predicates)),
      closure_enabled_(std::move(closure_enabled)) {
    for (std::size_t i = 0; i < constants_.size(); ++i) {
        if (!constant_idx_.emplace(constants_[i], static_cast<int>(i)).second) {
            throw InputError("duplicate constant: " + constants_[i]);
        }
    }
    for (std::size_t i = 0; i < predicates_.size(); ++i) {
        const auto& p = predicates_[i];
        if (p.arity < 0) throw InputError("negative arity for predicate " + p.name);
        if (constant_idx_.count(p.name)) {
            throw InputError("name used for both constant and predicate: " + p.name);
        }
        if (!predicate_idx_.emplace(p.name, static_cast<int>(i)).second) {
            throw InputError("duplicate predicate: " + p.name);
        }
    }
    for (const auto& name : closure_enabled_) {
        auto it = predicate_idx_.find(name);
        if (it == predicate_idx_.end()) {
            throw InputError("closure enabled for unknown predicate: " + name);
        }
        if (predicates_[it->second].arity != 2) {
            throw InputError("closure enabled for non-binary predicate: " + name);
        }
    }
}

Signature Signature::with_all_closures(std::vector<std::string> constants,
                                       std::vector<PredicateDecl> predicates) {
    std::set<std::string> closures;
    for (const auto& p : predicates) {
        if (p.arity == 2) closures.insert(p.name);
    }
    return Signature(std::move(constants), std::move(predicates), std::move(closures));
}

std::optional<int> Signature::constant_index(const std::string& name) const {
    auto it = constant_idx_.find(name);
    if (it == constant_idx_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Signature::predicate_index(const std::string& name) const {
    auto it = predicate_idx_.find(name);
    if (it == predicate_idx_.end()) return std::nullopt;
    return it->second;
}

bool Signature::is_constant(const std::string& name) const {
    return constant_idx_.count(name) != 0;
}

bool Signature::is_closure_enabled(const std::string& pred) const {
    return closure_enabled_.count(pred) != 0;
}

bool Signature::operator==(const Signature& other) const {
    if (constants_ != other.constants_) return false;
    if (closure_enabled_ != other.closure_enabled_) return false;
    if (predicates_.size() != other.predicates_.size()) return false;
    for (std::size_t i = 0; i < predicates_.size(); ++i) {
        if (predicates_[i].name != other.predicates_[i].name ||
            predicates_[i].arity != other.predicates_[i].arity) {
            return false;
        }
    }
    return true;
}

Term resolve_term(const Signature& sig, const std::string& name) {
    if (sig.is_constant(name)) return Term::constant(name);
    return Term::var(name);
}

} // namespace warrant
