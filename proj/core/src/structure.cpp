#include "warrant/structure.hpp"

#include <algorithm>

namespace warrant {

namespace {

inline bool bit_test(const std::vector<std::uint64_t>& bits, std::uint64_t i) {
    return (bits[i >> 6] >> (i & 63)) & 1u;
}

inline void bit_set(std::vector<std::uint64_t>& bits, std::uint64_t i) {
    bits[i >> 6] |= std::uint64_t(1) << (i & 63);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

Structure::Structure(
    std::shared_ptr<const Signature> sig, std::vector<std::string> universe,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& atoms,
    const std::map<std::string, std::string>& constant_map)
    : sig_(std::move(sig)), universe_(std::move(universe)) {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (!object_idx_.emplace(universe_[i], static_cast<int>(i)).second) {
            throw InputError("duplicate universe object: " + universe_[i]);
        }
    }
    const auto& consts = sig_->constants();
    constant_map_.resize(consts.size());
    for (std::size_t c = 0; c < consts.size(); ++c) {
        auto it = constant_map.find(consts[c]);
        const std::string& target = it == constant_map.end() ? consts[c] : it->second;
        auto oit = object_idx_.find(target);
        if (oit == object_idx_.end()) {
            throw InputError("constant " + consts[c] + " denotes unknown object '" +
                             target + "'");
        }
        constant_map_[c] = oit->second;
    }

    const auto n = static_cast<std::uint64_t>(universe_.size());
    rels_.resize(sig_->predicates().size());
    pred_size_.resize(sig_->predicates().size());
    for (std::size_t p = 0; p < sig_->predicates().size(); ++p) {
        pred_size_[p] = ipow(n, sig_->predicate(static_cast<int>(p)).arity);
        rels_[p].assign((pred_size_[p] + 63) / 64, 0);
    }

    for (const auto& [pred, args] : atoms) {
        auto pidx = sig_->predicate_index(pred);
        if (!pidx) throw InputError("unknown predicate in atom: " + pred);
        int arity = sig_->predicate(*pidx).arity;
        if (static_cast<int>(args.size()) != arity) {
            throw InputError("atom " + pred + " has wrong arity");
        }
        std::vector<int> objs;
        objs.reserve(args.size());
        for (const auto& a : args) objs.push_back(object_index(a));
        bit_set(rels_[*pidx], tuple_index(*pidx, objs));
    }

    compute_closures();
}

int Structure::object_index(const std::string& name) const {
    auto it = object_idx_.find(name);
    if (it == object_idx_.end()) throw InputError("unknown object: " + name);
    return it->second;
}

std::uint64_t Structure::tuple_index(int pred_idx, std::span<const int> objs) const {
    const auto n = static_cast<std::uint64_t>(universe_.size());
    std::uint64_t idx = 0;
    for (int o : objs) idx = idx * n + static_cast<std::uint64_t>(o);
    (void)pred_idx;
    return idx;
}

bool Structure::holds(int pred_idx, std::span<const int> objs) const {
    if (static_cast<int>(objs.size()) != sig_->predicate(pred_idx).arity) {
        throw InputError("arity mismatch for predicate " +
                         sig_->predicate(pred_idx).name);
    }
    if (pred_size_[pred_idx] == 0) return false;
    return bit_test(rels_[pred_idx], tuple_index(pred_idx, objs));
}

bool Structure::closure_holds(int pred_idx, ClosureKind kind, int a, int b) const {
    const auto& table = kind == ClosureKind::Star ? star_ : plus_;
    if (table[pred_idx].empty()) {
        throw InputError("closure not enabled for predicate " +
                         sig_->predicate(pred_idx).name);
    }
    const auto n = static_cast<std::uint64_t>(universe_.size());
    return bit_test(table[pred_idx], static_cast<std::uint64_t>(a) * n + b);
}

std::vector<std::vector<int>> Structure::tuples(int pred_idx) const {
    std::vector<std::vector<int>> out;
    int arity = sig_->predicate(pred_idx).arity;
    const int n = object_count();
    std::vector<int> tup(arity, 0);
    for (std::uint64_t i = 0; i < pred_size_[pred_idx]; ++i) {
        if (bit_test(rels_[pred_idx], i)) {
            std::uint64_t rest = i;
            for (int k = arity - 1; k >= 0; --k) {
                tup[k] = static_cast<int>(rest % n);
                rest /= n;
            }
            out.push_back(tup);
        }
    }
    return out;
}

void Structure::compute_closures() {
    const int n = object_count();
    plus_.resize(sig_->predicates().size());
    star_.resize(sig_->predicates().size());
    for (std::size_t p = 0; p < sig_->predicates().size(); ++p) {
        const auto& decl = sig_->predicate(static_cast<int>(p));
        if (!sig_->is_closure_enabled(decl.name)) continue;
        // Warshall over adjacency rows; fine for the universe sizes we use.
        std::vector<std::uint64_t> reach(n, 0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (bit_test(rels_[p], static_cast<std::uint64_t>(a) * n + b)) {
                    reach[a] |= std::uint64_t(1) << b;
                }
            }
        }
        for (int k = 0; k < n; ++k) {
            const std::uint64_t row_k = reach[k];
            for (int a = 0; a < n; ++a) {
                if ((reach[a] >> k) & 1u) reach[a] |= row_k;
            }
        }
        auto& plus = plus_[p];
        auto& star = star_[p];
        plus.assign((static_cast<std::uint64_t>(n) * n + 63) / 64, 0);
        star = plus;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                std::uint64_t idx = static_cast<std::uint64_t>(a) * n + b;
                if ((reach[a] >> b) & 1u) {
                    bit_set(plus, idx);
                    bit_set(star, idx);
                }
                if (a == b) bit_set(star, idx);
            }
        }
    }
}

Valuation::Valuation(const Structure& st) : st_(st) {}

void Valuation::bind(const std::string& var, int obj) {
    env_.emplace_back(var, obj);
}

void Valuation::unbind(const std::string& var) {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
        if (it->first == var) {
            env_.erase(std::next(it).base());
            return;
        }
    }
}

int Valuation::lookup(const Term& t) const {
    if (t.is_var()) {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
            if (it->first == t.name) return it->second;
        }
        throw InputError("unbound free variable: " + t.name);
    }
    auto c = st_.signature().constant_index(t.name);
    if (!c) throw InputError("unknown constant: " + t.name);
    return st_.constant_object(*c);
}

bool Valuation::eval(const FormulaRef& f) {
    switch (f->kind()) {
    case Formula::Kind::True:
        return true;
    case Formula::Kind::False:
        return false;
    case Formula::Kind::Atom: {
        auto pidx = st_.signature().predicate_index(f->pred());
        if (!pidx) throw InputError("unknown predicate: " + f->pred());
        std::vector<int> objs;
        objs.reserve(f->terms().size());
        for (const auto& t : f->terms()) objs.push_back(lookup(t));
        return st_.holds(*pidx, objs);
    }
    case Formula::Kind::Closure: {
        auto pidx = st_.signature().predicate_index(f->pred());
        if (!pidx) throw InputError("unknown predicate: " + f->pred());
        return st_.closure_holds(*pidx, f->closure_kind(),
                                 lookup(f->terms()[0]), lookup(f->terms()[1]));
    }
    case Formula::Kind::Equal:
        return lookup(f->terms()[0]) == lookup(f->terms()[1]);
    case Formula::Kind::Not:
        return !eval(f->child(0));
    case Formula::Kind::And:
        for (const auto& k : f->children()) {
            if (!eval(k)) return false;
        }
        return true;
    case Formula::Kind::Or:
        for (const auto& k : f->children()) {
            if (eval(k)) return true;
        }
        return false;
    case Formula::Kind::Implies:
        return !eval(f->child(0)) || eval(f->child(1));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
        const bool is_exists = f->kind() == Formula::Kind::Exists;
        const int n = st_.object_count();
        // Nested loop over all assignments to the quantified variables.
        std::vector<int> assign(f->vars().size(), 0);
        if (f->vars().empty()) return eval(f->child(0));
        for (;;) {
            for (std::size_t i = 0; i < f->vars().size(); ++i) {
                bind(f->vars()[i], assign[i]);
            }
            bool v = eval(f->child(0));
            for (auto it = f->vars().rbegin(); it != f->vars().rend(); ++it) {
                unbind(*it);
            }
            if (is_exists && v) return true;
            if (!is_exists && !v) return false;
            int k = static_cast<int>(assign.size()) - 1;
            while (k >= 0 && assign[k] == n - 1) assign[k--] = 0;
            if (k < 0) break;
            ++assign[k];
        }
        return !is_exists;
    }
    }
    throw InputError("evaluate: unknown node");
}

bool evaluate(const FormulaRef& f, const Structure& st,
              const std::map<std::string, std::string>& binding) {
    Valuation val(st);
    for (const auto& [var, obj] : binding) {
        val.bind(var, st.object_index(obj));
    }
    return val.eval(f);
}

std::vector<std::pair<std::string, std::string>>
closure(const Structure& st, const std::string& pred, ClosureKind kind) {
    auto pidx = st.signature().predicate_index(pred);
    if (!pidx) throw InputError("unknown predicate: " + pred);
    if (st.signature().predicate(*pidx).arity != 2) {
        throw InputError("closure of non-binary predicate: " + pred);
    }
    std::vector<std::pair<std::string, std::string>> out;
    const int n = st.object_count();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (st.closure_holds(*pidx, kind, a, b)) {
                out.emplace_back(st.object_name(a), st.object_name(b));
            }
        }
    }
    return out;
}

std::vector<std::vector<std::string>>
extension(const FormulaRef& concept_formula,
          const std::vector<std::string>& free_vars_list, const Structure& st) {
    std::set<std::string> fv;
    collect_free_vars(concept_formula, fv);
    for (const auto& v : fv) {
        if (std::find(free_vars_list.begin(), free_vars_list.end(), v) ==
            free_vars_list.end()) {
            throw InputError("concept formula has free variable '" + v +
                             "' outside the declared tuple");
        }
    }
    std::vector<std::vector<std::string>> out;
    const int n = st.object_count();
    const int k = static_cast<int>(free_vars_list.size());
    Valuation val(st);
    std::vector<int> assign(k, 0);
    for (;;) {
        for (int i = 0; i < k; ++i) val.bind(free_vars_list[i], assign[i]);
        bool v = val.eval(concept_formula);
        for (int i = k - 1; i >= 0; --i) val.unbind(free_vars_list[i]);
        if (v) {
            std::vector<std::string> names;
            names.reserve(k);
            for (int i = 0; i < k; ++i) names.push_back(st.object_name(assign[i]));
            out.push_back(std::move(names));
        }
        int i = k - 1;
        while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return out;
}

} // namespace warrant
