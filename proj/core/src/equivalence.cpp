#include "warrant/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_map>

#include "warrant/errors.hpp"

namespace warrant {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

// Propositional DAG over ground atoms, produced by expanding quantifiers
// over a fixed universe and resolving terms against a fixed constant map
// and variable binding.
struct GroundDag {
    enum class Op : std::uint8_t { False_, True_, Lit, Star, Plus, Not, And, Or };

    struct Node {
        Op op;
        std::uint64_t bit = 0;  // Lit: global bit index; Star/Plus: pred/pair
        int pred = -1;
        int a = 0, b = 0;  // Star/Plus pair
        std::vector<int> kids;
    };

    std::vector<Node> nodes;
    std::unordered_map<std::string, int> cons;

    GroundDag() {
        nodes.push_back({Op::False_, 0, -1, 0, 0, {}});
        nodes.push_back({Op::True_, 0, -1, 0, 0, {}});
    }

    int intern(Node&& n) {
        std::string key;
        key.reserve(16 + n.kids.size() * 4);
        key += static_cast<char>(n.op);
        key += ':';
        key += std::to_string(n.bit);
        key += ':';
        key += std::to_string(n.pred);
        key += ':';
        key += std::to_string(n.a);
        key += ':';
        key += std::to_string(n.b);
        for (int k : n.kids) {
            key += ',';
            key += std::to_string(k);
        }
        auto it = cons.find(key);
        if (it != cons.end()) return it->second;
        nodes.push_back(std::move(n));
        int idx = static_cast<int>(nodes.size()) - 1;
        cons.emplace(std::move(key), idx);
        return idx;
    }

    int lit(std::uint64_t bit) { return intern({Op::Lit, bit, -1, 0, 0, {}}); }

    int closure_node(Op op, int pred, int a, int b) {
        return intern({op, 0, pred, a, b, {}});
    }

    int negate(int k) {
        if (k == 0) return 1;
        if (k == 1) return 0;
        if (nodes[k].op == Op::Not) return nodes[k].kids[0];
        return intern({Op::Not, 0, -1, 0, 0, {k}});
    }

    int junction(Op op, std::vector<int> kids) {
        const int dominant = op == Op::And ? 0 : 1;
        const int neutral = 1 - dominant;
        std::vector<int> flat;
        for (int k : kids) {
            if (k == dominant) return dominant;
            if (k == neutral) continue;
            if (nodes[k].op == op) {
                for (int kk : nodes[k].kids) flat.push_back(kk);
            } else {
                flat.push_back(k);
            }
        }
        std::sort(flat.begin(), flat.end());
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        if (flat.empty()) return neutral;
        if (flat.size() == 1) return flat[0];
        return intern({op, 0, -1, 0, 0, std::move(flat)});
    }
};

struct Env {
    std::vector<std::pair<std::string, int>> stack;

    int lookup(const std::string& v) const {
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            if (it->first == v) return it->second;
        }
        throw InputError("unbound free variable: " + v);
    }
};

// Layout of the structure bit string: atoms of the plain predicates
// first, then the closure-enabled ones, both groups in declaration order,
// tuple-lexicographic within a predicate. A structure is identified with
// the integer whose bit i is the truth of atom i; the enumeration visits
// structures in ascending integer order.
struct Layout {
    const Signature* sig;
    int n;
    std::vector<int> pred_order;            // layout position -> predicate idx
    std::vector<std::uint64_t> pred_offset; // by predicate idx
    std::vector<std::uint64_t> pred_size;   // by predicate idx
    std::uint64_t total_bits = 0;

    Layout(const Signature& s, int universe) : sig(&s), n(universe) {
        for (std::size_t p = 0; p < s.predicates().size(); ++p) {
            if (!s.is_closure_enabled(s.predicate(static_cast<int>(p)).name)) {
                pred_order.push_back(static_cast<int>(p));
            }
        }
        for (std::size_t p = 0; p < s.predicates().size(); ++p) {
            if (s.is_closure_enabled(s.predicate(static_cast<int>(p)).name)) {
                pred_order.push_back(static_cast<int>(p));
            }
        }
        pred_offset.assign(s.predicates().size(), 0);
        pred_size.assign(s.predicates().size(), 0);
        for (int p : pred_order) {
            pred_offset[p] = total_bits;
            pred_size[p] = ipow(n, s.predicate(p).arity);
            total_bits += pred_size[p];
        }
    }

    std::uint64_t bit_of(int pred, std::span<const int> objs) const {
        std::uint64_t idx = 0;
        for (int o : objs) idx = idx * n + static_cast<std::uint64_t>(o);
        return pred_offset[pred] + idx;
    }
};

class Grounder {
public:
    Grounder(GroundDag& dag, const Signature& sig, const Layout& layout,
             const std::vector<int>& constant_map)
        : dag_(dag), sig_(sig), layout_(layout), cmap_(constant_map) {}

    int ground(const FormulaRef& f, Env& env) {
        switch (f->kind()) {
        case Formula::Kind::True:
            return 1;
        case Formula::Kind::False:
            return 0;
        case Formula::Kind::Equal:
            return resolve(f->terms()[0], env) == resolve(f->terms()[1], env) ? 1 : 0;
        case Formula::Kind::Atom: {
            int pred = pred_index(f->pred());
            std::vector<int> objs;
            objs.reserve(f->terms().size());
            for (const auto& t : f->terms()) objs.push_back(resolve(t, env));
            return dag_.lit(layout_.bit_of(pred, objs));
        }
        case Formula::Kind::Closure: {
            int pred = pred_index(f->pred());
            int a = resolve(f->terms()[0], env);
            int b = resolve(f->terms()[1], env);
            if (f->closure_kind() == ClosureKind::Star && a == b) return 1;
            return dag_.closure_node(f->closure_kind() == ClosureKind::Star
                                         ? GroundDag::Op::Star
                                         : GroundDag::Op::Plus,
                                     pred, a, b);
        }
        case Formula::Kind::Not:
            return dag_.negate(ground(f->child(0), env));
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<int> kids;
            kids.reserve(f->children().size());
            const bool is_and = f->kind() == Formula::Kind::And;
            for (const auto& k : f->children()) {
                int g = ground(k, env);
                if (is_and && g == 0) return 0;
                if (!is_and && g == 1) return 1;
                kids.push_back(g);
            }
            return dag_.junction(is_and ? GroundDag::Op::And : GroundDag::Op::Or,
                                 std::move(kids));
        }
        case Formula::Kind::Implies: {
            int a = ground(f->child(0), env);
            if (a == 0) return 1;
            int b = ground(f->child(1), env);
            return dag_.junction(GroundDag::Op::Or, {dag_.negate(a), b});
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            const bool is_exists = f->kind() == Formula::Kind::Exists;
            std::vector<int> parts;
            expand(f, 0, env, is_exists, parts);
            return dag_.junction(is_exists ? GroundDag::Op::Or : GroundDag::Op::And,
                                 std::move(parts));
        }
        }
        throw InputError("ground: unknown node");
    }

private:
    void expand(const FormulaRef& f, std::size_t vi, Env& env, bool is_exists,
                std::vector<int>& parts) {
        if (vi == f->vars().size()) {
            parts.push_back(ground(f->child(0), env));
            return;
        }
        for (int o = 0; o < layout_.n; ++o) {
            env.stack.emplace_back(f->vars()[vi], o);
            expand(f, vi + 1, env, is_exists, parts);
            env.stack.pop_back();
            // Short-circuit once the junction is decided.
            if (!parts.empty()) {
                int last = parts.back();
                if ((is_exists && last == 1) || (!is_exists && last == 0)) return;
            }
        }
    }

    int resolve(const Term& t, const Env& env) const {
        if (t.is_var()) return env.lookup(t.name);
        auto c = sig_.constant_index(t.name);
        if (!c) throw InputError("unknown constant: " + t.name);
        return cmap_[*c];
    }

    int pred_index(const std::string& name) const {
        auto p = sig_.predicate_index(name);
        if (!p) throw InputError("unknown predicate: " + name);
        return *p;
    }

    GroundDag& dag_;
    const Signature& sig_;
    const Layout& layout_;
    const std::vector<int>& cmap_;
};

constexpr std::uint64_t kPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

constexpr int kMaxLightBits = 10;
constexpr int kMaxHeavyBits = 30;

// One (universe size, constant map) block of the sweep.
struct Block {
    const Signature& sig;
    Layout layout;
    std::vector<int> cmap;
    GroundDag dag;
    // Per binding: roots of the two formulas.
    std::vector<std::pair<int, int>> roots;
    std::vector<std::vector<int>> bindings;  // free var assignments
    std::vector<std::uint64_t> heavy_bits;   // ascending global positions
    std::vector<std::uint64_t> light_bits;   // ascending global positions
    std::vector<int> closure_active;         // predicate indices

    Block(const Signature& s, int n, std::vector<int> constant_map,
          const FormulaRef& f1, const FormulaRef& f2,
          const std::vector<std::string>& fv)
        : sig(s), layout(s, n), cmap(std::move(constant_map)) {
        Grounder g(dag, sig, layout, cmap);
        std::vector<int> assign(fv.size(), 0);
        for (;;) {
            Env env;
            for (std::size_t i = 0; i < fv.size(); ++i) {
                env.stack.emplace_back(fv[i], assign[i]);
            }
            roots.emplace_back(g.ground(f1, env), g.ground(f2, env));
            bindings.push_back(assign);
            int k = static_cast<int>(assign.size()) - 1;
            while (k >= 0 && assign[k] == n - 1) assign[k--] = 0;
            if (k < 0) break;
            ++assign[k];
        }
        classify_bits();
    }

    void classify_bits() {
        std::set<std::uint64_t> referenced;
        std::set<int> closure_preds;
        for (const auto& node : dag.nodes) {
            if (node.op == GroundDag::Op::Lit) referenced.insert(node.bit);
            if (node.op == GroundDag::Op::Star || node.op == GroundDag::Op::Plus) {
                closure_preds.insert(node.pred);
            }
        }
        closure_active.assign(closure_preds.begin(), closure_preds.end());
        for (int p : closure_active) {
            for (std::uint64_t i = 0; i < layout.pred_size[p]; ++i) {
                referenced.insert(layout.pred_offset[p] + i);
            }
        }
        std::vector<std::uint64_t> all(referenced.begin(), referenced.end());
        auto in_closure_pred = [&](std::uint64_t bit) {
            for (int p : closure_active) {
                if (bit >= layout.pred_offset[p] &&
                    bit < layout.pred_offset[p] + layout.pred_size[p]) {
                    return true;
                }
            }
            return false;
        };
        // Light bits swept in parallel lanes: a prefix of the referenced
        // bits, which keeps them less significant than every heavy bit so
        // the first violation found is the enumeration-least one. Bits of
        // predicates used under a closure must be heavy (the closure
        // tables are rebuilt from them).
        int take = 0;
        while (take < kMaxLightBits && take < static_cast<int>(all.size()) &&
               !in_closure_pred(all[take])) {
            ++take;
        }
        light_bits.assign(all.begin(), all.begin() + take);
        heavy_bits.assign(all.begin() + take, all.end());
        if (heavy_bits.size() > kMaxHeavyBits) {
            throw BudgetExceeded("equivalence-heavy-bits", kMaxHeavyBits);
        }
    }
};

struct Violation {
    std::uint64_t heavy_counter = 0;
    std::uint64_t lane = 0;
    std::size_t binding = 0;
};

class Sweep {
public:
    Sweep(Block& b) : b_(b) {
        k_ = static_cast<int>(b.light_bits.size());
        lanes_ = std::uint64_t(1) << k_;
        words_ = static_cast<int>((lanes_ + 63) / 64);
        tables_.assign(b.dag.nodes.size() * words_, 0);
        const int n = b.layout.n;
        rows_.assign(b.closure_active.size(), std::vector<std::uint64_t>(n, 0));
        star_.assign(b.sig.predicates().size(), {});
        plus_.assign(b.sig.predicates().size(), {});
        light_slot_.clear();
        for (int i = 0; i < k_; ++i) light_slot_[b.light_bits[i]] = i;
        heavy_slot_.clear();
        for (std::size_t i = 0; i < b.heavy_bits.size(); ++i) {
            heavy_slot_[b.heavy_bits[i]] = static_cast<int>(i);
        }
        final_mask_ = lanes_ % 64 == 0 ? ~0ull : ((1ull << (lanes_ % 64)) - 1);

        // Resolve every Lit node to its sweep slot once, off the hot path.
        resolved_.assign(b.dag.nodes.size(), -1);
        for (std::size_t i = 0; i < b.dag.nodes.size(); ++i) {
            if (b.dag.nodes[i].op != GroundDag::Op::Lit) continue;
            auto ls = light_slot_.find(b.dag.nodes[i].bit);
            if (ls != light_slot_.end()) {
                resolved_[i] = kLightFlag | ls->second;
                continue;
            }
            auto hs = heavy_slot_.find(b.dag.nodes[i].bit);
            if (hs != heavy_slot_.end()) resolved_[i] = hs->second;
        }
        closure_slots_.assign(b.closure_active.size(),
                              std::vector<int>(static_cast<std::size_t>(n) * n, -1));
        for (std::size_t ci = 0; ci < b.closure_active.size(); ++ci) {
            int p = b.closure_active[ci];
            for (int a = 0; a < n; ++a) {
                for (int bb = 0; bb < n; ++bb) {
                    std::uint64_t bit = b.layout.pred_offset[p] +
                                        static_cast<std::uint64_t>(a) * n + bb;
                    auto it = heavy_slot_.find(bit);
                    if (it != heavy_slot_.end()) {
                        closure_slots_[ci][static_cast<std::size_t>(a) * n + bb] =
                            it->second;
                    }
                }
            }
        }
    }

    // Sweeps all structures; returns the first violation or nullopt.
    std::optional<Violation> run() {
        const int H = static_cast<int>(b_.heavy_bits.size());
        const std::uint64_t heavy_count = std::uint64_t(1) << H;
        for (std::uint64_t hc = 0; hc < heavy_count; ++hc) {
                prepare_heavy(hc);
            std::optional<Violation> best;
            for (std::size_t bi = 0; bi < b_.roots.size(); ++bi) {
                auto lane = eval_pair(bi);
                if (!lane) continue;
                Violation v{hc, *lane, bi};
                if (!best || v.lane < best->lane ||
                    (v.lane == best->lane && v.binding < best->binding)) {
                    best = v;
                }
            }
            if (best) return best;
        }
        return std::nullopt;
    }

    bool heavy_bit(std::uint64_t hc, int slot) const {
        return (hc >> slot) & 1u;
    }

private:
    void prepare_heavy(std::uint64_t hc) {
        hc_ = hc;
        // Rebuild closure tables from the heavy assignment.
        const int n = b_.layout.n;
        for (std::size_t ci = 0; ci < b_.closure_active.size(); ++ci) {
            int p = b_.closure_active[ci];
            auto& reach = rows_[ci];
            std::fill(reach.begin(), reach.end(), 0);
            for (int a = 0; a < n; ++a) {
                for (int bb = 0; bb < n; ++bb) {
                    int slot = closure_slots_[ci][static_cast<std::size_t>(a) * n + bb];
                    if (slot >= 0 && heavy_bit(hc, slot)) {
                        reach[a] |= std::uint64_t(1) << bb;
                    }
                }
            }
            for (int k = 0; k < n; ++k) {
                const std::uint64_t row_k = reach[k];
                for (int a = 0; a < n; ++a) {
                    if ((reach[a] >> k) & 1u) reach[a] |= row_k;
                }
            }
            plus_[p] = reach;
            star_[p] = reach;
            for (int a = 0; a < n; ++a) star_[p][a] |= std::uint64_t(1) << a;
        }
        evaluated_upto_ = 0;
    }

    std::uint64_t* table(int node) { return &tables_[node * words_]; }

    void eval_nodes_upto(int root) {
        auto& nodes = b_.dag.nodes;
        for (int i = evaluated_upto_; i <= root; ++i) {
            std::uint64_t* t = table(i);
            const auto& nd = nodes[i];
            switch (nd.op) {
            case GroundDag::Op::False_:
                std::fill(t, t + words_, 0);
                break;
            case GroundDag::Op::True_:
                std::fill(t, t + words_, ~0ull);
                break;
            case GroundDag::Op::Lit: {
                int r = resolved_[i];
                if (r >= kLightFlag) {
                    int shift = r & ~kLightFlag;
                    if (shift < 6) {
                        std::fill(t, t + words_, kPattern[shift]);
                    } else {
                        for (int w = 0; w < words_; ++w) {
                            t[w] = ((static_cast<std::uint64_t>(w) >> (shift - 6)) & 1u)
                                       ? ~0ull
                                       : 0ull;
                        }
                    }
                } else {
                    bool v = r >= 0 && heavy_bit(hc_, r);
                    std::fill(t, t + words_, v ? ~0ull : 0ull);
                }
                break;
            }
            case GroundDag::Op::Star:
            case GroundDag::Op::Plus: {
                const auto& tab = nd.op == GroundDag::Op::Star ? star_ : plus_;
                bool v = (tab[nd.pred][nd.a] >> nd.b) & 1u;
                std::fill(t, t + words_, v ? ~0ull : 0ull);
                break;
            }
            case GroundDag::Op::Not: {
                const std::uint64_t* k = table(nd.kids[0]);
                for (int w = 0; w < words_; ++w) t[w] = ~k[w];
                break;
            }
            case GroundDag::Op::And:
            case GroundDag::Op::Or: {
                const bool is_and = nd.op == GroundDag::Op::And;
                std::fill(t, t + words_, is_and ? ~0ull : 0ull);
                for (int kid : nd.kids) {
                    const std::uint64_t* k = table(kid);
                    if (is_and) {
                        for (int w = 0; w < words_; ++w) t[w] &= k[w];
                    } else {
                        for (int w = 0; w < words_; ++w) t[w] |= k[w];
                    }
                }
                break;
            }
            }
        }
        if (root >= evaluated_upto_) evaluated_upto_ = root + 1;
    }

    // Returns the first differing lane for this binding, if any.
    std::optional<std::uint64_t> eval_pair(std::size_t bi) {
        int r1 = b_.roots[bi].first;
        int r2 = b_.roots[bi].second;
        eval_nodes_upto(std::max(r1, r2));
        const std::uint64_t* t1 = table(r1);
        const std::uint64_t* t2 = table(r2);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t diff = t1[w] ^ t2[w];
            if (w == words_ - 1) diff &= final_mask_;
            if (diff) {
                int bit = std::countr_zero(diff);
                return static_cast<std::uint64_t>(w) * 64 + bit;
            }
        }
        return std::nullopt;
    }

    Block& b_;
    int k_ = 0;
    std::uint64_t lanes_ = 1;
    int words_ = 1;
    std::uint64_t final_mask_ = ~0ull;
    std::uint64_t hc_ = 0;
    int evaluated_upto_ = 0;
    std::vector<std::uint64_t> tables_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::vector<std::uint64_t>> star_, plus_;
    std::unordered_map<std::uint64_t, int> light_slot_;
    std::unordered_map<std::uint64_t, int> heavy_slot_;
    static constexpr std::int32_t kLightFlag = 0x40000000;
    std::vector<std::int32_t> resolved_;
    std::vector<std::vector<int>> closure_slots_;
};

std::vector<std::string> universe_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (n <= 26) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        } else {
            names.push_back("o" + std::to_string(i));
        }
    }
    return names;
}

// Reconstructs the witness structure from sweep coordinates.
EquivCounterexample materialize(const Block& block, const Sweep& sweep,
                                const Violation& v,
                                std::shared_ptr<const Signature> sig,
                                const std::vector<std::string>& fv) {
    const int n = block.layout.n;
    auto names = universe_names(n);
    auto bit_value = [&](std::uint64_t bit) {
        for (std::size_t i = 0; i < block.light_bits.size(); ++i) {
            if (block.light_bits[i] == bit) {
                return ((v.lane >> i) & 1u) != 0;
            }
        }
        for (std::size_t i = 0; i < block.heavy_bits.size(); ++i) {
            if (block.heavy_bits[i] == bit) {
                return sweep.heavy_bit(v.heavy_counter, static_cast<int>(i));
            }
        }
        return false;  // unreferenced bits default to absent
    };

    std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
    for (std::size_t p = 0; p < sig->predicates().size(); ++p) {
        const auto& decl = sig->predicate(static_cast<int>(p));
        for (std::uint64_t i = 0; i < block.layout.pred_size[p]; ++i) {
            if (!bit_value(block.layout.pred_offset[p] + i)) continue;
            std::vector<std::string> args(decl.arity);
            std::uint64_t rest = i;
            for (int k = decl.arity - 1; k >= 0; --k) {
                args[k] = names[rest % n];
                rest /= n;
            }
            atoms.emplace_back(decl.name, std::move(args));
        }
    }
    std::map<std::string, std::string> cmap;
    for (std::size_t c = 0; c < sig->constants().size(); ++c) {
        cmap[sig->constants()[c]] = names[block.cmap[c]];
    }
    Structure st(sig, names, atoms, cmap);
    std::map<std::string, std::string> binding;
    for (std::size_t i = 0; i < fv.size(); ++i) {
        binding[fv[i]] = names[block.bindings[v.binding][i]];
    }
    return {std::move(st), std::move(binding)};
}

} // namespace

EquivResult semantically_equivalent(const FormulaRef& f1, const FormulaRef& f2,
                                    std::shared_ptr<const Signature> sig,
                                    int max_universe) {
    if (max_universe < 1) throw InputError("max_universe must be >= 1");
    check_well_formed(f1, *sig);
    check_well_formed(f2, *sig);

    std::set<std::string> fvset;
    collect_free_vars(f1, fvset);
    collect_free_vars(f2, fvset);
    std::vector<std::string> fv(fvset.begin(), fvset.end());

    const int c = static_cast<int>(sig->constants().size());
    const int n_min = std::max(1, c);
    if (n_min > max_universe) {
        throw InputError(
            "bound " + std::to_string(max_universe) +
            " is smaller than the number of constants (unique names need " +
            std::to_string(c) + " objects)");
    }

    EquivResult result;
    for (int n = n_min; n <= max_universe; ++n) {
        // Injective constant maps in lexicographic order.
        std::vector<int> cmap(c, 0);
        std::vector<bool> used(n, false);
        std::function<bool(int)> enumerate = [&](int ci) -> bool {
            if (ci == c) {
                Block block(*sig, n, cmap, f1, f2, fv);
                Sweep sweep(block);
                auto violation = sweep.run();
                std::uint64_t space = 1;
                for (const auto& p : sig->predicates()) {
                    std::uint64_t sz = ipow(static_cast<std::uint64_t>(n), p.arity);
                    std::uint64_t interps =
                        sz >= 64 ? UINT64_MAX : (std::uint64_t(1) << sz);
                    space = sat_mul(space, interps);
                }
                if (violation) {
                    // Count the heavy steps completed up to the violation.
                    std::uint64_t done = violation->heavy_counter;
                    std::uint64_t per_step =
                        block.layout.total_bits - block.heavy_bits.size() >= 64
                            ? UINT64_MAX
                            : std::uint64_t(1)
                                  << (block.layout.total_bits - block.heavy_bits.size());
                    result.structures_covered =
                        sat_add(result.structures_covered, sat_mul(done, per_step));
                    result.counterexample =
                        materialize(block, sweep, *violation, sig, fv);
                    return true;
                }
                result.structures_covered = sat_add(result.structures_covered, space);
                return false;
            }
            for (int o = 0; o < n; ++o) {
                if (used[o]) continue;
                used[o] = true;
                cmap[ci] = o;
                bool stop = enumerate(ci + 1);
                used[o] = false;
                if (stop) return true;
            }
            return false;
        };
        if (enumerate(0)) {
            result.equivalent = false;
            return result;
        }
    }
    result.equivalent = true;
    return result;
}

EquivResult bounded_valid(const FormulaRef& f,
                          std::shared_ptr<const Signature> sig,
                          int max_universe) {
    return semantically_equivalent(f, Formula::truth(), std::move(sig),
                                   max_universe);
}

EquivResult bounded_implies(const FormulaRef& f1, const FormulaRef& f2,
                            std::shared_ptr<const Signature> sig,
                            int max_universe) {
    return bounded_valid(Formula::implies(f1, f2), std::move(sig), max_universe);
}

} // namespace warrant
