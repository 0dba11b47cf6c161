#include "warrant/strips.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace warrant {

std::vector<const SchemaAtom*> ActionSchema::deletes_of(const std::string& pred) const {
    std::vector<const SchemaAtom*> out;
    for (const auto& a : del) {
        if (a.pred == pred) out.push_back(&a);
    }
    return out;
}

std::vector<const SchemaAtom*> ActionSchema::adds_of(const std::string& pred) const {
    std::vector<const SchemaAtom*> out;
    for (const auto& a : add) {
        if (a.pred == pred) out.push_back(&a);
    }
    return out;
}

const ActionSchema* DomainSchema::schema(const std::string& name) const {
    for (const auto& s : schemas) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

void DomainSchema::validate() const {
    for (const auto& s : schemas) {
        std::set<std::string> params(s.params.begin(), s.params.end());
        if (params.size() != s.params.size()) {
            throw InputError("schema " + s.name + " has duplicate parameters");
        }
        auto check_atoms = [&](const std::vector<SchemaAtom>& atoms,
                               const char* where) {
            for (const auto& a : atoms) {
                auto p = signature->predicate_index(a.pred);
                if (!p) {
                    throw InputError("schema " + s.name + ": unknown predicate " +
                                     a.pred + " in " + where);
                }
                if (static_cast<int>(a.args.size()) !=
                    signature->predicate(*p).arity) {
                    throw InputError("schema " + s.name + ": arity mismatch for " +
                                     a.pred + " in " + where);
                }
                for (const auto& t : a.args) {
                    if (t.is_var()) {
                        if (!params.count(t.name)) {
                            throw InputError("schema " + s.name + ": argument " +
                                             t.name + " is not a parameter");
                        }
                    } else if (!signature->is_constant(t.name)) {
                        throw InputError("schema " + s.name + ": unknown constant " +
                                         t.name);
                    }
                }
            }
        };
        check_atoms(s.pre, "preconditions");
        check_atoms(s.add, "add effects");
        check_atoms(s.del, "delete effects");
        for (const auto& a : s.add) {
            if (std::find(s.del.begin(), s.del.end(), a) != s.del.end()) {
                throw InputError("schema " + s.name +
                                 " has contradictory effects on " + a.pred);
            }
        }
    }
}

std::string GroundAtom::to_string() const {
    std::string out = pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += args[i];
    }
    return out + ")";
}

std::size_t State::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// Instantiates a schema atom under an argument assignment.
GroundAtom instantiate(const SchemaAtom& atom, const ActionSchema& schema,
                       const std::vector<int>& args,
                       const std::vector<std::string>& universe,
                       const std::map<std::string, int>& object_idx) {
    GroundAtom out;
    out.pred = atom.pred;
    out.args.reserve(atom.args.size());
    for (const auto& t : atom.args) {
        if (t.is_var()) {
            auto it = std::find(schema.params.begin(), schema.params.end(), t.name);
            out.args.push_back(
                universe[args[std::distance(schema.params.begin(), it)]]);
        } else {
            auto oit = object_idx.find(t.name);
            if (oit == object_idx.end()) {
                throw InputError("constant " + t.name + " not in universe");
            }
            out.args.push_back(universe[oit->second]);
        }
    }
    return out;
}

} // namespace

Problem::Problem(std::shared_ptr<const Instance> inst, GroundOptions opts)
    : inst_(std::move(inst)) {
    const auto& dom = *inst_->domain;
    dom.validate();
    sig_ = dom.signature;

    for (const auto& c : sig_->constants()) {
        object_idx_.emplace(c, static_cast<int>(universe_.size()));
        universe_.push_back(c);
    }
    for (const auto& o : inst_->objects) {
        if (!object_idx_.emplace(o, static_cast<int>(universe_.size())).second) {
            throw InputError("instance object '" + o +
                             "' duplicates a constant or another object");
        }
        universe_.push_back(o);
    }
    if (universe_.empty()) throw InputError("instance has an empty universe");

    // Ground-atom vocabulary: predicate-major, tuples lexicographic.
    const int n = static_cast<int>(universe_.size());
    for (const auto& p : sig_->predicates()) {
        std::vector<int> tup(p.arity, 0);
        for (;;) {
            GroundAtom a;
            a.pred = p.name;
            for (int i : tup) a.args.push_back(universe_[i]);
            atom_idx_.emplace(std::make_pair(a.pred, a.args),
                              static_cast<int>(atoms_.size()));
            atoms_.push_back(std::move(a));
            int k = p.arity - 1;
            while (k >= 0 && tup[k] == n - 1) tup[k--] = 0;
            if (k < 0) break;
            ++tup[k];
        }
    }

    // Ground actions: schema declaration order, then argument tuples.
    for (std::size_t si = 0; si < dom.schemas.size(); ++si) {
        const auto& schema = dom.schemas[si];
        const int arity = static_cast<int>(schema.params.size());
        std::vector<int> args(arity, 0);
        for (;;) {
            bool keep = true;
            if (opts.all_different) {
                for (int i = 0; i < arity && keep; ++i) {
                    for (int j = i + 1; j < arity; ++j) {
                        if (args[i] == args[j]) {
                            keep = false;
                            break;
                        }
                    }
                }
            }
            if (keep) {
                GroundAction ga;
                ga.schema_index = static_cast<int>(si);
                ga.args = args;
                for (const auto& a : schema.pre) {
                    ga.pre.push_back(atom_id(
                        instantiate(a, schema, args, universe_, object_idx_)));
                }
                for (const auto& a : schema.add) {
                    ga.add.push_back(atom_id(
                        instantiate(a, schema, args, universe_, object_idx_)));
                }
                for (const auto& a : schema.del) {
                    ga.del.push_back(atom_id(
                        instantiate(a, schema, args, universe_, object_idx_)));
                }
                ga.name = schema.name + "(";
                for (int i = 0; i < arity; ++i) {
                    if (i) ga.name += ',';
                    ga.name += universe_[args[i]];
                }
                ga.name += ')';
                actions_.push_back(std::move(ga));
            }
            int k = arity - 1;
            while (k >= 0 && args[k] == n - 1) args[k--] = 0;
            if (k < 0) break;
            ++args[k];
        }
    }
}

int Problem::object_index(const std::string& name) const {
    auto it = object_idx_.find(name);
    if (it == object_idx_.end()) throw InputError("unknown object: " + name);
    return it->second;
}

int Problem::atom_id(const GroundAtom& a) const {
    auto it = atom_idx_.find(std::make_pair(a.pred, a.args));
    if (it == atom_idx_.end()) {
        throw InputError("atom outside the ground vocabulary: " + a.to_string());
    }
    return it->second;
}

State Problem::state_from_atoms(const std::vector<GroundAtom>& atoms) const {
    State s(atoms_.size());
    for (const auto& a : atoms) s.set(atom_id(a));
    return s;
}

std::vector<GroundAtom> Problem::atoms_of(const State& s) const {
    std::vector<GroundAtom> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (s.test(i)) out.push_back(atoms_[i]);
    }
    return out;
}

bool Problem::goal_satisfied(const State& s) const {
    for (const auto& g : inst_->goal) {
        if (!s.test(atom_id(g))) return false;
    }
    return true;
}

Structure Problem::structure_of(const State& s) const {
    std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (s.test(i)) atoms.emplace_back(atoms_[i].pred, atoms_[i].args);
    }
    return Structure(sig_, universe_, atoms);
}

std::vector<GroundAction> ground(const Instance& inst, GroundOptions opts) {
    Problem prob(std::make_shared<Instance>(inst), opts);
    return prob.actions();
}

bool applicable(const State& s, const GroundAction& a) {
    for (int p : a.pre) {
        if (!s.test(p)) return false;
    }
    return true;
}

State res(const State& s, const GroundAction& a) {
    if (!applicable(s, a)) {
        throw PreconditionViolation("action " + a.name +
                                    " is not applicable in this state");
    }
    State out = s;
    for (int d : a.del) out.reset(d);
    for (int ad : a.add) out.set(ad);
    return out;
}

ReachableSet reachable(const Problem& prob, std::uint64_t max_states) {
    if (max_states < 1) throw InputError("max_states must be >= 1");
    ReachableSet out;
    std::unordered_map<State, int, StateHash> index;
    State init = prob.initial_state();
    out.states.push_back(init);
    index.emplace(init, 0);
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int si = frontier.front();
        frontier.pop();
        for (std::size_t ai = 0; ai < prob.actions().size(); ++ai) {
            const auto& a = prob.actions()[ai];
            State cur = out.states[si];
            if (!applicable(cur, a)) continue;
            State nxt = res(cur, a);
            auto it = index.find(nxt);
            int ti;
            if (it == index.end()) {
                if (out.states.size() >= max_states) {
                    throw BudgetExceeded("max-states", max_states);
                }
                ti = static_cast<int>(out.states.size());
                out.states.push_back(nxt);
                index.emplace(std::move(nxt), ti);
                frontier.push(ti);
            } else {
                ti = it->second;
            }
            out.transitions.push_back({si, static_cast<int>(ai), ti});
        }
    }
    return out;
}

std::vector<State> all_states(const Problem& prob, std::uint64_t max_states) {
    const std::size_t n = prob.atom_count();
    if (n >= 64 || (std::uint64_t(1) << n) > max_states) {
        throw BudgetExceeded("max-states", max_states);
    }
    std::vector<State> out;
    out.reserve(std::size_t(1) << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        State s(n);
        for (std::size_t i = 0; i < n; ++i) {
            if ((bits >> i) & 1u) s.set(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace warrant
