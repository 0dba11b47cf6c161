#ifndef WARRANT_STRIPS_HPP
#define WARRANT_STRIPS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "warrant/signature.hpp"
#include "warrant/structure.hpp"

namespace warrant {

// Atom over schema parameters and domain constants.
struct SchemaAtom {
    std::string pred;
    std::vector<Term> args;

    bool operator==(const SchemaAtom& o) const {
        return pred == o.pred && args == o.args;
    }
};

struct ActionSchema {
    std::string name;
    std::vector<std::string> params;
    std::vector<SchemaAtom> pre, add, del;

    // Delete effects of a predicate, in declaration order.
    std::vector<const SchemaAtom*> deletes_of(const std::string& pred) const;
    std::vector<const SchemaAtom*> adds_of(const std::string& pred) const;
};

struct DomainSchema {
    std::shared_ptr<const Signature> signature;
    std::vector<ActionSchema> schemas;

    const ActionSchema* schema(const std::string& name) const;
    // Throws InputError when a schema is ill-formed over the signature
    // (unknown predicate/argument, arity, add/del overlap).
    void validate() const;
};

// Ground atom over a fixed instance universe.
struct GroundAtom {
    std::string pred;
    std::vector<std::string> args;

    bool operator==(const GroundAtom& o) const {
        return pred == o.pred && args == o.args;
    }
    std::string to_string() const;
};

struct Instance {
    std::shared_ptr<const DomainSchema> domain;
    std::vector<std::string> objects;  // instance objects, constants excluded
    std::vector<GroundAtom> init, goal;
};

// Fixed-size bitset keyed by ground-atom ids.
class State {
public:
    State() = default;
    explicit State(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    std::size_t size() const { return nbits_; }

    bool operator==(const State& o) const { return words_ == o.words_; }
    bool operator<(const State& o) const { return words_ < o.words_; }
    std::size_t hash() const;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateHash {
    std::size_t operator()(const State& s) const { return s.hash(); }
};

struct GroundAction {
    int schema_index = 0;
    std::vector<int> args;  // universe object indices
    // Precomputed ground pre/add/del as atom ids.
    std::vector<int> pre, add, del;

    std::string name;  // "Schema(o1,o2)" for reports
};

struct GroundOptions {
    bool all_different = false;  // injective argument tuples
};

// Grounding context for one instance: the universe (constants first, then
// instance objects), the interned ground-atom vocabulary, and the ground
// actions in lexicographic order (schema declaration order, then argument
// tuples by object index).
class Problem {
public:
    Problem(std::shared_ptr<const Instance> inst, GroundOptions opts = {});

    const Instance& instance() const { return *inst_; }
    const DomainSchema& domain() const { return *inst_->domain; }
    const Signature& signature() const { return *domain().signature; }

    const std::vector<std::string>& universe() const { return universe_; }
    int object_index(const std::string& name) const;

    std::size_t atom_count() const { return atoms_.size(); }
    const GroundAtom& atom(int id) const { return atoms_[id]; }
    int atom_id(const GroundAtom& a) const;  // throws InputError if unknown

    const std::vector<GroundAction>& actions() const { return actions_; }

    State state_from_atoms(const std::vector<GroundAtom>& atoms) const;
    std::vector<GroundAtom> atoms_of(const State& s) const;
    State initial_state() const { return state_from_atoms(inst_->init); }
    bool goal_satisfied(const State& s) const;

    Structure structure_of(const State& s) const;

private:
    std::shared_ptr<const Instance> inst_;
    std::vector<std::string> universe_;
    std::map<std::string, int> object_idx_;
    std::vector<GroundAtom> atoms_;
    std::map<std::pair<std::string, std::vector<std::string>>, int> atom_idx_;
    std::vector<GroundAction> actions_;
    std::shared_ptr<const Signature> sig_;
};

// All ground instantiations of the domain's schemas over the instance
// universe; repeated objects in a tuple are allowed unless all_different.
std::vector<GroundAction> ground(const Instance& inst, GroundOptions opts = {});

bool applicable(const State& s, const GroundAction& a);

// Successor state (s \ del) ∪ add; throws PreconditionViolation when a is
// not applicable in s.
State res(const State& s, const GroundAction& a);

struct Transition {
    int from = 0;
    int action = 0;  // index into Problem::actions()
    int to = 0;
};

struct ReachableSet {
    std::vector<State> states;  // BFS discovery order; index 0 is init
    std::vector<Transition> transitions;
};

// BFS over all ground actions from the initial state. Deterministic:
// states are discovered in BFS order with actions tried in lexicographic
// order. Throws BudgetExceeded("max-states") when the state set would
// exceed max_states.
ReachableSet reachable(const Problem& prob, std::uint64_t max_states);

// Every subset of the ground-atom vocabulary. Guarded by max_states.
std::vector<State> all_states(const Problem& prob, std::uint64_t max_states);

} // namespace warrant

#endif
