#include "warrant/abstraction.hpp"

#include <algorithm>

namespace warrant {

std::string FeatureLiteral::to_string() const {
    switch (kind) {
    case LiteralKind::BoolTrue:
        return feature;
    case LiteralKind::BoolFalse:
        return "!" + feature;
    case LiteralKind::NumPositive:
        return feature + ">0";
    case LiteralKind::NumZero:
        return feature + "=0";
    }
    return feature;
}

std::string AbstractEffect::to_string() const {
    switch (kind) {
    case EffectKind::SetTrue:
        return feature;
    case EffectKind::SetFalse:
        return "!" + feature;
    case EffectKind::Inc:
        return feature + "++";
    case EffectKind::Dec:
        return feature + "--";
    }
    return feature;
}

std::optional<EffectKind> AbstractAction::effect_on(const std::string& feature) const {
    for (const auto& e : eff) {
        if (e.feature == feature) return e.kind;
    }
    return std::nullopt;
}

std::optional<LiteralKind>
AbstractAction::precondition_on(const std::string& feature) const {
    for (const auto& l : pre) {
        if (l.feature == feature) return l.kind;
    }
    return std::nullopt;
}

const Feature* Abstraction::feature(const std::string& name) const {
    for (const auto& f : features) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

const AbstractAction* Abstraction::action(const std::string& name) const {
    for (const auto& a : actions) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

namespace {

bool literal_matches_kind(const FeatureLiteral& l, FeatureKind k) {
    if (k == FeatureKind::Boolean) {
        return l.kind == LiteralKind::BoolTrue || l.kind == LiteralKind::BoolFalse;
    }
    return l.kind == LiteralKind::NumPositive || l.kind == LiteralKind::NumZero;
}

void check_literals(const Abstraction& abs, const std::vector<FeatureLiteral>& lits,
                    const std::string& where, bool require_consistent,
                    bool require_maximal) {
    std::map<std::string, LiteralKind> seen;
    for (const auto& l : lits) {
        const Feature* f = abs.feature(l.feature);
        if (!f) throw InputError(where + ": unknown feature " + l.feature);
        if (!literal_matches_kind(l, f->kind)) {
            throw InputError(where + ": literal " + l.to_string() +
                             " does not match the kind of feature " + l.feature);
        }
        auto [it, fresh] = seen.emplace(l.feature, l.kind);
        if (!fresh && require_consistent && it->second != l.kind) {
            throw InputError(where + ": inconsistent literals on feature " +
                             l.feature);
        }
    }
    if (require_maximal) {
        for (const auto& f : abs.features) {
            if (!seen.count(f.name)) {
                throw InputError(where + ": not maximal consistent, feature " +
                                 f.name + " unconstrained");
            }
        }
    }
}

} // namespace

void Abstraction::validate() const {
    std::set<std::string> names;
    for (const auto& f : features) {
        if (!names.insert(f.name).second) {
            throw InputError("duplicate feature name: " + f.name);
        }
        std::set<std::string> fv;
        collect_free_vars(f.concept_formula, fv);
        for (const auto& v : fv) {
            if (std::find(f.concept_vars.begin(), f.concept_vars.end(), v) ==
                f.concept_vars.end()) {
                throw InputError("feature " + f.name + ": concept has free variable " +
                                 v + " outside its tuple");
            }
        }
    }
    std::set<std::string> action_names;
    for (const auto& a : actions) {
        if (!action_names.insert(a.name).second) {
            throw InputError("duplicate abstract action name: " + a.name);
        }
        check_literals(*this, a.pre, "action " + a.name + " pre", true, false);
        std::map<std::string, EffectKind> eff_seen;
        for (const auto& e : a.eff) {
            const Feature* f = feature(e.feature);
            if (!f) {
                throw InputError("action " + a.name + ": unknown feature " +
                                 e.feature);
            }
            bool is_bool_eff =
                e.kind == EffectKind::SetTrue || e.kind == EffectKind::SetFalse;
            if (is_bool_eff != (f->kind == FeatureKind::Boolean)) {
                throw InputError("action " + a.name + ": effect " + e.to_string() +
                                 " does not match the kind of feature " + e.feature);
            }
            auto [it, fresh] = eff_seen.emplace(e.feature, e.kind);
            if (!fresh && it->second != e.kind) {
                throw InputError("action " + a.name +
                                 ": contradictory effects on feature " + e.feature);
            }
        }
    }
    check_literals(*this, init_lits, "init", true, true);
    check_literals(*this, goal_lits, "goal", true, false);
}

bool AbstractState::satisfies(const FeatureLiteral& lit) const {
    for (const auto& l : literals) {
        if (l.feature == lit.feature) return l.kind == lit.kind;
    }
    throw InputError("valuation has no literal for feature " + lit.feature);
}

bool AbstractState::satisfies_all(const std::vector<FeatureLiteral>& lits) const {
    return std::all_of(lits.begin(), lits.end(),
                       [&](const FeatureLiteral& l) { return satisfies(l); });
}

std::string AbstractState::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < literals.size(); ++i) {
        if (i) out += ", ";
        out += literals[i].to_string();
    }
    return out + "}";
}

FeatureEvaluator::FeatureEvaluator(const Abstraction& abs, const Problem& prob)
    : abs_(abs), prob_(prob) {}

FeatureEvaluator::Entry& FeatureEvaluator::entry(const State& s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) {
        Entry e;
        e.state = s;
        e.ext.resize(abs_.features.size());
        e.computed.assign(abs_.features.size(), false);
        it = cache_.emplace(s, std::move(e)).first;
    }
    return it->second;
}

const std::vector<std::vector<int>>& FeatureEvaluator::extension(int fi,
                                                                 const State& s) {
    Entry& e = entry(s);
    if (!e.computed[fi]) {
        const Feature& f = abs_.features[fi];
        Structure st = prob_.structure_of(s);
        Valuation val(st);
        const int n = st.object_count();
        const int k = static_cast<int>(f.concept_vars.size());
        std::vector<int> assign(k, 0);
        std::vector<std::vector<int>> tuples;
        for (;;) {
            for (int i = 0; i < k; ++i) val.bind(f.concept_vars[i], assign[i]);
            bool v = val.eval(f.concept_formula);
            for (int i = k - 1; i >= 0; --i) val.unbind(f.concept_vars[i]);
            if (v) tuples.push_back(assign);
            int i = k - 1;
            while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
            if (i < 0) break;
            ++assign[i];
        }
        e.ext[fi] = std::move(tuples);
        e.computed[fi] = true;
    }
    return e.ext[fi];
}

std::uint64_t FeatureEvaluator::extension_size(int fi, const State& s) {
    return extension(fi, s).size();
}

AbstractState FeatureEvaluator::valuation(const State& s) {
    AbstractState v;
    for (std::size_t fi = 0; fi < abs_.features.size(); ++fi) {
        const Feature& f = abs_.features[fi];
        const bool nonempty = extension_size(static_cast<int>(fi), s) > 0;
        FeatureLiteral lit;
        lit.feature = f.name;
        if (f.kind == FeatureKind::Boolean) {
            lit.kind = nonempty ? LiteralKind::BoolTrue : LiteralKind::BoolFalse;
        } else {
            lit.kind = nonempty ? LiteralKind::NumPositive : LiteralKind::NumZero;
        }
        v.literals.push_back(std::move(lit));
    }
    return v;
}

AbstractState valuation(const Abstraction& abs, const Problem& prob,
                        const State& s) {
    FeatureEvaluator eval(abs, prob);
    return eval.valuation(s);
}

bool abstract_applicable(const AbstractAction& a, const AbstractState& v) {
    return v.satisfies_all(a.pre);
}

ReprVerdict represents(const AbstractAction& abar, const GroundAction& a,
                       FeatureEvaluator& eval, const State& s) {
    if (!applicable(s, a)) {
        return {false, ReprClause::Pre, a.name + " is not applicable"};
    }
    AbstractState v = eval.valuation(s);
    if (!abstract_applicable(abar, v)) {
        return {false, ReprClause::Pre,
                abar.name + " is not applicable in " + v.to_string()};
    }
    State s2 = res(s, a);
    const auto& features = eval.abstraction().features;
    for (std::size_t fi = 0; fi < features.size(); ++fi) {
        const Feature& f = features[fi];
        auto effect = abar.effect_on(f.name);
        if (f.kind == FeatureKind::Boolean) {
            bool before = eval.extension_size(static_cast<int>(fi), s) > 0;
            bool after = eval.extension_size(static_cast<int>(fi), s2) > 0;
            if (before != after) {
                EffectKind need = after ? EffectKind::SetTrue : EffectKind::SetFalse;
                if (effect != need) {
                    return {false, ReprClause::BoolFlip,
                            "feature " + f.name + " flips to " +
                                (after ? "true" : "false") +
                                " without a matching effect"};
                }
            }
            if (effect == EffectKind::SetTrue && !after) {
                return {false, ReprClause::BoolEffect,
                        "effect " + f.name + " not achieved"};
            }
            if (effect == EffectKind::SetFalse && after) {
                return {false, ReprClause::BoolEffect,
                        "effect !" + f.name + " not achieved"};
            }
        } else {
            std::uint64_t before = eval.extension_size(static_cast<int>(fi), s);
            std::uint64_t after = eval.extension_size(static_cast<int>(fi), s2);
            bool wants_dec = effect == EffectKind::Dec;
            bool wants_inc = effect == EffectKind::Inc;
            if (wants_dec != (after < before) || wants_inc != (before < after)) {
                return {false, ReprClause::Numeric,
                        "feature " + f.name + " moved " + std::to_string(before) +
                            " -> " + std::to_string(after) +
                            ", effects say " +
                            (wants_inc ? "inc" : wants_dec ? "dec" : "unchanged")};
            }
        }
    }
    return {true, ReprClause::Pre, ""};
}

ComplianceReport complies(const Abstraction& abs, const Problem& prob,
                          Scope scope, std::uint64_t max_states) {
    FeatureEvaluator eval(abs, prob);
    // Clause 1: the initial state is consistent with the init literals.
    State init = prob.initial_state();
    AbstractState v0 = eval.valuation(init);
    for (const auto& lit : abs.init_lits) {
        if (!v0.satisfies(lit)) {
            return {false,
                    "initial state is inconsistent with abstract init literal " +
                        lit.to_string(),
                    init};
        }
    }
    // Clause 2: states consistent with the goal literals are goal states.
    std::vector<State> states;
    if (scope == Scope::Reachable) {
        states = reachable(prob, max_states).states;
    } else {
        states = all_states(prob, max_states);
    }
    for (const auto& s : states) {
        AbstractState v = eval.valuation(s);
        if (v.satisfies_all(abs.goal_lits) && !prob.goal_satisfied(s)) {
            return {false,
                    "state consistent with the abstract goal is not a goal state",
                    s};
        }
    }
    return {true, "", std::nullopt};
}

MonotonicityReport monotone(const Feature& feature, const Abstraction& abs,
                            const Problem& prob, std::uint64_t max_states) {
    int fi = -1;
    for (std::size_t i = 0; i < abs.features.size(); ++i) {
        if (abs.features[i].name == feature.name) {
            fi = static_cast<int>(i);
            break;
        }
    }
    if (fi < 0) throw InputError("feature not in abstraction: " + feature.name);
    FeatureEvaluator eval(abs, prob);
    auto rs = reachable(prob, max_states);
    for (const auto& tr : rs.transitions) {
        const auto& before = eval.extension(fi, rs.states[tr.from]);
        const auto& after = eval.extension(fi, rs.states[tr.to]);
        // Both extension lists are sorted; containment via set inclusion.
        bool fwd = std::includes(after.begin(), after.end(), before.begin(),
                                 before.end());
        bool bwd = std::includes(before.begin(), before.end(), after.begin(),
                                 after.end());
        if (!fwd && !bwd) {
            return {false, tr,
                    "extension of " + feature.name +
                        " is incomparable across transition via " +
                        prob.actions()[tr.action].name};
        }
    }
    return {true, std::nullopt, ""};
}

DeltaPartition effect_partition(const AbstractAction& a,
                                const std::vector<Feature>& features) {
    DeltaPartition out;
    for (std::size_t fi = 0; fi < features.size(); ++fi) {
        auto e = a.effect_on(features[fi].name);
        int i = static_cast<int>(fi);
        if (!e) {
            out.eq.push_back(i);
        } else {
            switch (*e) {
            case EffectKind::Inc:
                out.inc.push_back(i);
                break;
            case EffectKind::Dec:
                out.dec.push_back(i);
                break;
            case EffectKind::SetTrue:
                out.set_true.push_back(i);
                break;
            case EffectKind::SetFalse:
                out.set_false.push_back(i);
                break;
            }
        }
    }
    return out;
}

FormulaRef pre_formula(const AbstractAction& a, const Feature& feature) {
    auto lit = a.precondition_on(feature.name);
    if (!lit) return Formula::truth();
    if (*lit == LiteralKind::BoolTrue || *lit == LiteralKind::NumPositive) {
        return Formula::exists(feature.concept_vars, feature.concept_formula);
    }
    return Formula::forall(feature.concept_vars,
                           Formula::negation(feature.concept_formula));
}

FormulaRef pre_formula_all(const AbstractAction& a,
                           const std::vector<Feature>& features) {
    std::vector<FormulaRef> parts;
    for (const auto& f : features) {
        FormulaRef p = pre_formula(a, f);
        if (p->kind() != Formula::Kind::True) parts.push_back(p);
    }
    return Formula::conj(std::move(parts));
}

std::optional<std::string> Policy::choose(const AbstractState& v) const {
    for (const auto& r : rules) {
        if (v.satisfies_all(r.condition)) return r.action;
    }
    return std::nullopt;
}

} // namespace warrant
