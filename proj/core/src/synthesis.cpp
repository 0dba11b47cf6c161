#include "warrant/synthesis.hpp"

#include <algorithm>

#include "warrant/simplify.hpp"

namespace warrant {

namespace {

FormulaRef lift_rec(const SynthesisBase& base, const ActionSchema& schema,
                    const FormulaRef& f, CondKind kind, VarNamer& namer) {
    switch (f->kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Equal:
        return f;  // rigid: actions never change their denotation
    case Formula::Kind::Atom:
        return base.condition(kind, schema, f->pred(), f->terms());
    case Formula::Kind::Closure:
        if (f->closure_kind() == ClosureKind::Plus) {
            throw InputError(
                "lift: formula contains a transitive-closure atom on " +
                f->pred() + "; rewrite with eliminate_plus first");
        }
        return base.closure_condition(kind, schema, f->pred(), f->terms()[0],
                                      f->terms()[1], namer);
    case Formula::Kind::Not:
        return Formula::negation(
            lift_rec(base, schema, f->child(0), swap_cond(kind), namer));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::vector<FormulaRef> kids;
        kids.reserve(f->children().size());
        for (const auto& k : f->children()) {
            kids.push_back(lift_rec(base, schema, k, kind, namer));
        }
        return f->kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                               : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
        // a -> b is (not a) or b; the antecedent flips the condition kind.
        return Formula::implies(
            lift_rec(base, schema, f->child(0), swap_cond(kind), namer),
            lift_rec(base, schema, f->child(1), kind, namer));
    case Formula::Kind::Exists:
        return Formula::exists(f->vars(),
                               lift_rec(base, schema, f->child(0), kind, namer));
    case Formula::Kind::Forall:
        return Formula::forall(f->vars(),
                               lift_rec(base, schema, f->child(0), kind, namer));
    }
    throw InputError("lift: unknown node");
}

// Renames the formula's bound variables away from the schema parameters,
// then seeds a fresh-name source covering both.
FormulaRef prepare_for_lift(const ActionSchema& schema, const FormulaRef& f,
                            VarNamer& namer) {
    std::set<std::string> reserved(schema.params.begin(), schema.params.end());
    FormulaRef clean = avoid_bound_vars(f, reserved);
    namer.reserve_all_vars(clean);
    for (const auto& p : schema.params) namer.reserve(p);
    return clean;
}

} // namespace

FormulaRef lift(const SynthesisBase& base, const ActionSchema& schema,
                const FormulaRef& formula, CondKind kind) {
    VarNamer namer;
    FormulaRef clean = prepare_for_lift(schema, formula, namer);
    return lift_rec(base, schema, clean, kind, namer);
}

FormulaRef change_condition(const SynthesisBase& base, CondKind kind,
                            ChangeKind change, const Feature& feature,
                            const ActionSchema& schema) {
    const bool numerical = feature.kind == FeatureKind::Numerical;
    if ((change == ChangeKind::Inc || change == ChangeKind::Dec) && !numerical) {
        throw InputError("inc/dec change condition on boolean feature " +
                         feature.name);
    }
    if ((change == ChangeKind::ToTrue || change == ChangeKind::ToFalse) &&
        numerical) {
        throw InputError("true/false change condition on numerical feature " +
                         feature.name);
    }

    VarNamer namer;
    for (const auto& v : feature.concept_vars) namer.reserve(v);
    FormulaRef psi = prepare_for_lift(schema, eliminate_plus(feature.concept_formula),
                                      namer);
    const auto& xs = feature.concept_vars;

    auto lifted = [&](CondKind k) {
        VarNamer inner = namer;
        return lift_rec(base, schema, psi, k, inner);
    };
    FormulaRef same = lifted(kind);            // X^a_Psi
    FormulaRef swapped = lifted(swap_cond(kind));  // the hat version

    switch (change) {
    case ChangeKind::Inc:
        if (kind == CondKind::Sufficient) {
            // Strengthened form: no tuple leaves, some tuple enters.
            return Formula::conj(
                {Formula::forall(xs, Formula::implies(psi, same)),
                 Formula::exists(xs, Formula::conj({Formula::negation(psi), same}))});
        }
        return Formula::exists(xs, Formula::conj({Formula::negation(psi), same}));
    case ChangeKind::Dec:
        if (kind == CondKind::Sufficient) {
            return Formula::conj(
                {Formula::forall(xs, Formula::implies(swapped, psi)),
                 Formula::exists(xs,
                                 Formula::conj({psi, Formula::negation(swapped)}))});
        }
        return Formula::exists(xs, Formula::conj({psi, Formula::negation(swapped)}));
    case ChangeKind::Eq:
        return Formula::conj({Formula::forall(xs, Formula::implies(psi, same)),
                              Formula::forall(xs, Formula::implies(swapped, psi))});
    case ChangeKind::ToTrue:
        return Formula::exists(xs, same);
    case ChangeKind::ToFalse:
        return Formula::forall(xs, Formula::negation(swapped));
    }
    throw InputError("change_condition: unknown change kind");
}

namespace {

constexpr ChangeKind kChangeOrder[] = {ChangeKind::Inc, ChangeKind::Dec,
                                       ChangeKind::Eq, ChangeKind::ToTrue,
                                       ChangeKind::ToFalse};

const std::vector<int>& partition_of(const DeltaPartition& delta, ChangeKind c) {
    switch (c) {
    case ChangeKind::Inc:
        return delta.inc;
    case ChangeKind::Dec:
        return delta.dec;
    case ChangeKind::Eq:
        return delta.eq;
    case ChangeKind::ToTrue:
        return delta.set_true;
    case ChangeKind::ToFalse:
        return delta.set_false;
    }
    throw InputError("unknown change kind");
}

FormulaRef schema_precondition(const ActionSchema& schema) {
    std::vector<FormulaRef> atoms;
    for (const auto& a : schema.pre) {
        atoms.push_back(Formula::atom(a.pred, a.args));
    }
    return Formula::conj(std::move(atoms));
}

// Schema parameters renamed apart across the domain, so the assembled
// sentence can quantify them in one block.
std::vector<std::vector<std::string>>
disjoint_params(const DomainSchema& domain) {
    std::set<std::string> used;
    std::vector<std::vector<std::string>> out;
    for (const auto& schema : domain.schemas) {
        std::vector<std::string> params;
        for (const auto& p : schema.params) {
            std::string name = p;
            int suffix = 1;
            while (!used.insert(name).second) {
                name = p + "_" + schema.name + (suffix > 1 ? std::to_string(suffix) : "");
                ++suffix;
            }
            params.push_back(name);
        }
        out.push_back(std::move(params));
    }
    return out;
}

GuaranteeSet synthesize_impl(const Abstraction& abs, const DomainSchema& domain,
                             const SynthesisBase& base, bool sufficient,
                             bool necessary) {
    abs.validate();
    domain.validate();
    GuaranteeSet out;
    auto renamed = disjoint_params(domain);

    for (const auto& abar : abs.actions) {
        DeltaPartition delta = effect_partition(abar, abs.features);
        GuaranteeEntry suff_entry, nec_entry;
        suff_entry.abstract_action = abar.name;
        nec_entry.abstract_action = abar.name;
        suff_entry.precondition = simplify(pre_formula_all(abar, abs.features));
        nec_entry.precondition = suff_entry.precondition;

        std::vector<FormulaRef> suff_disjuncts, nec_disjuncts;
        std::vector<std::string> all_params;

        for (std::size_t si = 0; si < domain.schemas.size(); ++si) {
            const auto& schema = domain.schemas[si];

            auto assemble = [&](CondKind kind, bool with_abstract_pre) {
                std::vector<FormulaRef> parts{schema_precondition(schema)};
                for (ChangeKind change : kChangeOrder) {
                    for (int fi : partition_of(delta, change)) {
                        const Feature& f = abs.features[fi];
                        if (with_abstract_pre) {
                            parts.push_back(pre_formula(abar, f));
                        }
                        parts.push_back(
                            change_condition(base, kind, change, f, schema));
                    }
                }
                return simplify(Formula::conj(std::move(parts)));
            };

            std::map<std::string, Term> rename;
            for (std::size_t pi = 0; pi < schema.params.size(); ++pi) {
                if (renamed[si][pi] != schema.params[pi]) {
                    rename[schema.params[pi]] = Term::var(renamed[si][pi]);
                }
            }
            all_params.insert(all_params.end(), renamed[si].begin(),
                              renamed[si].end());

            if (sufficient) {
                FormulaRef psi = assemble(CondKind::Sufficient, true);
                suff_entry.disjuncts.emplace_back(schema.name, psi);
                suff_disjuncts.push_back(
                    rename.empty() ? psi : substitute(psi, rename));
            }
            if (necessary) {
                FormulaRef gamma = assemble(CondKind::Necessary, false);
                nec_entry.disjuncts.emplace_back(schema.name, gamma);
                nec_disjuncts.push_back(
                    rename.empty() ? gamma : substitute(gamma, rename));
            }
        }

        if (sufficient) {
            suff_entry.assembled = simplify(
                Formula::exists(all_params, Formula::disj(suff_disjuncts)));
            out.sufficient.push_back(std::move(suff_entry));
        }
        if (necessary) {
            nec_entry.assembled = simplify(
                Formula::exists(all_params, Formula::disj(nec_disjuncts)));
            out.necessary.push_back(std::move(nec_entry));
        }
    }
    return out;
}

} // namespace

const GuaranteeEntry* GuaranteeSet::sufficient_for(const std::string& action) const {
    for (const auto& e : sufficient) {
        if (e.abstract_action == action) return &e;
    }
    return nullptr;
}

const GuaranteeEntry* GuaranteeSet::necessary_for(const std::string& action) const {
    for (const auto& e : necessary) {
        if (e.abstract_action == action) return &e;
    }
    return nullptr;
}

GuaranteeSet synthesize_sufficient(const Abstraction& abs,
                                   const DomainSchema& domain,
                                   const SynthesisBase& base) {
    return synthesize_impl(abs, domain, base, true, false);
}

GuaranteeSet synthesize_necessary(const Abstraction& abs,
                                  const DomainSchema& domain,
                                  const SynthesisBase& base) {
    return synthesize_impl(abs, domain, base, false, true);
}

GuaranteeSet synthesize(const Abstraction& abs, const DomainSchema& domain,
                        const SynthesisBase& base) {
    return synthesize_impl(abs, domain, base, true, true);
}

} // namespace warrant
