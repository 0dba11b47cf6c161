#include "warrant/simplify.hpp"

#include <algorithm>

namespace warrant {

namespace {

using Kind = Formula::Kind;

bool is_literal(const FormulaRef& f) {
    switch (f->kind()) {
    case Kind::Atom:
    case Kind::Closure:
    case Kind::Equal:
        return true;
    case Kind::Not:
        return is_literal(f->child(0));
    default:
        return false;
    }
}

FormulaRef complement_of(const FormulaRef& f) {
    if (f->kind() == Kind::Not) return f->child(0);
    return Formula::negation(f);
}

// Replaces occurrences of `target` by `value` (and of its complement by
// the negated value) inside f. Does not descend under quantifiers that
// rebind a free variable of `target`.
FormulaRef assume(const FormulaRef& f, const FormulaRef& target, bool value,
                  const std::set<std::string>& target_vars) {
    if (structurally_equal(f, target)) return Formula::boolean(value);
    if (f->kind() == Kind::Not && target->kind() != Kind::Not &&
        structurally_equal(f->child(0), target)) {
        return Formula::boolean(!value);
    }
    if (target->kind() == Kind::Not && structurally_equal(f, target->child(0))) {
        return Formula::boolean(!value);
    }
    switch (f->kind()) {
    case Kind::Not:
        return Formula::negation(assume(f->child(0), target, value, target_vars));
    case Kind::And:
    case Kind::Or: {
        std::vector<FormulaRef> kids;
        kids.reserve(f->children().size());
        for (const auto& k : f->children()) {
            kids.push_back(assume(k, target, value, target_vars));
        }
        return f->kind() == Kind::And ? Formula::conj(std::move(kids))
                                      : Formula::disj(std::move(kids));
    }
    case Kind::Implies:
        return Formula::implies(assume(f->child(0), target, value, target_vars),
                                assume(f->child(1), target, value, target_vars));
    case Kind::Exists:
    case Kind::Forall: {
        for (const auto& v : f->vars()) {
            if (target_vars.count(v)) return f;  // capture: stop here
        }
        FormulaRef body = assume(f->child(0), target, value, target_vars);
        if (body == f->child(0)) return f;
        return f->kind() == Kind::Exists ? Formula::exists(f->vars(), body)
                                         : Formula::forall(f->vars(), body);
    }
    default:
        return f;
    }
}

// Conjunction view of an existentially closed formula: prefix variables
// and a flat conjunct list, with nested Exists pulled up across And when
// no capture can occur. Dually (flip=true) a disjunction view of a
// universally closed formula.
struct FlatView {
    std::set<std::string> vars;
    std::vector<FormulaRef> parts;
};

bool flatten_into(const FormulaRef& f, bool universal, FlatView& out) {
    const Kind quant = universal ? Kind::Forall : Kind::Exists;
    const Kind junct = universal ? Kind::Or : Kind::And;
    if (f->kind() == quant) {
        for (const auto& v : f->vars()) {
            if (out.vars.count(v)) return false;  // shadowing: stay opaque
        }
        for (const auto& v : f->vars()) out.vars.insert(v);
        return flatten_into(f->child(0), universal, out);
    }
    if (f->kind() == junct) {
        // Pull nested quantified children up only when their variables
        // cannot capture anything in the siblings.
        std::vector<FormulaRef> plain;
        std::vector<FormulaRef> quantified;
        for (const auto& k : f->children()) {
            (k->kind() == quant ? quantified : plain).push_back(k);
        }
        std::set<std::string> sibling_free;
        for (const auto& k : f->children()) collect_free_vars(k, sibling_free);
        for (const auto& k : plain) out.parts.push_back(k);
        for (const auto& k : quantified) {
            bool risky = false;
            for (const auto& v : k->vars()) {
                if (sibling_free.count(v) || out.vars.count(v)) {
                    risky = true;
                    break;
                }
            }
            if (risky) {
                out.parts.push_back(k);
            } else if (!flatten_into(k, universal, out)) {
                return false;
            }
        }
        return true;
    }
    out.parts.push_back(f);
    return true;
}

FlatView flat_view(const FormulaRef& f, bool universal) {
    FlatView out;
    if (!flatten_into(f, universal, out)) {
        out.vars.clear();
        out.parts = {f};
    }
    return out;
}

bool part_subset(const std::vector<FormulaRef>& small,
                 const std::vector<FormulaRef>& big) {
    for (const auto& s : small) {
        bool found = false;
        for (const auto& b : big) {
            if (structurally_equal(s, b)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Conservative syntactic entailment: a implies b when provable by
// conjunct-set inclusion under matching existential prefixes (or
// disjunct-set inclusion under matching universal prefixes). Returns
// false when unsure.
bool syntactic_implies(const FormulaRef& a, const FormulaRef& b) {
    if (structurally_equal(a, b)) return true;
    {
        FlatView fa = flat_view(a, false);
        FlatView fb = flat_view(b, false);
        bool vars_ok = std::includes(fa.vars.begin(), fa.vars.end(),
                                     fb.vars.begin(), fb.vars.end());
        // A variable free in b but bound in a would silently change
        // meaning when its parts are matched against a's; reject.
        if (vars_ok) {
            std::set<std::string> b_free;
            collect_free_vars(b, b_free);
            for (const auto& v : fa.vars) {
                if (b_free.count(v)) {
                    vars_ok = false;
                    break;
                }
            }
        }
        if (vars_ok && part_subset(fb.parts, fa.parts)) return true;
    }
    {
        FlatView fa = flat_view(a, true);
        FlatView fb = flat_view(b, true);
        bool vars_ok = fa.vars == fb.vars;
        if (vars_ok) {
            std::set<std::string> a_free;
            collect_free_vars(a, a_free);
            for (const auto& v : fb.vars) {
                if (a_free.count(v)) {
                    vars_ok = false;
                    break;
                }
            }
        }
        if (vars_ok && part_subset(fa.parts, fb.parts)) return true;
    }
    return false;
}

class Simplifier {
public:
    FormulaRef run(FormulaRef f) {
        for (int round = 0; round < 20; ++round) {
            FormulaRef next = pass(f);
            if (structurally_equal(next, f)) break;
            f = next;
        }
        return presentation(f);
    }

private:
    FormulaRef pass(const FormulaRef& f) {
        switch (f->kind()) {
        case Kind::True:
        case Kind::False:
        case Kind::Atom:
            return f;
        case Kind::Closure:
            // p*(t,t) is reflexively true.
            if (f->closure_kind() == ClosureKind::Star &&
                f->terms()[0] == f->terms()[1]) {
                return Formula::truth();
            }
            return f;
        case Kind::Equal: {
            const Term& a = f->terms()[0];
            const Term& b = f->terms()[1];
            if (a == b) return Formula::truth();
            // Unique names: distinct constants denote distinct objects.
            if (!a.is_var() && !b.is_var()) return Formula::falsity();
            return f;
        }
        case Kind::Not: {
            FormulaRef k = pass(f->child(0));
            switch (k->kind()) {
            case Kind::True:
                return Formula::falsity();
            case Kind::False:
                return Formula::truth();
            case Kind::Not:
                return k->child(0);
            case Kind::And:
            case Kind::Or: {
                std::vector<FormulaRef> kids;
                for (const auto& c : k->children()) {
                    kids.push_back(Formula::negation(c));
                }
                FormulaRef pushed = k->kind() == Kind::And
                                        ? Formula::disj(std::move(kids))
                                        : Formula::conj(std::move(kids));
                return pass(pushed);
            }
            case Kind::Implies:
                return pass(Formula::conj(
                    {k->child(0), Formula::negation(k->child(1))}));
            case Kind::Exists:
                return pass(Formula::forall(k->vars(),
                                            Formula::negation(k->child(0))));
            case Kind::Forall:
                return pass(Formula::exists(k->vars(),
                                            Formula::negation(k->child(0))));
            default:
                return Formula::negation(k);
            }
        }
        case Kind::Implies:
            return pass(Formula::disj(
                {Formula::negation(f->child(0)), f->child(1)}));
        case Kind::And:
        case Kind::Or:
            return junction(f);
        case Kind::Exists:
        case Kind::Forall:
            return quantifier(f);
        }
        throw InputError("simplify: unknown node");
    }

    FormulaRef junction(const FormulaRef& f) {
        const bool is_and = f->kind() == Kind::And;
        const FormulaRef dominant = is_and ? Formula::falsity() : Formula::truth();
        const FormulaRef neutral = is_and ? Formula::truth() : Formula::falsity();

        // Simplify and flatten nested junctions of the same kind.
        std::vector<FormulaRef> kids;
        std::vector<FormulaRef> work(f->children().rbegin(), f->children().rend());
        while (!work.empty()) {
            FormulaRef k = pass(work.back());
            work.pop_back();
            if (k->kind() == f->kind()) {
                for (auto it = k->children().rbegin(); it != k->children().rend();
                     ++it) {
                    work.push_back(*it);
                }
                continue;
            }
            if (k->kind() == dominant->kind()) return dominant;
            if (k->kind() == neutral->kind()) continue;
            kids.push_back(std::move(k));
        }

        // Deduplicate, keeping first occurrences.
        for (std::size_t i = 0; i < kids.size(); ++i) {
            for (std::size_t j = i + 1; j < kids.size();) {
                if (structurally_equal(kids[i], kids[j])) {
                    kids.erase(kids.begin() + static_cast<long>(j));
                } else {
                    ++j;
                }
            }
        }

        // Unit propagation: each child may be assumed true (And) / false
        // (Or) while rewriting its siblings.
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (kids[i]->kind() == Kind::True || kids[i]->kind() == Kind::False) {
                continue;
            }
            std::set<std::string> tv;
            collect_free_vars(kids[i], tv);
            for (std::size_t j = 0; j < kids.size(); ++j) {
                if (i == j) continue;
                kids[j] = assume(kids[j], kids[i], is_and, tv);
            }
        }
        std::vector<FormulaRef> out;
        for (auto& k : kids) {
            FormulaRef s = pass(k);
            if (s->kind() == dominant->kind()) return dominant;
            if (s->kind() == neutral->kind()) continue;
            if (std::any_of(out.begin(), out.end(), [&](const FormulaRef& o) {
                    return structurally_equal(o, s);
                })) {
                continue;
            }
            // Complementary siblings decide the junction.
            FormulaRef comp = complement_of(s);
            if (std::any_of(out.begin(), out.end(), [&](const FormulaRef& o) {
                    return structurally_equal(o, comp);
                })) {
                return dominant;
            }
            out.push_back(std::move(s));
        }

        // Pairwise entailment between siblings: a stronger conjunct (or a
        // weaker disjunct) makes its sibling redundant, and a sibling
        // entailing another's complement decides the junction.
        if (out.size() >= 2 && out.size() <= 16) {
            std::vector<bool> dropped(out.size(), false);
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (dropped[i]) continue;
                for (std::size_t j = 0; j < out.size(); ++j) {
                    if (i == j || dropped[j]) continue;
                    bool redundant =
                        is_and ? syntactic_implies(out[j], out[i])
                               : syntactic_implies(out[i], out[j]);
                    if (redundant) {
                        bool mutual = is_and ? syntactic_implies(out[i], out[j])
                                             : syntactic_implies(out[j], out[i]);
                        if (!mutual || j < i) {
                            dropped[i] = true;
                            break;
                        }
                    }
                }
            }
            std::vector<FormulaRef> kept;
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (!dropped[i]) kept.push_back(out[i]);
            }
            for (std::size_t i = 0; i < kept.size(); ++i) {
                for (std::size_t j = i + 1; j < kept.size(); ++j) {
                    FormulaRef nj = pass(Formula::negation(kept[j]));
                    bool decides = is_and ? syntactic_implies(kept[i], nj)
                                          : syntactic_implies(nj, kept[i]);
                    if (decides) return dominant;
                }
            }
            out = std::move(kept);
        }
        return is_and ? Formula::conj(std::move(out)) : Formula::disj(std::move(out));
    }

    FormulaRef quantifier(const FormulaRef& f) {
        const bool is_exists = f->kind() == Kind::Exists;
        FormulaRef body = pass(f->child(0));

        // Merge directly nested quantifiers of the same kind.
        std::vector<std::string> vars = f->vars();
        while (body->kind() == f->kind()) {
            bool clash = false;
            for (const auto& v : body->vars()) {
                if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
                    clash = true;
                    break;
                }
            }
            if (clash) break;
            vars.insert(vars.end(), body->vars().begin(), body->vars().end());
            body = body->child(0);
        }

        // Drop vacuous variables.
        {
            std::set<std::string> fv;
            collect_free_vars(body, fv);
            std::vector<std::string> used;
            for (const auto& v : vars) {
                if (fv.count(v)) used.push_back(v);
            }
            vars = std::move(used);
        }
        if (vars.empty()) return body;

        // One-point rule: Exists y (... y=t ...) / Forall y (... not(y=t) or ...).
        const Kind host = is_exists ? Kind::And : Kind::Or;
        std::vector<FormulaRef> parts;
        if (body->kind() == host) {
            parts = body->children();
        } else {
            parts = {body};
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            FormulaRef eq = parts[i];
            if (!is_exists) {
                if (eq->kind() != Kind::Not) continue;
                eq = eq->child(0);
            }
            if (eq->kind() != Kind::Equal) continue;
            for (int side = 0; side < 2; ++side) {
                const Term& var_side = eq->terms()[side];
                const Term& other = eq->terms()[1 - side];
                if (!var_side.is_var()) continue;
                auto vit = std::find(vars.begin(), vars.end(), var_side.name);
                if (vit == vars.end()) continue;
                if (other == var_side) continue;
                std::vector<FormulaRef> rest;
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    if (j != i) rest.push_back(parts[j]);
                }
                FormulaRef reduced = is_exists ? Formula::conj(std::move(rest))
                                               : Formula::disj(std::move(rest));
                reduced = substitute(reduced, {{var_side.name, other}});
                std::vector<std::string> rem_vars;
                for (const auto& v : vars) {
                    if (v != var_side.name) rem_vars.push_back(v);
                }
                FormulaRef rebuilt = is_exists
                                         ? Formula::exists(rem_vars, reduced)
                                         : Formula::forall(rem_vars, reduced);
                return pass(rebuilt);
            }
        }

        // Scope narrowing: pull out parts with no quantified variable free.
        {
            std::vector<FormulaRef> inside, outside;
            for (const auto& p : parts) {
                std::set<std::string> fv;
                collect_free_vars(p, fv);
                bool uses = std::any_of(vars.begin(), vars.end(),
                                        [&](const std::string& v) {
                                            return fv.count(v) != 0;
                                        });
                (uses ? inside : outside).push_back(p);
            }
            if (!outside.empty() && !inside.empty()) {
                FormulaRef inner_body = is_exists ? Formula::conj(inside)
                                                  : Formula::disj(inside);
                FormulaRef quant = is_exists ? Formula::exists(vars, inner_body)
                                             : Formula::forall(vars, inner_body);
                outside.push_back(quant);
                return pass(is_exists ? Formula::conj(std::move(outside))
                                      : Formula::disj(std::move(outside)));
            }
            if (inside.empty()) {
                // Whole body independent of the variables (nonempty universe).
                return is_exists ? Formula::conj(std::move(outside))
                                 : Formula::disj(std::move(outside));
            }
        }

        if (body->kind() == Kind::True || body->kind() == Kind::False) return body;
        return is_exists ? Formula::exists(std::move(vars), std::move(body))
                         : Formula::forall(std::move(vars), std::move(body));
    }

    // Folds mixed disjunctions into implications and all-negative
    // disjunctions back into negated conjunctions, for readable output.
    FormulaRef presentation(const FormulaRef& f) {
        switch (f->kind()) {
        case Kind::Not: {
            FormulaRef k = presentation(f->child(0));
            return k == f->child(0) ? f : Formula::negation(k);
        }
        case Kind::And: {
            std::vector<FormulaRef> kids;
            for (const auto& k : f->children()) kids.push_back(presentation(k));
            return Formula::conj(std::move(kids));
        }
        case Kind::Or: {
            std::vector<FormulaRef> neg, pos;
            for (const auto& k : f->children()) {
                FormulaRef p = presentation(k);
                if (p->kind() == Kind::Not) {
                    neg.push_back(p->child(0));
                } else {
                    pos.push_back(p);
                }
            }
            if (!neg.empty() && !pos.empty()) {
                return Formula::implies(Formula::conj(std::move(neg)),
                                        Formula::disj(std::move(pos)));
            }
            if (pos.empty() && neg.size() > 1) {
                return Formula::negation(Formula::conj(std::move(neg)));
            }
            std::vector<FormulaRef> kids;
            for (auto& n : neg) kids.push_back(Formula::negation(std::move(n)));
            for (auto& p : pos) kids.push_back(std::move(p));
            return Formula::disj(std::move(kids));
        }
        case Kind::Implies:
            return Formula::implies(presentation(f->child(0)),
                                    presentation(f->child(1)));
        case Kind::Exists:
            return Formula::exists(f->vars(), presentation(f->child(0)));
        case Kind::Forall:
            return Formula::forall(f->vars(), presentation(f->child(0)));
        default:
            return f;
        }
    }
};

} // namespace

FormulaRef simplify(const FormulaRef& f) {
    Simplifier s;
    return s.run(f);
}

} // namespace warrant
