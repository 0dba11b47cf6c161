#include "warrant/formula.hpp"

#include <algorithm>
#include <functional>

namespace warrant {

FormulaRef make_formula(Formula&& f) {
    return std::make_shared<const Formula>(std::move(f));
}

FormulaRef Formula::truth() {
    static const FormulaRef t = make_formula(Formula(Kind::True));
    return t;
}

FormulaRef Formula::falsity() {
    static const FormulaRef f = make_formula(Formula(Kind::False));
    return f;
}

FormulaRef Formula::atom(std::string pred, std::vector<Term> terms) {
    Formula f(Kind::Atom);
    f.pred_ = std::move(pred);
    f.terms_ = std::move(terms);
    return make_formula(std::move(f));
}

FormulaRef Formula::closure(std::string pred, ClosureKind kind, Term a, Term b) {
    Formula f(Kind::Closure);
    f.pred_ = std::move(pred);
    f.ckind_ = kind;
    f.terms_ = {std::move(a), std::move(b)};
    return make_formula(std::move(f));
}

FormulaRef Formula::equal(Term a, Term b) {
    Formula f(Kind::Equal);
    f.terms_ = {std::move(a), std::move(b)};
    return make_formula(std::move(f));
}

FormulaRef Formula::negation(FormulaRef f) {
    Formula g(Kind::Not);
    g.kids_ = {std::move(f)};
    return make_formula(std::move(g));
}

FormulaRef Formula::conj(std::vector<FormulaRef> kids) {
    if (kids.empty()) return truth();
    if (kids.size() == 1) return kids[0];
    Formula f(Kind::And);
    f.kids_ = std::move(kids);
    return make_formula(std::move(f));
}

FormulaRef Formula::disj(std::vector<FormulaRef> kids) {
    if (kids.empty()) return falsity();
    if (kids.size() == 1) return kids[0];
    Formula f(Kind::Or);
    f.kids_ = std::move(kids);
    return make_formula(std::move(f));
}

FormulaRef Formula::implies(FormulaRef a, FormulaRef b) {
    Formula f(Kind::Implies);
    f.kids_ = {std::move(a), std::move(b)};
    return make_formula(std::move(f));
}

FormulaRef Formula::exists(std::vector<std::string> vars, FormulaRef body) {
    if (vars.empty()) return body;
    Formula f(Kind::Exists);
    f.vars_ = std::move(vars);
    f.kids_ = {std::move(body)};
    return make_formula(std::move(f));
}

FormulaRef Formula::forall(std::vector<std::string> vars, FormulaRef body) {
    if (vars.empty()) return body;
    Formula f(Kind::Forall);
    f.vars_ = std::move(vars);
    f.kids_ = {std::move(body)};
    return make_formula(std::move(f));
}

FormulaRef Formula::tuple_equal(const std::vector<Term>& a,
                                const std::vector<Term>& b) {
    if (a.size() != b.size()) {
        throw InputError("tuple equality over tuples of different length");
    }
    std::vector<FormulaRef> eqs;
    eqs.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) eqs.push_back(equal(a[i], b[i]));
    return conj(std::move(eqs));
}

FormulaRef Formula::tuple_not_equal(const std::vector<Term>& a,
                                    const std::vector<Term>& b) {
    return negation(tuple_equal(a, b));
}

bool structurally_equal(const FormulaRef& a, const FormulaRef& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    if (a->pred() != b->pred()) return false;
    if (a->kind() == Formula::Kind::Closure &&
        a->closure_kind() != b->closure_kind()) {
        return false;
    }
    if (a->terms() != b->terms()) return false;
    if (a->vars() != b->vars()) return false;
    if (a->children().size() != b->children().size()) return false;
    for (std::size_t i = 0; i < a->children().size(); ++i) {
        if (!structurally_equal(a->child(i), b->child(i))) return false;
    }
    return true;
}

std::size_t structural_hash(const FormulaRef& f) {
    auto mix = [](std::size_t h, std::size_t v) {
        return h * 1000003u ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    };
    std::size_t h = static_cast<std::size_t>(f->kind());
    h = mix(h, std::hash<std::string>()(f->pred()));
    if (f->kind() == Formula::Kind::Closure) {
        h = mix(h, static_cast<std::size_t>(f->closure_kind()));
    }
    for (const auto& t : f->terms()) {
        h = mix(h, static_cast<std::size_t>(t.kind));
        h = mix(h, std::hash<std::string>()(t.name));
    }
    for (const auto& v : f->vars()) h = mix(h, std::hash<std::string>()(v));
    for (const auto& k : f->children()) h = mix(h, structural_hash(k));
    return h;
}

namespace {

void free_vars_rec(const FormulaRef& f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
    switch (f->kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Closure:
    case Formula::Kind::Equal:
        for (const auto& t : f->terms()) {
            if (t.is_var() && !bound.count(t.name)) out.insert(t.name);
        }
        return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
        std::vector<std::string> added;
        for (const auto& v : f->vars()) {
            if (bound.insert(v).second) added.push_back(v);
        }
        free_vars_rec(f->child(0), bound, out);
        for (const auto& v : added) bound.erase(v);
        return;
    }
    default:
        for (const auto& k : f->children()) free_vars_rec(k, bound, out);
        return;
    }
}

} // namespace

void collect_free_vars(const FormulaRef& f, std::set<std::string>& out) {
    std::set<std::string> bound;
    free_vars_rec(f, bound, out);
}

std::vector<std::string> free_vars(const FormulaRef& f) {
    std::set<std::string> out;
    collect_free_vars(f, out);
    return {out.begin(), out.end()};
}

void collect_all_vars(const FormulaRef& f, std::set<std::string>& out) {
    for (const auto& t : f->terms()) {
        if (t.is_var()) out.insert(t.name);
    }
    for (const auto& v : f->vars()) out.insert(v);
    for (const auto& k : f->children()) collect_all_vars(k, out);
}

void VarNamer::reserve_all_vars(const FormulaRef& f) {
    collect_all_vars(f, taken_);
}

std::string VarNamer::fresh(const std::string& base) {
    if (taken_.insert(base).second) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (taken_.insert(cand).second) return cand;
    }
}

namespace {

Term subst_term(const Term& t, const std::map<std::string, Term>& subst) {
    if (t.is_var()) {
        auto it = subst.find(t.name);
        if (it != subst.end()) return it->second;
    }
    return t;
}

FormulaRef substitute_rec(const FormulaRef& f,
                          std::map<std::string, Term> subst) {
    if (subst.empty()) return f;
    switch (f->kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
        return f;
    case Formula::Kind::Atom: {
        std::vector<Term> ts;
        ts.reserve(f->terms().size());
        for (const auto& t : f->terms()) ts.push_back(subst_term(t, subst));
        return Formula::atom(f->pred(), std::move(ts));
    }
    case Formula::Kind::Closure:
        return Formula::closure(f->pred(), f->closure_kind(),
                                subst_term(f->terms()[0], subst),
                                subst_term(f->terms()[1], subst));
    case Formula::Kind::Equal:
        return Formula::equal(subst_term(f->terms()[0], subst),
                              subst_term(f->terms()[1], subst));
    case Formula::Kind::Not:
        return Formula::negation(substitute_rec(f->child(0), subst));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::vector<FormulaRef> kids;
        kids.reserve(f->children().size());
        for (const auto& k : f->children()) kids.push_back(substitute_rec(k, subst));
        return f->kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                               : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
        return Formula::implies(substitute_rec(f->child(0), subst),
                                substitute_rec(f->child(1), subst));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
        // Bound variables shadow the substitution; rename a binder when a
        // substituted term would be captured by it.
        std::set<std::string> capture_risk;
        for (const auto& [from, to] : subst) {
            (void)from;
            if (to.is_var()) capture_risk.insert(to.name);
        }
        std::vector<std::string> vars = f->vars();
        std::map<std::string, Term> inner = subst;
        std::map<std::string, Term> renames;
        for (auto& v : vars) {
            inner.erase(v);
            if (capture_risk.count(v)) {
                std::set<std::string> taken;
                collect_all_vars(f, taken);
                for (const auto& [from, to] : inner) {
                    taken.insert(from);
                    if (to.is_var()) taken.insert(to.name);
                }
                for (const auto& [from, to] : renames) {
                    taken.insert(from);
                    taken.insert(to.name);
                }
                VarNamer namer(std::move(taken));
                std::string nv = namer.fresh(v);
                renames[v] = Term::var(nv);
                v = nv;
            }
        }
        FormulaRef body = f->child(0);
        if (!renames.empty()) body = substitute_rec(body, renames);
        body = substitute_rec(body, inner);
        return f->kind() == Formula::Kind::Exists
                   ? Formula::exists(std::move(vars), std::move(body))
                   : Formula::forall(std::move(vars), std::move(body));
    }
    }
    throw InputError("substitute: unknown node");
}

} // namespace

FormulaRef substitute(const FormulaRef& f,
                      const std::map<std::string, Term>& subst) {
    return substitute_rec(f, subst);
}

namespace {

FormulaRef avoid_rec(const FormulaRef& f, const std::set<std::string>& reserved,
                     VarNamer& namer) {
    switch (f->kind()) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
        std::vector<std::string> vars = f->vars();
        std::map<std::string, Term> renames;
        for (auto& v : vars) {
            if (reserved.count(v)) {
                std::string nv = namer.fresh(v);
                renames[v] = Term::var(nv);
                v = nv;
            }
        }
        FormulaRef body = avoid_rec(f->child(0), reserved, namer);
        if (!renames.empty()) body = substitute(body, renames);
        return f->kind() == Formula::Kind::Exists
                   ? Formula::exists(std::move(vars), std::move(body))
                   : Formula::forall(std::move(vars), std::move(body));
    }
    case Formula::Kind::Not:
        return Formula::negation(avoid_rec(f->child(0), reserved, namer));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::vector<FormulaRef> kids;
        for (const auto& k : f->children()) kids.push_back(avoid_rec(k, reserved, namer));
        return f->kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                               : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
        return Formula::implies(avoid_rec(f->child(0), reserved, namer),
                                avoid_rec(f->child(1), reserved, namer));
    default:
        return f;
    }
}

} // namespace

FormulaRef avoid_bound_vars(const FormulaRef& f,
                            const std::set<std::string>& reserved) {
    VarNamer namer;
    namer.reserve_all_vars(f);
    for (const auto& r : reserved) namer.reserve(r);
    return avoid_rec(f, reserved, namer);
}

std::string to_sexpr(const FormulaRef& f) {
    switch (f->kind()) {
    case Formula::Kind::True:
        return "true";
    case Formula::Kind::False:
        return "false";
    case Formula::Kind::Atom: {
        std::string out = "(" + f->pred();
        for (const auto& t : f->terms()) out += " " + t.name;
        return out + ")";
    }
    case Formula::Kind::Closure: {
        std::string op = f->pred() + (f->closure_kind() == ClosureKind::Star ? "*" : "+");
        return "(" + op + " " + f->terms()[0].name + " " + f->terms()[1].name + ")";
    }
    case Formula::Kind::Equal:
        return "(= " + f->terms()[0].name + " " + f->terms()[1].name + ")";
    case Formula::Kind::Not:
        return "(not " + to_sexpr(f->child(0)) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::string out = f->kind() == Formula::Kind::And ? "(and" : "(or";
        for (const auto& k : f->children()) out += " " + to_sexpr(k);
        return out + ")";
    }
    case Formula::Kind::Implies:
        return "(implies " + to_sexpr(f->child(0)) + " " + to_sexpr(f->child(1)) + ")";
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
        std::string out = f->kind() == Formula::Kind::Exists ? "(exists (" : "(forall (";
        for (std::size_t i = 0; i < f->vars().size(); ++i) {
            if (i) out += ' ';
            out += f->vars()[i];
        }
        return out + ") " + to_sexpr(f->child(0)) + ")";
    }
    }
    return "?";
}

namespace {

void check_term(const Term& t, const Signature& sig) {
    if (!t.is_var() && !sig.is_constant(t.name)) {
        throw InputError("unknown constant: " + t.name);
    }
}

} // namespace

void check_well_formed(const FormulaRef& f, const Signature& sig) {
    switch (f->kind()) {
    case Formula::Kind::Atom: {
        auto idx = sig.predicate_index(f->pred());
        if (!idx) throw InputError("unknown predicate: " + f->pred());
        int arity = sig.predicate(*idx).arity;
        if (static_cast<int>(f->terms().size()) != arity) {
            throw InputError("predicate " + f->pred() + " expects " +
                             std::to_string(arity) + " arguments, got " +
                             std::to_string(f->terms().size()));
        }
        for (const auto& t : f->terms()) check_term(t, sig);
        return;
    }
    case Formula::Kind::Closure: {
        auto idx = sig.predicate_index(f->pred());
        if (!idx) throw InputError("unknown predicate: " + f->pred());
        if (sig.predicate(*idx).arity != 2) {
            throw InputError("closure atom on non-binary predicate: " + f->pred());
        }
        if (!sig.is_closure_enabled(f->pred())) {
            throw InputError("closure not enabled for predicate: " + f->pred());
        }
        for (const auto& t : f->terms()) check_term(t, sig);
        return;
    }
    case Formula::Kind::Equal:
        for (const auto& t : f->terms()) check_term(t, sig);
        return;
    default:
        for (const auto& k : f->children()) check_well_formed(k, sig);
        return;
    }
}

} // namespace warrant
