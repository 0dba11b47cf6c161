#include "warrant/base.hpp"

namespace warrant {

FormulaRef bracket(const BracketExpr& expr, const ActionSchema& schema) {
    const bool over_adds = expr.polarity == BracketPolarity::InPost;
    auto effects = over_adds ? schema.adds_of(expr.pred) : schema.deletes_of(expr.pred);
    for (const auto* atom : effects) {
        if (atom->args.size() != expr.args.size()) {
            throw InputError("bracket arity mismatch on predicate " + expr.pred);
        }
    }
    if (expr.polarity == BracketPolarity::NegNotInPost) {
        std::vector<FormulaRef> parts;
        for (const auto* atom : effects) {
            parts.push_back(Formula::tuple_not_equal(expr.args, atom->args));
        }
        return Formula::conj(std::move(parts));  // top when nothing is deleted
    }
    std::vector<FormulaRef> parts;
    for (const auto* atom : effects) {
        parts.push_back(Formula::tuple_equal(expr.args, atom->args));
    }
    return Formula::disj(std::move(parts));  // bottom when no matching effect
}

FormulaRef base_atom(CondKind kind, const ActionSchema& schema,
                     const std::string& pred, std::span<const Term> args) {
    (void)kind;  // the atom row is the same for both kinds
    std::vector<Term> xs(args.begin(), args.end());
    FormulaRef in_post = bracket({BracketPolarity::InPost, pred, xs}, schema);
    FormulaRef survives = Formula::conj(
        {Formula::atom(pred, xs),
         bracket({BracketPolarity::NegNotInPost, pred, xs}, schema)});
    return Formula::disj({in_post, survives});
}

FormulaRef base_star(CondKind kind, const ActionSchema& schema,
                     const std::string& pred, const Term& x, const Term& y,
                     bool amended, VarNamer& namer) {
    if (x.is_var()) namer.reserve(x.name);
    if (y.is_var()) namer.reserve(y.name);
    for (const auto& p : schema.params) namer.reserve(p);
    Term u = Term::var(namer.fresh("u"));
    Term v = Term::var(namer.fresh("v"));
    std::vector<Term> uv{u, v};
    FormulaRef added_uv = bracket({BracketPolarity::InPost, pred, uv}, schema);

    if (kind == CondKind::Necessary) {
        // Variant by the number of p-atoms the schema adds, read off the
        // schema statically: at most one keeps the conjunction, two or
        // more weaken it to a disjunction. Adding none makes the second
        // disjunct vacuous either way.
        const bool adds_many = schema.adds_of(pred).size() >= 2;
        FormulaRef reach =
            adds_many
                ? Formula::disj({Formula::closure(pred, ClosureKind::Star, x, u),
                                 Formula::closure(pred, ClosureKind::Star, v, y)})
                : Formula::conj({Formula::closure(pred, ClosureKind::Star, x, u),
                                 Formula::closure(pred, ClosureKind::Star, v, y)});
        return Formula::disj(
            {Formula::closure(pred, ClosureKind::Star, x, y),
             Formula::exists({u.name, v.name},
                             Formula::conj({added_uv, reach}))});
    }

    FormulaRef no_cut = Formula::forall(
        {u.name, v.name},
        Formula::implies(bracket({BracketPolarity::NegInPost, pred, uv}, schema),
                         Formula::equal(u, v)));
    std::vector<FormulaRef> disjuncts{
        Formula::equal(x, y),
        Formula::conj({Formula::closure(pred, ClosureKind::Star, x, y), no_cut})};
    if (amended) {
        FormulaRef removes_nothing = Formula::forall(
            {u.name, v.name},
            bracket({BracketPolarity::NegNotInPost, pred, uv}, schema));
        FormulaRef bridges = Formula::exists(
            {u.name, v.name},
            Formula::conj({added_uv,
                           Formula::closure(pred, ClosureKind::Star, x, u),
                           Formula::closure(pred, ClosureKind::Star, v, y)}));
        disjuncts.push_back(Formula::conj({removes_nothing, bridges}));
    }
    return Formula::disj(std::move(disjuncts));
}

FormulaRef GeneralBase::condition(CondKind kind, const ActionSchema& schema,
                                  const std::string& pred,
                                  std::span<const Term> args) const {
    return base_atom(kind, schema, pred, args);
}

FormulaRef GeneralBase::closure_condition(CondKind kind,
                                          const ActionSchema& schema,
                                          const std::string& pred, const Term& x,
                                          const Term& y, VarNamer& namer) const {
    return base_star(kind, schema, pred, x, y, amended_star_.count(pred) != 0,
                     namer);
}

FormulaRef TrivialBase::condition(CondKind kind, const ActionSchema&,
                                  const std::string&, std::span<const Term>) const {
    return kind == CondKind::Sufficient ? Formula::falsity() : Formula::truth();
}

FormulaRef TrivialBase::closure_condition(CondKind kind, const ActionSchema&,
                                          const std::string&, const Term&,
                                          const Term&, VarNamer&) const {
    return kind == CondKind::Sufficient ? Formula::falsity() : Formula::truth();
}

namespace {

FormulaRef eliminate_plus_rec(const FormulaRef& f, VarNamer& namer) {
    switch (f->kind()) {
    case Formula::Kind::Closure:
        if (f->closure_kind() == ClosureKind::Plus) {
            std::string z = namer.fresh("w");
            return Formula::exists(
                {z},
                Formula::conj(
                    {Formula::atom(f->pred(), {f->terms()[0], Term::var(z)}),
                     Formula::closure(f->pred(), ClosureKind::Star, Term::var(z),
                                      f->terms()[1])}));
        }
        return f;
    case Formula::Kind::Not:
        return Formula::negation(eliminate_plus_rec(f->child(0), namer));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        std::vector<FormulaRef> kids;
        for (const auto& k : f->children()) {
            kids.push_back(eliminate_plus_rec(k, namer));
        }
        return f->kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                               : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
        return Formula::implies(eliminate_plus_rec(f->child(0), namer),
                                eliminate_plus_rec(f->child(1), namer));
    case Formula::Kind::Exists:
        return Formula::exists(f->vars(), eliminate_plus_rec(f->child(0), namer));
    case Formula::Kind::Forall:
        return Formula::forall(f->vars(), eliminate_plus_rec(f->child(0), namer));
    default:
        return f;
    }
}

} // namespace

FormulaRef eliminate_plus(const FormulaRef& f) {
    VarNamer namer;
    namer.reserve_all_vars(f);
    return eliminate_plus_rec(f, namer);
}

std::unique_ptr<SynthesisBase> make_base(const BaseOptions& opts) {
    if (opts.kind == BaseKind::Trivial) return std::make_unique<TrivialBase>();
    return std::make_unique<GeneralBase>(opts.amended_star);
}

} // namespace warrant
