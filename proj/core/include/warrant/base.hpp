#ifndef WARRANT_BASE_HPP
#define WARRANT_BASE_HPP

#include <memory>
#include <set>
#include <span>
#include <string>

#include "warrant/formula.hpp"
#include "warrant/strips.hpp"

namespace warrant {

// Whether a condition under- or over-approximates truth in the successor
// state: sufficient conditions imply it, necessary ones are implied by it.
enum class CondKind { Necessary, Sufficient };

inline CondKind swap_cond(CondKind k) {
    return k == CondKind::Necessary ? CondKind::Sufficient : CondKind::Necessary;
}

enum class BracketPolarity {
    InPost,        // [ p(x) in Post ]
    NegInPost,     // [ not p(x) in Post ]
    NegNotInPost,  // [ not p(x) not in Post ]
};

struct BracketExpr {
    BracketPolarity polarity = BracketPolarity::InPost;
    std::string pred;
    std::vector<Term> args;
};

// Instantiates a bracket expression against a schema's effect lists. The
// result is a pure equality formula over the schema parameters, the
// bracket arguments, and constants (or a logical constant):
//   InPost       -> disjunction over add effects p(t) of (args = t)
//   NegInPost    -> disjunction over delete effects p(t) of (args = t)
//   NegNotInPost -> conjunction over delete effects p(t) of (args != t)
FormulaRef bracket(const BracketExpr& expr, const ActionSchema& schema);

// Per-atom next-state condition templates: for every action schema and
// predicate a formula over the schema parameters and the atom arguments
// whose truth before applying the action under- (Sufficient) or over-
// (Necessary) approximates the atom's truth afterwards. Closure conditions
// cover the reflexive-transitive relation p* only; rewrite p+ away with
// eliminate_plus before lifting.
class SynthesisBase {
public:
    virtual ~SynthesisBase() = default;

    virtual FormulaRef condition(CondKind kind, const ActionSchema& schema,
                                 const std::string& pred,
                                 std::span<const Term> args) const = 0;

    virtual FormulaRef closure_condition(CondKind kind, const ActionSchema& schema,
                                         const std::string& pred, const Term& x,
                                         const Term& y,
                                         VarNamer& namer) const = 0;
};

// The general-purpose base, valid for any domain:
//   atom row (both kinds):
//     [p(x) in Post] or (p(x) and [not p(x) not in Post])
//   p* necessary, schema adds at most one p-atom:
//     p*(x,y) or exists u v ([p(u,v) in Post] and p*(x,u) and p*(v,y))
//   p* necessary, two or more:
//     p*(x,y) or exists u v ([p(u,v) in Post] and (p*(x,u) or p*(v,y)))
//   p* sufficient:
//     x=y or (p*(x,y) and forall u v ([not p(u,v) in Post] implies u=v))
// When `amended` contains the predicate, the sufficient row additionally
// disjoins
//     forall u v [not p(u,v) not in Post]
//       and exists u v ([p(u,v) in Post] and p*(x,u) and p*(v,y))
// which is valid for any domain and tightens derived necessary conditions.
class GeneralBase : public SynthesisBase {
public:
    explicit GeneralBase(std::set<std::string> amended_star = {})
        : amended_star_(std::move(amended_star)) {}

    FormulaRef condition(CondKind kind, const ActionSchema& schema,
                         const std::string& pred,
                         std::span<const Term> args) const override;

    FormulaRef closure_condition(CondKind kind, const ActionSchema& schema,
                                 const std::string& pred, const Term& x,
                                 const Term& y, VarNamer& namer) const override;

private:
    std::set<std::string> amended_star_;
};

// The non-informative base: sufficient conditions are false, necessary
// ones true. Useful as the degenerate end of property tests.
class TrivialBase : public SynthesisBase {
public:
    FormulaRef condition(CondKind kind, const ActionSchema&, const std::string&,
                         std::span<const Term>) const override;
    FormulaRef closure_condition(CondKind kind, const ActionSchema&,
                                 const std::string&, const Term&, const Term&,
                                 VarNamer&) const override;
};

// Free-function forms of the general base rows, for direct use in tests.
FormulaRef base_atom(CondKind kind, const ActionSchema& schema,
                     const std::string& pred, std::span<const Term> args);
FormulaRef base_star(CondKind kind, const ActionSchema& schema,
                     const std::string& pred, const Term& x, const Term& y,
                     bool amended, VarNamer& namer);

// Rewrites every p+ atom via p+(x,y) == exists z (p(x,z) and p*(z,y));
// the result mentions only star closures.
FormulaRef eliminate_plus(const FormulaRef& f);

enum class BaseKind { General, Trivial };

struct BaseOptions {
    BaseKind kind = BaseKind::General;
    std::set<std::string> amended_star;  // predicates with the amended S-row
};

std::unique_ptr<SynthesisBase> make_base(const BaseOptions& opts);

} // namespace warrant

#endif
