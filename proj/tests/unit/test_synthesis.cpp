#include <doctest.h>

#include "test_helpers.hpp"
#include "warrant/parse.hpp"
#include "warrant/simplify.hpp"
#include "warrant/synthesis.hpp"

using namespace warrant;
using warrant::test::corpus_path;

namespace {

struct Fixture {
    std::shared_ptr<const DomainSchema> domain;
    Abstraction abs;
    GeneralBase base;

    Fixture(const std::string& dom, const std::string& abs_file,
            std::set<std::string> amended = {})
        : domain(parse_domain_file(corpus_path(dom))),
          abs(parse_abstraction_file(corpus_path(abs_file), *domain->signature)),
          base(std::move(amended)) {}

    std::shared_ptr<const Signature> sig() const { return domain->signature; }
    const ActionSchema& schema(const std::string& name) const {
        return *domain->schema(name);
    }
    FormulaRef golden(const std::string& file) const {
        return parse_formula_file(corpus_path("golden/" + file), *sig());
    }
};

} // namespace

TEST_CASE("lifting the above-A concept through newtower") {
    Fixture f("blocks.dom", "clear.abs");
    auto psi = eliminate_plus(f.abs.features[0].concept_formula);
    auto lifted = simplify(lift(f.base, f.schema("Newtower"), psi,
                                CondKind::Necessary));
    CHECK(semantically_equivalent(lifted, f.golden("blocks_n_a1.fml"), f.sig(), 3)
              .equivalent);
}

TEST_CASE("closure-free formulas have identical lifted conditions") {
    Fixture f("gripper.dom", "gripper.abs");
    for (const auto& feature : f.abs.features) {
        auto psi = eliminate_plus(feature.concept_formula);
        for (const auto& schema : f.domain->schemas) {
            auto n = lift(f.base, schema, psi, CondKind::Necessary);
            auto s = lift(f.base, schema, psi, CondKind::Sufficient);
            CHECK(structurally_equal(n, s));
        }
    }
}

TEST_CASE("equalities are rigid under lifting") {
    Fixture f("blocks.dom", "clear.abs");
    auto eq = Formula::equal(Term::var("x"), Term::var("y"));
    for (CondKind kind : {CondKind::Necessary, CondKind::Sufficient}) {
        CHECK(structurally_equal(lift(f.base, f.schema("Move"), eq, kind), eq));
    }
}

TEST_CASE("lifting rejects unresolved transitive closures") {
    Fixture f("blocks.dom", "clear.abs");
    auto plus = parse_formula_text("(on+ x A)", *f.sig());
    CHECK_THROWS_AS(lift(f.base, f.schema("Move"), plus, CondKind::Necessary),
                    InputError);
}

TEST_CASE("sufficient decrements match the worked newtower form") {
    Fixture f("blocks.dom", "clear.abs");
    auto sdec = simplify(change_condition(f.base, CondKind::Sufficient,
                                          ChangeKind::Dec, f.abs.features[0],
                                          f.schema("Newtower")));
    auto golden = parse_formula_text(
        "(and (on z1 z2) (on* z2 A)"
        "     (forall (y) (implies (and (on z1 y) (on* y A)) (= y z2))))",
        *f.sig());
    CHECK(semantically_equivalent(sdec, golden, f.sig(), 3).equivalent);
}

TEST_CASE("sufficient decrements match the worked move form") {
    Fixture f("blocks.dom", "clear.abs");
    auto sdec = simplify(change_condition(f.base, CondKind::Sufficient,
                                          ChangeKind::Dec, f.abs.features[0],
                                          f.schema("Move")));
    CHECK(semantically_equivalent(sdec, f.golden("blocks_sdec_move.fml"),
                                  f.sig(), 3)
              .equivalent);
}

TEST_CASE("an untouched concept changes nothing") {
    // Schema effects disjoint from the concept's predicates: the
    // equality-change condition is a tautology.
    Fixture f("gripper.dom", "gripper.abs");
    auto seq = change_condition(f.base, CondKind::Sufficient, ChangeKind::Eq,
                                *f.abs.feature("B"), f.schema("Move"));
    CHECK(bounded_valid(seq, f.sig(), 3).equivalent);
}

TEST_CASE("change conditions reject mismatched feature kinds") {
    Fixture f("gripper.dom", "gripper.abs");
    CHECK_THROWS_AS(change_condition(f.base, CondKind::Sufficient,
                                     ChangeKind::Inc, *f.abs.feature("X"),
                                     f.schema("Move")),
                    InputError);
    CHECK_THROWS_AS(change_condition(f.base, CondKind::Sufficient,
                                     ChangeKind::ToTrue, *f.abs.feature("B"),
                                     f.schema("Move")),
                    InputError);
}

TEST_CASE("blocks guarantees reproduce the worked derivation") {
    Fixture f("blocks.dom", "clear.abs");
    GuaranteeSet gs = synthesize_sufficient(f.abs, *f.domain, f.base);
    REQUIRE(gs.sufficient.size() == 1);
    const auto& entry = gs.sufficient[0];
    REQUIRE(entry.disjuncts.size() == 2);
    CHECK(semantically_equivalent(entry.disjuncts[0].second,
                                  f.golden("blocks_psi_a1.fml"), f.sig(), 3)
              .equivalent);
    CHECK(semantically_equivalent(entry.disjuncts[1].second,
                                  f.golden("blocks_psi_a2.fml"), f.sig(), 3)
              .equivalent);
    // The assembled sentence is the existential closure of the disjuncts.
    auto manual = simplify(Formula::exists(
        {"z1", "z2", "z3", "z4", "z5"},
        Formula::disj({f.golden("blocks_psi_a1.fml"),
                       f.golden("blocks_psi_a2.fml")})));
    CHECK(semantically_equivalent(entry.assembled, manual, f.sig(), 3)
              .equivalent);
}

TEST_CASE("gripper cross-schema disjuncts vanish") {
    Fixture f("gripper.dom", "gripper.abs");
    GuaranteeSet gs = synthesize_sufficient(f.abs, *f.domain, f.base);
    auto disjunct = [&](const std::string& action, const std::string& schema) {
        const GuaranteeEntry* e = gs.sufficient_for(action);
        REQUIRE(e);
        for (const auto& [name, psi] : e->disjuncts) {
            if (name == schema) return psi;
        }
        FAIL("no such schema");
        return Formula::falsity();
    };
    CHECK(disjunct("pick", "Move")->kind() == Formula::Kind::False);
    CHECK(disjunct("pick", "Drop")->kind() == Formula::Kind::False);
    CHECK(disjunct("drop", "Move")->kind() == Formula::Kind::False);
    CHECK(disjunct("drop", "Pick")->kind() == Formula::Kind::False);
    CHECK(disjunct("go1", "Pick")->kind() == Formula::Kind::False);
    CHECK(disjunct("go1", "Drop")->kind() == Formula::Kind::False);
    CHECK(disjunct("go2", "Pick")->kind() == Formula::Kind::False);
    CHECK(disjunct("go2", "Drop")->kind() == Formula::Kind::False);
    CHECK(disjunct("leave", "Pick")->kind() == Formula::Kind::False);
    CHECK(disjunct("leave", "Drop")->kind() == Formula::Kind::False);
    // The five live disjuncts match the exact worked forms.
    CHECK(semantically_equivalent(disjunct("pick", "Pick"),
                                  f.golden("gripper_pick_a2_exact.fml"), f.sig(),
                                  3)
              .equivalent);
    CHECK(semantically_equivalent(disjunct("leave", "Move"),
                                  f.golden("gripper_leave_a1.fml"), f.sig(), 3)
              .equivalent);
}

TEST_CASE("graph guarantees with and without the amended row") {
    Fixture plain("graph.dom", "conn.abs");
    GuaranteeSet gs = synthesize(plain.abs, *plain.domain, plain.base);
    REQUIRE(gs.sufficient.size() == 1);
    CHECK(semantically_equivalent(gs.sufficient[0].assembled,
                                  plain.golden("graph_phi.fml"), plain.sig(), 3)
              .equivalent);
    CHECK(semantically_equivalent(gs.necessary[0].assembled,
                                  plain.golden("graph_gamma_unamended.fml"),
                                  plain.sig(), 3)
              .equivalent);

    Fixture amended("graph.dom", "conn.abs", {"E"});
    GuaranteeSet gs2 = synthesize(amended.abs, *amended.domain, amended.base);
    CHECK(semantically_equivalent(gs2.necessary[0].assembled,
                                  gs2.sufficient[0].assembled, amended.sig(), 3)
              .equivalent);
    CHECK(semantically_equivalent(gs2.necessary[0].assembled,
                                  amended.golden("graph_phi.fml"), amended.sig(),
                                  3)
              .equivalent);
}

TEST_CASE("rigid concepts leave only the schema precondition") {
    // An abstract action with no effects over a concept built from
    // equality alone: the necessary disjunct is the schema precondition.
    auto domain = parse_domain_file(corpus_path("blocks.dom"));
    Abstraction abs;
    Feature is_a;
    is_a.name = "isA";
    is_a.kind = FeatureKind::Boolean;
    is_a.concept_vars = {"x"};
    is_a.concept_formula =
        parse_formula_text("(= x A)", *domain->signature);
    abs.features.push_back(is_a);
    AbstractAction noop;
    noop.name = "noop";
    abs.actions.push_back(noop);
    abs.init_lits = {{"isA", LiteralKind::BoolTrue}};
    GeneralBase base;
    GuaranteeSet gs = synthesize_necessary(abs, *domain, base);
    REQUIRE(gs.necessary.size() == 1);
    auto pre_newtower = parse_formula_text("(and (on z1 z2) (clear z1))",
                                           *domain->signature);
    CHECK(semantically_equivalent(gs.necessary[0].disjuncts[0].second,
                                  pre_newtower, domain->signature, 3)
              .equivalent);
}

TEST_CASE("closure-free guarantees coincide in guarantee context") {
    // With no transitive closure in any concept, the sufficient and
    // necessary disjuncts agree whenever the abstract precondition holds.
    Fixture f("gripper.dom", "gripper.abs");
    GuaranteeSet gs = synthesize(f.abs, *f.domain, f.base);
    for (std::size_t i = 0; i < gs.sufficient.size(); ++i) {
        const auto& se = gs.sufficient[i];
        const auto& ne = gs.necessary[i];
        for (std::size_t d = 0; d < se.disjuncts.size(); ++d) {
            auto with_pre = [&](const FormulaRef& g) {
                return simplify(Formula::conj({se.precondition, g}));
            };
            CHECK(semantically_equivalent(with_pre(se.disjuncts[d].second),
                                          with_pre(ne.disjuncts[d].second),
                                          f.sig(), 3)
                      .equivalent);
        }
    }
}
