#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "warrant/structure.hpp"

using namespace warrant;
using warrant::test::blocks_signature;
using warrant::test::fml;

namespace {

Structure two_block_stack() {
    // B1 sits on A.
    return Structure(blocks_signature(), {"A", "B1"},
                     {{"on", {"B1", "A"}},
                      {"clear", {"B1"}},
                      {"ontable", {"A"}}});
}

} // namespace

TEST_CASE("reflexive closure atoms hold on any structure") {
    auto st = two_block_stack();
    CHECK(evaluate(fml("(on* A A)", st.signature()), st, {}));
    CHECK(!evaluate(fml("(on+ A A)", st.signature()), st, {}));
}

TEST_CASE("one-step chain satisfies the above-A concept") {
    auto st = two_block_stack();
    auto psi = fml("(exists (y) (and (on x y) (on* y A)))", st.signature());
    CHECK(evaluate(psi, st, {{"x", "B1"}}));
    CHECK(!evaluate(psi, st, {{"x", "A"}}));
}

TEST_CASE("evaluation errors on unbound variables and unknown symbols") {
    auto st = two_block_stack();
    auto psi = fml("(on x y)", st.signature());
    CHECK_THROWS_AS(evaluate(psi, st, {{"x", "B1"}}), InputError);
    CHECK_THROWS_AS(evaluate(psi, st, {{"x", "nope"}, {"y", "A"}}), InputError);
}

TEST_CASE("closure of the empty relation") {
    auto sig = std::make_shared<const Signature>(
        Signature::with_all_closures({}, {{"p", 2}}));
    Structure st(sig, {"a", "b"}, {});
    auto star = closure(st, "p", ClosureKind::Star);
    CHECK(star == std::vector<std::pair<std::string, std::string>>{{"a", "a"},
                                                                   {"b", "b"}});
    CHECK(closure(st, "p", ClosureKind::Plus).empty());
}

TEST_CASE("closure of a two-chain and a two-cycle") {
    auto sig = std::make_shared<const Signature>(
        Signature::with_all_closures({}, {{"p", 2}}));
    Structure chain(sig, {"a", "b", "c"}, {{"p", {"a", "b"}}, {"p", {"b", "c"}}});
    auto plus = closure(chain, "p", ClosureKind::Plus);
    CHECK(plus == std::vector<std::pair<std::string, std::string>>{
                      {"a", "b"}, {"a", "c"}, {"b", "c"}});

    Structure cycle(sig, {"a", "b"}, {{"p", {"a", "b"}}, {"p", {"b", "a"}}});
    CHECK(closure(cycle, "p", ClosureKind::Star).size() == 4);
}

TEST_CASE("closure rejects non-binary predicates") {
    auto st = two_block_stack();
    CHECK_THROWS_AS(closure(st, "clear", ClosureKind::Star), InputError);
}

TEST_CASE("star equals plus united with the diagonal") {
    auto sig = std::make_shared<const Signature>(
        Signature::with_all_closures({}, {{"p", 2}}));
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
        std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (std::uniform_int_distribution<int>(0, 1)(rng)) {
                    atoms.push_back({"p", {names[a], names[b]}});
                }
            }
        }
        Structure st(sig, names, atoms);
        auto star = closure(st, "p", ClosureKind::Star);
        auto plus = closure(st, "p", ClosureKind::Plus);
        std::set<std::pair<std::string, std::string>> expect(plus.begin(),
                                                             plus.end());
        for (const auto& o : names) expect.insert({o, o});
        CHECK(std::set<std::pair<std::string, std::string>>(star.begin(),
                                                            star.end()) == expect);
    }
}

TEST_CASE("extension of the above-A concept on a two-tower stack") {
    Structure st(blocks_signature(), {"A", "B1", "B2"},
                 {{"on", {"B2", "B1"}},
                  {"on", {"B1", "A"}},
                  {"clear", {"B2"}},
                  {"ontable", {"A"}}});
    auto psi = fml("(exists (y) (and (on x y) (on* y A)))", st.signature());
    auto ext = extension(psi, {"x"}, st);
    CHECK(ext == std::vector<std::vector<std::string>>{{"B1"}, {"B2"}});
}

TEST_CASE("extension is empty when the required atoms are absent") {
    Structure st(blocks_signature(), {"A", "B1"}, {});
    auto psi = fml("(exists (y) (and (on x y) (on* y A)))", st.signature());
    CHECK(extension(psi, {"x"}, st).empty());
}

TEST_CASE("binary concept extension reads tuples off the relation") {
    auto sig = std::make_shared<const Signature>(
        Signature::with_all_closures({"s", "t"}, {{"E", 2}}));
    Structure st(sig, {"s", "t"}, {{"E", {"s", "t"}}});
    auto e = fml("(E x y)", *sig);
    CHECK(extension(e, {"x", "y"}, st) ==
          std::vector<std::vector<std::string>>{{"s", "t"}});
}

TEST_CASE("extension rejects undeclared free variables") {
    auto st = two_block_stack();
    auto psi = fml("(on x y)", st.signature());
    CHECK_THROWS_AS(extension(psi, {"x"}, st), InputError);
}

TEST_CASE("positive concept extensions grow when atoms are added") {
    // Negation- and universal-free formulas are monotone in the relation.
    auto sig = std::make_shared<const Signature>(
        Signature::with_all_closures({"A"}, {{"on", 2}, {"clear", 1}}));
    std::mt19937 rng(11);
    auto positive = fml("(or (exists (y) (and (on x y) (on* y A))) (clear x))",
                        *sig);
    for (int round = 0; round < 20; ++round) {
        int n = 3;
        std::vector<std::string> names{"A", "b", "c"};
        std::vector<std::pair<std::string, std::vector<std::string>>> atoms;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                    atoms.push_back({"on", {names[a], names[b]}});
                }
            }
        }
        Structure st(sig, names, atoms);
        auto before = extension(positive, {"x"}, st);
        // Add one more random atom.
        auto more = atoms;
        more.push_back({"on",
                        {names[std::uniform_int_distribution<int>(0, 2)(rng)],
                         names[std::uniform_int_distribution<int>(0, 2)(rng)]}});
        Structure st2(sig, names, more);
        auto after = extension(positive, {"x"}, st2);
        CHECK(std::includes(after.begin(), after.end(), before.begin(),
                            before.end()));
    }
}
