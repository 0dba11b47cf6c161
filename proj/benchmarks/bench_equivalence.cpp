#include <benchmark/benchmark.h>

#include "warrant/equivalence.hpp"
#include "warrant/parse.hpp"

using namespace warrant;

namespace {

std::string corpus(const std::string& name) {
    return std::string(WARRANT_CORPUS_DIR) + "/" + name;
}

void BM_EquivalenceBlocksDisjunct(benchmark::State& state) {
    auto domain = parse_domain_file(corpus("blocks.dom"));
    auto sig = domain->signature;
    auto golden = parse_formula_file(corpus("golden/blocks_psi_a2.fml"), *sig);
    auto compact = parse_formula_file(corpus("golden/blocks_sdec_move.fml"), *sig);
    auto pre = parse_formula_text(
        "(and (clear z3) (on z3 z4) (clear z5))", *sig);
    auto rebuilt = Formula::conj({pre, compact});
    for (auto _ : state) {
        auto r = semantically_equivalent(golden, rebuilt, sig,
                                         static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r.equivalent);
    }
}
BENCHMARK(BM_EquivalenceBlocksDisjunct)->Arg(2)->Arg(3)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_EquivalenceGraphSentence(benchmark::State& state) {
    auto domain = parse_domain_file(corpus("graph.dom"));
    auto sig = domain->signature;
    auto phi = parse_formula_file(corpus("golden/graph_phi.fml"), *sig);
    auto weak = parse_formula_file(corpus("golden/graph_gamma_unamended.fml"),
                                   *sig);
    for (auto _ : state) {
        auto r = semantically_equivalent(phi, weak, sig,
                                         static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r.equivalent);
    }
}
BENCHMARK(BM_EquivalenceGraphSentence)->Arg(3)->Arg(4)
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
