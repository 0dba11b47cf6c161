#include <benchmark/benchmark.h>

#include "warrant/parse.hpp"
#include "warrant/verify.hpp"

using namespace warrant;

namespace {

std::string corpus(const std::string& name) {
    return std::string(WARRANT_CORPUS_DIR) + "/" + name;
}

void BM_ReachableTower4(benchmark::State& state) {
    auto domain = parse_domain_file(corpus("blocks.dom"));
    auto inst = parse_instance_file(corpus("tower4.inst"), domain);
    Problem prob(inst);
    for (auto _ : state) {
        auto rs = reachable(prob, 200000);
        benchmark::DoNotOptimize(rs.states.size());
    }
}
BENCHMARK(BM_ReachableTower4)->Unit(benchmark::kMillisecond);

void BM_GuaranteeValidGripper(benchmark::State& state) {
    auto domain = parse_domain_file(corpus("gripper_typed.dom"));
    auto abs = parse_abstraction_file(corpus("gripper.abs"), *domain->signature);
    auto inst = parse_instance_file(corpus("g2b2.inst"), domain);
    Problem prob(inst);
    GeneralBase base;
    GuaranteeSet gs = synthesize_sufficient(abs, *domain, base);
    for (auto _ : state) {
        auto r = check_guarantee_valid(gs, abs, prob, Scope::Reachable, {});
        benchmark::DoNotOptimize(r.valid);
    }
}
BENCHMARK(BM_GuaranteeValidGripper)->Unit(benchmark::kMillisecond);

} // namespace
