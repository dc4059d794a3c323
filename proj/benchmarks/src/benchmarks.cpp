// Microbenchmarks for the solver's hot paths: decision, rigidity analysis,
// planning, plan verification, the brute-force oracle, and serialization.
#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "slidetok/decision.hpp"
#include "slidetok/independent_set.hpp"
#include "slidetok/instances.hpp"
#include "slidetok/io.hpp"
#include "slidetok/oracle.hpp"
#include "slidetok/planner.hpp"
#include "slidetok/rigidity.hpp"
#include "slidetok/tree.hpp"

namespace {

using namespace slidetok;

/// Deterministic feasible-leaning instance: greedy packed tokens at the low
/// vertex ids must reach greedy packed tokens at the high ids.
Instance packed_instance(Tree tree) {
    const int n = tree.vertex_count();
    const int want = std::max(1, n / 8);
    auto greedy = [&](bool ascending) {
        std::vector<char> blocked(n, 0);
        std::vector<int> chosen;
        for (int i = 0; i < n && static_cast<int>(chosen.size()) < want; ++i) {
            const int v = ascending ? i : n - 1 - i;
            if (blocked[v]) continue;
            chosen.push_back(v);
            blocked[v] = 1;
            for (int w : tree.neighbors(v)) blocked[w] = 1;
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    };
    std::vector<int> start = greedy(true);
    std::vector<int> target = greedy(false);
    const std::size_t k = std::min(start.size(), target.size());
    start.resize(k);
    target.resize(k);
    Instance inst;
    inst.tree = std::move(tree);
    inst.start = IndependentSet::from_sorted_unchecked(std::move(start));
    inst.target = IndependentSet::from_sorted_unchecked(std::move(target));
    // Two random packings occasionally pin different rigid sets; planning
    // back to the start still exercises the full two-pass settling work.
    if (!decide(inst).yes()) inst.target = inst.start;
    return inst;
}

void BM_Decide(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = packed_instance(gen_random_tree(n, 42));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(inst).yes());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Decide)
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 22)
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMicrosecond);

void BM_RigidSet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = packed_instance(gen_random_tree(n, 43));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compute_rigid_set(inst.tree, inst.start).rigid.size());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RigidSet)
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 22)
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMicrosecond);

void BM_PlanPathFamily(benchmark::State& state) {
    const Instance inst = gen_path_family(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plan(inst).plan.size());
    }
    state.SetComplexityN(inst.tree.vertex_count());
}
BENCHMARK(BM_PlanPathFamily)
    ->RangeMultiplier(2)
    ->Range(1, 32)
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMicrosecond);

void BM_PlanRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = packed_instance(gen_random_tree(n, 44));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plan(inst).plan.size());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_PlanRandom)
    ->RangeMultiplier(4)
    ->Range(1 << 6, 1 << 12)
    ->Unit(benchmark::kMicrosecond);

void BM_VerifyPlan(benchmark::State& state) {
    const Instance inst = gen_path_family(static_cast<int>(state.range(0)));
    const Plan moves = plan(inst).plan;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_plan(inst, moves).has_value());
    }
}
BENCHMARK(BM_VerifyPlan)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_OracleReachable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Instance inst = packed_instance(gen_random_tree(n, 45));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_reachable(inst.tree, inst.start).size());
    }
}
BENCHMARK(BM_OracleReachable)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_EmitParseInstance(benchmark::State& state) {
    const Instance inst =
        packed_instance(gen_random_tree(static_cast<int>(state.range(0)), 46));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_instance(emit_instance(inst)).start.size());
    }
}
BENCHMARK(BM_EmitParseInstance)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
