#include <corrhom/classify.hh>
#include <corrhom/engines.hh>
#include <corrhom/generate.hh>
#include <corrhom/gf2.hh>
#include <corrhom/oracle.hh>

#include <benchmark/benchmark.h>

using namespace corrhom;

namespace
{
    Instance instance_over_2k2(int g, int edges, std::uint64_t seed)
    {
        Rng rng(seed);
        GenOptions opt;
        opt.g_count = g;
        opt.edge_count = edges;
        return random_instance(make_reflexive_2k2(), Mode::Standard, opt, rng);
    }

    void BM_XorEngine(benchmark::State & state)
    {
        Instance inst = instance_over_2k2(static_cast<int>(state.range(0)),
            static_cast<int>(2 * state.range(0)), 5);
        for (auto _ : state)
            benchmark::DoNotOptimize(solve_xor(inst).answer);
    }

    void BM_Oracle2K2(benchmark::State & state)
    {
        Instance inst = instance_over_2k2(static_cast<int>(state.range(0)),
            static_cast<int>(2 * state.range(0)), 5);
        SearchLimits limits{0, 0};
        for (auto _ : state)
            benchmark::DoNotOptimize(solve_exact(inst, limits).answer);
    }

    void BM_ClassifyReflexive(benchmark::State & state)
    {
        Rng rng(9);
        TargetGraph t = shuffled_target(make_reflexive_clique(static_cast<int>(state.range(0))), rng);
        for (auto _ : state)
            benchmark::DoNotOptimize(classify(t, Variant::Standard).polynomial);
    }

    void BM_Gf2Solve(benchmark::State & state)
    {
        Rng rng(13);
        LinearSystem sys;
        sys.num_vars = static_cast<int>(state.range(0));
        for (int r = 0; r < sys.num_vars; ++r) {
            std::vector<int> on{rng.below(sys.num_vars), rng.below(sys.num_vars)};
            sys.add_row(on, rng.coin());
        }
        for (auto _ : state)
            benchmark::DoNotOptimize(solve_linear_gf2(sys).satisfiable);
    }
}

BENCHMARK(BM_XorEngine)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_Oracle2K2)->Arg(6)->Arg(10);
BENCHMARK(BM_ClassifyReflexive)->Arg(5)->Arg(20);
BENCHMARK(BM_Gf2Solve)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
