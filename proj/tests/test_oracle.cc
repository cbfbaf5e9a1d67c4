#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <corrhom/generate.hh>
#include <corrhom/json_io.hh>
#include <corrhom/oracle.hh>
#include <corrhom/transforms.hh>

#include "support.hh"

using namespace corrhom;
using namespace corrhom::tests;

namespace
{
    // single edge x-y over the canonical 2K2, labels chosen so the two
    // component partitions cross: one equation halves the 16 pairs
    Instance figure_one_edge()
    {
        Instance inst;
        inst.target = make_reflexive_2k2();   // h0-h1 and h2-h3, all looped
        inst.g_vertices = {"x", "y"};
        inst.lists.assign(2, std::nullopt);
        Permutation rho;
        rho.image = {2, 0, 1, 3};
        inst.edges.push_back({0, 1, Permutation::identity(4), rho});
        validate_instance(inst);
        return inst;
    }
}

TEST_CASE("a reflexive clique accepts any labeling")
{
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        TargetGraph k3 = make_reflexive_clique(3);
        GenOptions opt;
        opt.g_count = 1 + rng.below(5);
        opt.edge_count = rng.below(7);
        Instance inst = random_instance(k3, Mode::Standard, opt, rng);
        Verdict v = solve_exact(inst);
        REQUIRE(v.answer == Answer::Yes);
        CHECK(check_assignment(inst, *v.witness).ok);
    }
}

TEST_CASE("the reduction of an unsatisfiable exactly-one formula is a no")
{
    CnfFormula f;
    f.variables = {"a", "b", "c", "d"};
    f.clauses = {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 2, 3}}, {{1, 2, 3}}};
    REQUIRE(! brute_one_in_three(f));

    Instance inst = reduce_one_in_three_sat(f);
    CHECK(solve_exact(inst).answer == Answer::No);
}

TEST_CASE("the empty input maps with an empty witness")
{
    Instance inst;
    inst.target = make_reflexive_2k2();
    Verdict v = solve_exact(inst);
    REQUIRE(v.answer == Answer::Yes);
    CHECK(v.witness->empty());
}

TEST_CASE("count_solutions saturates and counts exactly")
{
    TargetGraph t = make_reflexive_2k2();

    Instance lone;
    lone.target = t;
    lone.g_vertices = {"x"};
    lone.lists.assign(1, std::nullopt);
    CHECK(count_solutions(lone, 100) == 4);
    CHECK(count_solutions(lone, 3) == 3);

    lone.lists[0] = std::vector<char>{1, 0, 0, 0};
    CHECK(count_solutions(lone, 100) == 1);

    Instance fig1 = figure_one_edge();
    CHECK(brute_count(fig1) == 8);
    CHECK(count_solutions(fig1, 100) == 8);
}

TEST_CASE("search agrees with exhaustive enumeration at desk scale")
{
    Rng rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + rng.below(4);
        TargetGraph t = shuffled_target(make_reflexive_clique(n), rng);
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                if (rng.coin())
                    t.adj[u][v] = t.adj[v][u] = 0;

        GenOptions opt;
        opt.g_count = 1 + rng.below(5);
        opt.edge_count = rng.below(7);
        opt.with_lists = rng.coin();
        Instance inst = random_instance(t, Mode::Standard, opt, rng);

        Verdict v = solve_exact(inst);
        REQUIRE(v.answer != Answer::ResourceExceeded);
        CHECK((v.answer == Answer::Yes) == brute_solvable(inst));
        CHECK(count_solutions(inst, 1 << 20) == brute_count(inst));
        if (v.witness)
            CHECK(check_assignment(inst, *v.witness).ok);
    }
}

TEST_CASE("verdicts and witnesses are deterministic")
{
    Rng rng(23);
    GenOptions opt;
    opt.g_count = 5;
    opt.edge_count = 6;
    Instance inst = random_instance(make_reflexive_2k2(), Mode::Standard, opt, rng);

    Verdict a = solve_exact(inst);
    Verdict b = solve_exact(inst);
    CHECK(a.answer == b.answer);
    CHECK(a.witness == b.witness);
}

TEST_CASE("hitting the node budget reports resource-exceeded, not no")
{
    Rng rng(29);
    GenOptions opt;
    opt.g_count = 6;
    opt.edge_count = 0;
    Instance inst = random_instance(make_reflexive_clique(3), Mode::Standard, opt, rng);

    SearchLimits limits;
    limits.max_nodes = 1;
    Verdict v = solve_exact(inst, limits);
    CHECK(v.answer == Answer::ResourceExceeded);
    CHECK(! v.witness);
}
