#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <corrhom/errors.hh>
#include <corrhom/generate.hh>
#include <corrhom/json_io.hh>
#include <corrhom/model.hh>

#include <algorithm>
#include <set>

using namespace corrhom;

namespace
{
    // reflexive K1 u K2: isolated loop a, adjacent loops b and c
    const char * k1_k2_json =
        R"({"vertices":["a","b","c"],"edges":[["a","a"],["b","b"],["c","c"],["b","c"]]})";

    Instance single_edge_instance(const TargetGraph & t, const Permutation & pi,
        const Permutation & rho)
    {
        Instance inst;
        inst.target = t;
        inst.g_vertices = {"x", "y"};
        inst.lists.assign(2, std::nullopt);
        inst.edges.push_back({0, 1, pi, rho});
        validate_instance(inst);
        return inst;
    }
}

TEST_CASE("parse_target accepts the reflexive K1 u K2")
{
    TargetGraph t = parse_target(k1_k2_json);
    REQUIRE(t.size() == 3);
    CHECK(t.has_loop(0));
    CHECK(t.has_loop(1));
    CHECK(t.has_loop(2));
    CHECK(t.adjacent(1, 2));
    CHECK(! t.adjacent(0, 1));
    CHECK(! t.adjacent(0, 2));
    CHECK(t.degree(0) == 0);
}

TEST_CASE("parse_target accepts the empty graph")
{
    TargetGraph t = parse_target(R"({"vertices":[],"edges":[]})");
    CHECK(t.size() == 0);
    CHECK(t.is_reflexive());
}

TEST_CASE("parse_target rejects a dangling endpoint")
{
    CHECK_THROWS_AS(parse_target(R"({"vertices":["a"],"edges":[["a","b"]]})"), ValidationError);
}

TEST_CASE("parse_target rejects duplicates, malformed JSON, side violations")
{
    CHECK_THROWS_AS(parse_target(R"({"vertices":["a","a"],"edges":[]})"), ValidationError);
    CHECK_THROWS_AS(parse_target("{"), ParseError);
    CHECK_THROWS_AS(parse_target(
        R"({"vertices":["a","b"],"edges":[["a","b"]],"side":{"a":"black","b":"black"}})"),
        ValidationError);
    CHECK_THROWS_AS(parse_target(
        R"({"vertices":["a","b"],"edges":[["a","a"]],"side":{"a":"black","b":"white"}})"),
        ValidationError);
    CHECK_THROWS_AS(parse_target(
        R"({"vertices":["a","b"],"edges":[],"side":{"a":"black"}})"),
        ValidationError);
}

TEST_CASE("parse_instance accepts identity labels over reflexive K2")
{
    Instance inst = parse_instance(R"({
        "target":{"vertices":["a","b"],"edges":[["a","a"],["b","b"],["a","b"]]},
        "gVertices":["x","y"],
        "edges":[{"u":"x","v":"y","pi":{"a":"a","b":"b"},"rho":{"a":"a","b":"b"}}],
        "mode":"standard"})");
    REQUIRE(inst.g_size() == 2);
    REQUIRE(inst.edges.size() == 1);
    CHECK(inst.edges[0].pi == Permutation::identity(2));
}

TEST_CASE("parse_instance rejects a non-bijective label")
{
    CHECK_THROWS_AS(parse_instance(R"({
        "target":{"vertices":["a","b"],"edges":[["a","a"],["b","b"],["a","b"]]},
        "gVertices":["x","y"],
        "edges":[{"u":"x","v":"y","pi":{"a":"a","b":"a"},"rho":{"a":"a","b":"b"}}],
        "mode":"standard"})"), ValidationError);
}

TEST_CASE("parse_instance rejects a by-side edge joining two black vertices")
{
    CHECK_THROWS_AS(parse_instance(R"({
        "target":{"vertices":["a","b"],"edges":[["a","b"]],"side":{"a":"black","b":"white"}},
        "gVertices":["x","y"],
        "edges":[{"u":"x","v":"y","pi":{"a":"a"},"rho":{"a":"a"}}],
        "mode":"by-side",
        "gSide":{"x":"black","y":"black"}})"), ValidationError);
}

TEST_CASE("parse_instance rejects an off-side list")
{
    CHECK_THROWS_AS(parse_instance(R"({
        "target":{"vertices":["a","b"],"edges":[["a","b"]],"side":{"a":"black","b":"white"}},
        "gVertices":["x"],
        "edges":[],
        "lists":{"x":["b"]},
        "mode":"by-side",
        "gSide":{"x":"black"}})"), ValidationError);
}

TEST_CASE("compose applies right-then-left")
{
    Permutation id = Permutation::identity(3);
    Permutation ab = Permutation::transposition(3, 0, 1);
    Permutation bc = Permutation::transposition(3, 1, 2);

    CHECK(compose(id, bc) == bc);
    CHECK(compose(ab, ab) == id);

    // (a b) after (b c): a -> b, b -> c, c -> a pointwise
    Permutation r = compose(ab, bc);
    CHECK(r.apply(0) == 1);
    CHECK(r.apply(1) == 2);
    CHECK(r.apply(2) == 0);
}

TEST_CASE("inverse undoes a cycle")
{
    Permutation id = Permutation::identity(3);
    CHECK(id.inverse() == id);

    Permutation ab = Permutation::transposition(3, 0, 1);
    CHECK(ab.inverse() == ab);

    Permutation abc = Permutation::cycle(3, {0, 1, 2});
    CHECK(compose(abc.inverse(), abc) == id);
    CHECK(abc.inverse() == Permutation::cycle(3, {0, 2, 1}));
}

TEST_CASE("permutations of a 4-set: associativity and two-sided inverses")
{
    // every permutation of {0,1,2,3} by image vector
    std::vector<Permutation> all;
    std::vector<int> img{0, 1, 2, 3};
    do {
        Permutation p;
        p.image = img;
        all.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    REQUIRE(all.size() == 24);

    Permutation id = Permutation::identity(4);
    for (const auto & p : all) {
        CHECK(compose(p.inverse(), p) == id);
        CHECK(compose(p, p.inverse()) == id);
    }
    for (const auto & p : all)
        for (const auto & q : all)
            for (const auto & r : all)
                if (! (compose(compose(p, q), r) == compose(p, compose(q, r))))
                    FAIL("associativity violated");
}

TEST_CASE("check_assignment follows the edge rule")
{
    TargetGraph t = parse_target(k1_k2_json);
    Permutation id = Permutation::identity(3);
    Permutation swap_ab = Permutation::transposition(3, 0, 1);

    // pi(b) = b, rho(a) = b, and b-b is an edge
    Instance inst = single_edge_instance(t, id, swap_ab);
    CHECK(check_assignment(inst, {1, 0}).ok);

    // loop at x: pi(a) = a, rho(a) = b, and a-b is not an edge
    Instance loop;
    loop.target = t;
    loop.g_vertices = {"x"};
    loop.lists.assign(1, std::nullopt);
    loop.edges.push_back({0, 0, id, swap_ab});
    CheckResult r = check_assignment(loop, {0});
    CHECK(! r.ok);
    CHECK(r.violated_edge == 0);
}

TEST_CASE("identity labels mean ordinary homomorphism")
{
    TargetGraph t = parse_target(k1_k2_json);
    Permutation id = Permutation::identity(3);

    Instance inst;
    inst.target = t;
    inst.g_vertices = {"x", "y", "z"};
    inst.lists.assign(3, std::nullopt);
    inst.edges.push_back({0, 1, id, id});
    inst.edges.push_back({1, 2, id, id});

    for (int fx = 0; fx < 3; ++fx)
        for (int fy = 0; fy < 3; ++fy)
            for (int fz = 0; fz < 3; ++fz) {
                bool hom = t.adjacent(fx, fy) && t.adjacent(fy, fz);
                CHECK(check_assignment(inst, {fx, fy, fz}).ok == hom);
            }
}

TEST_CASE("check_assignment reports list and side violations by vertex")
{
    TargetGraph t = parse_target(k1_k2_json);
    Instance inst;
    inst.target = t;
    inst.g_vertices = {"x"};
    inst.lists.assign(1, std::vector<char>{1, 0, 0});
    CheckResult r = check_assignment(inst, {1});
    CHECK(! r.ok);
    CHECK(r.violated_vertex == 0);
}

TEST_CASE("auxiliary cross edges for identity labels form the doubled target")
{
    TargetGraph k2 = parse_target(R"({"vertices":["a","b"],"edges":[["a","a"],["b","b"],["a","b"]]})");
    Permutation id = Permutation::identity(2);
    Instance inst = single_edge_instance(k2, id, id);

    AuxiliaryGraph aux = build_auxiliary(inst);
    REQUIRE(aux.cross.size() == 1);
    // reflexive K2 doubles to all four cross pairs
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < 2; ++w)
            CHECK(aux.allowed(0, u, w));
}

TEST_CASE("auxiliary graph of an edgeless instance has no cross edges")
{
    Instance inst;
    inst.target = parse_target(k1_k2_json);
    inst.g_vertices = {"x", "y"};
    inst.lists.assign(2, std::nullopt);
    CHECK(build_auxiliary(inst).cross.empty());
}

TEST_CASE("a transversal induces the input exactly when the assignment checks out")
{
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        TargetGraph t = shuffled_target(make_reflexive_clique(2 + rng.below(3)), rng);
        for (int u = 0; u < t.size(); ++u)
            for (int v = u; v < t.size(); ++v)
                if (rng.coin()) {
                    t.adj[u][v] = t.adj[v][u] = 0;
                }
        GenOptions opt;
        opt.g_count = 1 + rng.below(4);
        opt.edge_count = rng.below(5);
        opt.with_lists = true;
        Instance inst = random_instance(t, Mode::Standard, opt, rng);
        AuxiliaryGraph aux = build_auxiliary(inst);

        std::vector<int> f(inst.g_size(), 0);
        for (;;) {
            bool induces = true;
            for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
                if (! aux.allowed(e, f[inst.edges[e].u], f[inst.edges[e].v]))
                    induces = false;
            bool respects = true;
            for (int x = 0; x < inst.g_size(); ++x)
                if (! inst.base_domain(x)[f[x]])
                    respects = false;
            CHECK(check_assignment(inst, f).ok == (induces && respects));

            int k = 0;
            while (k < inst.g_size() && ++f[k] == t.size()) {
                f[k] = 0;
                ++k;
            }
            if (k == inst.g_size())
                break;
        }
    }
}

TEST_CASE("emit then parse round-trips")
{
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        bool by_side = rng.coin();
        TargetGraph t = by_side
            ? shuffled_target(make_complete_bipartite(1 + rng.below(2), 2, rng.below(2), rng.below(2)), rng)
            : shuffled_target(make_reflexive_clique(1 + rng.below(4)), rng);
        GenOptions opt;
        opt.g_count = 1 + rng.below(5);
        opt.edge_count = rng.below(6);
        opt.with_lists = rng.coin();
        opt.allow_loops = ! by_side;
        Instance inst = random_instance(t, by_side ? Mode::BySide : Mode::Standard, opt, rng);

        Instance back = parse_instance(emit_instance(inst));
        CHECK(back == inst);
        CHECK(parse_target(emit_target(t)) == t);
    }
}
