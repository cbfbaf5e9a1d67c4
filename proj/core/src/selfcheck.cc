#include <corrhom/selfcheck.hh>
#include <corrhom/classify.hh>
#include <corrhom/engines.hh>
#include <corrhom/errors.hh>
#include <corrhom/generate.hh>
#include <corrhom/json_io.hh>
#include <corrhom/oracle.hh>
#include <corrhom/transforms.hh>

#include <algorithm>

namespace corrhom
{
    namespace
    {
        const SearchLimits suite_limits{200'000'000, 0};

        struct Family
        {
            std::string name;
            std::string engine;
            Mode mode;
            bool lists;        // only where the list variant stays polynomial
            bool loops;
        };

        const std::vector<Family> & families()
        {
            static const std::vector<Family> f{
                {"xor-2k2", "xor", Mode::Standard, false, true},
                {"xor-k22", "xor", Mode::Standard, false, true},
                {"xor-2k22", "xor", Mode::BySide, false, false},
                {"unary-clique", "unary", Mode::Standard, true, true},
                {"unary-bipartite", "unary", Mode::BySide, true, false},
                {"propagate-coclique", "propagate", Mode::Standard, true, true},
                {"propagate-matching", "propagate", Mode::Standard, true, true},
                {"propagate-matching-by-side", "propagate", Mode::BySide, true, false},
                {"propagate-mixed", "propagate", Mode::Standard, true, true},
                {"two-sat-star", "two-sat", Mode::Standard, true, true},
                {"two-sat-double-star", "two-sat", Mode::BySide, true, false},
                {"double-k12", "double-k12", Mode::BySide, false, false},
            };
            return f;
        }

        TargetGraph family_target(const std::string & name, Rng & rng)
        {
            TargetGraph t;
            if (name == "xor-2k2")
                t = make_reflexive_2k2();
            else if (name == "xor-k22")
                t = make_irreflexive_k22();
            else if (name == "xor-2k22")
                t = make_two_k22();
            else if (name == "unary-clique")
                t = with_isolated_loopless(make_reflexive_clique(1 + rng.below(4)), rng.below(3));
            else if (name == "unary-bipartite")
                t = make_complete_bipartite(1 + rng.below(3), 2 + rng.below(2),
                    rng.below(3), rng.below(3));
            else if (name == "propagate-coclique")
                t = with_isolated_loopless(make_reflexive_coclique(2 + rng.below(3)), rng.below(3));
            else if (name == "propagate-matching") {
                int p = rng.below(3);
                t = make_irreflexive_matching(p, p == 0 ? 1 + rng.below(2) : rng.below(3), false);
            }
            else if (name == "propagate-matching-by-side")
                t = make_irreflexive_matching(rng.below(3), 1 + rng.below(2), true);
            else if (name == "propagate-mixed")
                t = with_isolated_loopless(
                    make_matching_plus_reflexive(1 + rng.below(2), 1 + rng.below(2)), rng.below(3));
            else if (name == "two-sat-star")
                t = with_isolated_loopless(make_looped_star(1 + rng.below(4)), rng.below(3));
            else if (name == "two-sat-double-star")
                t = make_double_star(1 + rng.below(3), 1 + rng.below(3),
                    rng.below(2), rng.below(2));
            else if (name == "double-k12")
                t = make_two_k12(rng.below(4), rng.coin());
            else
                throw ValidationError("unknown engine suite '" + name + "'");
            return shuffled_target(t, rng);
        }

        std::string describe(const Instance & inst, const char * what,
            const Verdict & got, const Verdict & expected)
        {
            auto name = [](Answer a) {
                return a == Answer::Yes ? "yes" : a == Answer::No ? "no" : "resource-exceeded";
            };
            return std::string(what) + ": engine " + name(got.answer) + ", oracle " +
                name(expected.answer) + "; instance " + emit_instance(inst);
        }
    }

    std::vector<std::string> engine_suite_names()
    {
        std::vector<std::string> names;
        for (const auto & f : families())
            names.push_back(f.name);
        return names;
    }

    std::vector<std::string> transform_suite_names()
    {
        return {"loops", "parallel", "square", "three-path"};
    }

    SuiteResult run_engine_suite(const std::string & family, int trials, int max_g,
        std::uint64_t seed)
    {
        auto famv = families();
        auto it = std::find_if(famv.begin(), famv.end(),
            [&](const Family & f) { return f.name == family; });
        if (it == famv.end())
            throw ValidationError("unknown engine suite '" + family + "'");

        SuiteResult result;
        result.name = "engine/" + family;
        Rng rng(seed);

        for (int trial = 0; trial < trials; ++trial) {
            TargetGraph t = family_target(family, rng);
            GenOptions opt;
            opt.g_count = 1 + rng.below(std::max(1, max_g));
            opt.edge_count = rng.below(opt.g_count + 3);
            opt.allow_loops = it->loops;
            opt.with_lists = it->lists && rng.coin();
            Instance inst = random_instance(t, it->mode, opt, rng);

            Classification c = classify(t, effective_variant(inst));
            if (! c.polynomial || c.engine != it->engine) {
                ++result.failures;
                if (result.first_failure.empty())
                    result.first_failure = "classification routed " + variant_name(c.variant) +
                        " to '" + c.engine + "' for " + emit_instance(inst);
                continue;
            }

            Verdict engine = run_engine(c.engine, inst, suite_limits).verdict;
            Verdict oracle = solve_exact(inst, suite_limits);
            if (engine.answer != oracle.answer) {
                ++result.failures;
                if (result.first_failure.empty())
                    result.first_failure = describe(inst, family.c_str(), engine, oracle);
            }
            ++result.trials;
        }
        return result;
    }

    SuiteResult run_transform_suite(const std::string & kind, int trials, std::uint64_t seed)
    {
        SuiteResult result;
        result.name = "transform/" + kind;
        Rng rng(seed);

        for (int trial = 0; trial < trials; ++trial) {
            Instance before;
            Instance after;
            if (kind == "loops") {
                int n = 2 + rng.below(3);
                TargetGraph t = shuffled_target(make_reflexive_clique(n), rng);
                // random reflexive target: drop some clique edges
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.coin())
                            t.adj[u][v] = t.adj[v][u] = 0;
                GenOptions opt;
                opt.g_count = 1 + rng.below(4);
                opt.edge_count = rng.below(4);
                opt.allow_loops = true;
                Instance inst = random_instance(t, Mode::Standard, opt, rng);
                // ensure at least one loop
                int x = rng.below(inst.g_size());
                GEdge loop{x, x, random_permutation(inst.label_domain(x), rng),
                    random_permutation(inst.label_domain(x), rng)};
                inst.edges.push_back(loop);
                before = inst;
                after = eliminate_loops(inst);
            }
            else if (kind == "parallel") {
                int n = 2 + rng.below(3);
                TargetGraph t = shuffled_target(make_reflexive_clique(n), rng);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.coin())
                            t.adj[u][v] = t.adj[v][u] = 0;
                GenOptions opt;
                opt.g_count = 2 + rng.below(3);
                opt.edge_count = 0;
                opt.allow_loops = false;
                Instance inst = random_instance(t, Mode::Standard, opt, rng);
                // a set of simple edges, then one parallel partner; more
                // than one parallel class per pair blows up multiplicatively
                std::vector<std::pair<int, int>> pairs;
                int want = rng.below(4);
                for (int k = 0; k < want; ++k) {
                    int u = rng.below(inst.g_size());
                    int v = (u + 1 + rng.below(inst.g_size() - 1)) % inst.g_size();
                    auto key = std::minmax(u, v);
                    if (std::find(pairs.begin(), pairs.end(),
                            std::make_pair(key.first, key.second)) != pairs.end())
                        continue;
                    pairs.push_back({key.first, key.second});
                    inst.edges.push_back({u, v,
                        random_permutation(inst.label_domain(u), rng),
                        random_permutation(inst.label_domain(v), rng)});
                }
                if (inst.edges.empty()) {
                    int u = rng.below(inst.g_size());
                    int v = (u + 1 + rng.below(inst.g_size() - 1)) % inst.g_size();
                    inst.edges.push_back({u, v,
                        random_permutation(inst.label_domain(u), rng),
                        random_permutation(inst.label_domain(v), rng)});
                }
                const GEdge twin = inst.edges[rng.below(static_cast<int>(inst.edges.size()))];
                if (rng.chance(1, 4))
                    inst.edges.push_back(twin);   // equal labels, collapses
                else
                    inst.edges.push_back({twin.u, twin.v,
                        random_permutation(inst.label_domain(twin.u), rng),
                        random_permutation(inst.label_domain(twin.v), rng)});
                before = inst;
                after = eliminate_parallel_edges(inst, rng.eng());
            }
            else if (kind == "square") {
                int n = 2 + rng.below(3);
                TargetGraph base = shuffled_target(make_reflexive_clique(n), rng);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.coin())
                            base.adj[u][v] = base.adj[v][u] = 0;
                GenOptions opt;
                opt.g_count = 1 + rng.below(4);
                opt.edge_count = rng.below(5);
                opt.allow_loops = true;
                Instance inst = random_instance(square_graph(base), Mode::Standard, opt, rng);
                before = inst;
                after = subdivide_for_square(inst, base);
            }
            else if (kind == "three-path") {
                TargetGraph t = shuffled_target(make_k1_union_k3(), rng);
                GenOptions opt;
                opt.g_count = 1 + rng.below(4);
                opt.edge_count = rng.below(5);
                opt.allow_loops = true;
                Instance inst = random_instance(t, Mode::Standard, opt, rng);
                before = inst;
                after = gadget_three_path(inst);
            }
            else {
                throw ValidationError("unknown transform suite '" + kind + "'");
            }

            Verdict vb = solve_exact(before, suite_limits);
            Verdict va = solve_exact(after, suite_limits);
            if (vb.answer != va.answer) {
                ++result.failures;
                if (result.first_failure.empty())
                    result.first_failure = describe(before, kind.c_str(), va, vb);
            }
            ++result.trials;
        }
        return result;
    }

    std::vector<SuiteResult> run_selfcheck(int trials, int max_g, std::uint64_t seed)
    {
        std::vector<SuiteResult> results;
        std::uint64_t salt = 0;
        for (const auto & name : engine_suite_names())
            results.push_back(run_engine_suite(name, trials, max_g, seed + 1000 * ++salt));
        for (const auto & name : transform_suite_names())
            results.push_back(run_transform_suite(name, trials, seed + 1000 * ++salt));
        return results;
    }
}
