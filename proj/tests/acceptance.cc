// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values come from enumeration-based reference code in
// this file (and support.hh), never from the engines under test.

#include <corrhom/classify.hh>
#include <corrhom/engines.hh>
#include <corrhom/generate.hh>
#include <corrhom/gf2.hh>
#include <corrhom/json_io.hh>
#include <corrhom/oracle.hh>
#include <corrhom/selfcheck.hh>
#include <corrhom/transforms.hh>

#include "support.hh"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace corrhom;
using namespace corrhom::tests;

namespace
{
    int failures = 0;

    void criterion(int number, const std::string & name, const std::function<bool(std::string &)> & body)
    {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        }
        catch (const std::exception & e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << number << " [" << (ok ? "PASS" : "FAIL") << "] "
            << name << " (" << ms / 1000.0 << " s)";
        if (! ok && ! detail.empty())
            std::cout << " -- " << detail;
        std::cout << "\n" << std::flush;
        if (! ok)
            ++failures;
    }

    TargetGraph reflexive_graph_from_mask(int k, unsigned mask)
    {
        TargetGraph t;
        for (int v = 0; v < k; ++v)
            t.vertices.push_back("v" + std::to_string(v));
        t.adj.assign(k, std::vector<char>(k, 0));
        for (int v = 0; v < k; ++v)
            t.adj[v][v] = 1;
        int bit = 0;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v, ++bit)
                if ((mask >> bit) & 1)
                    t.adj[u][v] = t.adj[v][u] = 1;
        return t;
    }

    TargetGraph loopless_graph_from_mask(int k, unsigned mask)
    {
        TargetGraph t = reflexive_graph_from_mask(k, mask);
        for (int v = 0; v < k; ++v)
            t.adj[v][v] = 0;
        return t;
    }

    bool reference_complete(const TargetGraph & t)
    {
        for (int u = 0; u < t.size(); ++u)
            for (int v = u + 1; v < t.size(); ++v)
                if (! t.adjacent(u, v))
                    return false;
        return true;
    }

    bool reference_edgeless(const TargetGraph & t)
    {
        for (int u = 0; u < t.size(); ++u)
            for (int v = u + 1; v < t.size(); ++v)
                if (t.adjacent(u, v))
                    return false;
        return true;
    }

    bool reference_2k2(const TargetGraph & t)
    {
        if (t.size() != 4)
            return false;
        for (int v = 0; v < 4; ++v) {
            int deg = 0;
            for (int w = 0; w < 4; ++w)
                if (w != v && t.adjacent(v, w))
                    ++deg;
            if (deg != 1)
                return false;
        }
        return true;
    }

    std::vector<Permutation> all_permutations(int n)
    {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i)
            img[i] = i;
        std::vector<Permutation> all;
        do {
            Permutation p;
            p.image = img;
            all.push_back(p);
        } while (std::next_permutation(img.begin(), img.end()));
        return all;
    }

    Instance labeled_instance(const TargetGraph & t, bool loop,
        const Permutation & pi, const Permutation & rho)
    {
        Instance inst;
        inst.target = t;
        if (loop) {
            inst.g_vertices = {"x"};
            inst.edges.push_back({0, 0, pi, rho});
        }
        else {
            inst.g_vertices = {"x", "y"};
            inst.edges.push_back({0, 1, pi, rho});
        }
        inst.lists.assign(inst.g_vertices.size(), std::nullopt);
        return inst;
    }

    bool naive_mask_check(const BipartiteMask & m)
    {
        std::vector<int> rows(m.t), cols(m.t);
        auto first = [&](std::vector<int> & c) {
            for (int i = 0; i < m.t; ++i)
                c[i] = i;
        };
        auto next = [&](std::vector<int> & c) {
            for (int i = m.t - 1; i >= 0; --i)
                if (c[i] < m.N - (m.t - i)) {
                    ++c[i];
                    for (int j = i + 1; j < m.t; ++j)
                        c[j] = c[j - 1] + 1;
                    return true;
                }
            return false;
        };
        first(rows);
        do {
            first(cols);
            do {
                bool any0 = false, any1 = false;
                for (int r : rows)
                    for (int c : cols)
                        (m.bits[r][c] ? any1 : any0) = true;
                if (! any0 || ! any1)
                    return false;
            } while (next(cols));
        } while (next(rows));
        return true;
    }
}

int main()
{
    criterion(1, "classifier matches the reflexive dichotomy on all targets with <= 5 vertices",
        [](std::string & detail) {
            for (int k = 0; k <= 5; ++k) {
                int pairs = k * (k - 1) / 2;
                for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
                    TargetGraph t = reflexive_graph_from_mask(k, mask);
                    bool easy_standard = reference_complete(t) || reference_edgeless(t) ||
                        reference_2k2(t);
                    bool easy_list = reference_complete(t) || reference_edgeless(t);
                    if (classify(t, Variant::Standard).polynomial != easy_standard ||
                            classify(t, Variant::List).polynomial != easy_list) {
                        detail = "disagrees at " + emit_target(t);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(2, "the crossing-partition edge encodes to x_a + y_a + y_b = 1",
        [](std::string & detail) {
            Instance inst;
            inst.target = make_reflexive_2k2();
            inst.g_vertices = {"x", "y"};
            inst.lists.assign(2, std::nullopt);
            Permutation rho;
            rho.image = {2, 0, 1, 3};
            inst.edges.push_back({0, 1, Permutation::identity(4), rho});

            XorEncoding enc = encode_xor(inst);
            bool ok = enc.system.rows.size() == 1 && enc.system.num_vars == 4 &&
                enc.system.row_gets(0, 0) && ! enc.system.row_gets(0, 1) &&
                enc.system.row_gets(0, 2) && enc.system.row_gets(0, 3) &&
                enc.system.rhs[0] == 1;
            if (! ok)
                detail = "encoded a different equation";
            return ok;
        });

    criterion(3, "GF(2) solution counts match the oracle on all 1152 labelings per "
        "target, plus 500 random instances",
        [](std::string & detail) {
            std::vector<Permutation> perms = all_permutations(4);
            for (const TargetGraph & t : {make_reflexive_2k2(), make_irreflexive_k22()}) {
                for (bool loop : {false, true})
                    for (const auto & pi : perms)
                        for (const auto & rho : perms) {
                            Instance inst = labeled_instance(t, loop, pi, rho);
                            XorEncoding enc = encode_xor(inst);
                            std::int64_t algebra =
                                solve_linear_gf2(enc.system).count(std::int64_t{1} << 30);
                            std::int64_t search = count_solutions(inst, std::int64_t{1} << 30);
                            if (algebra != search) {
                                std::ostringstream s;
                                s << "counts " << algebra << " vs " << search
                                    << " at " << emit_instance(inst);
                                detail = s.str();
                                return false;
                            }
                        }
            }
            for (const char * family : {"xor-2k2", "xor-k22"}) {
                SuiteResult r = run_engine_suite(family, 250, 8, 20250301);
                if (r.failures > 0) {
                    detail = r.first_failure;
                    return false;
                }
            }
            return true;
        });

    criterion(4, "propagation, two-sat, unary, and double-k12 each match the oracle "
        "on 500 random instances of their families",
        [](std::string & detail) {
            const std::vector<std::pair<std::string, int>> plan{
                {"propagate-coclique", 125}, {"propagate-matching", 125},
                {"propagate-matching-by-side", 125}, {"propagate-mixed", 125},
                {"two-sat-star", 250}, {"two-sat-double-star", 250},
                {"unary-clique", 250}, {"unary-bipartite", 250},
                {"double-k12", 500},
            };
            std::uint64_t salt = 0;
            for (const auto & [family, trials] : plan) {
                SuiteResult r = run_engine_suite(family, trials, 8, 404000 + 13 * ++salt);
                if (r.failures > 0) {
                    detail = r.first_failure;
                    return false;
                }
            }
            return true;
        });

    criterion(5, "loop, parallel-edge, square, and path transforms preserve the "
        "oracle verdict on 200 random instances each",
        [](std::string & detail) {
            std::uint64_t salt = 0;
            for (const auto & kind : transform_suite_names()) {
                SuiteResult r = run_transform_suite(kind, 200, 505000 + 17 * ++salt);
                if (r.failures > 0) {
                    detail = r.name + ": " + r.first_failure;
                    return false;
                }
            }
            return true;
        });

    criterion(6, "reductions match brute force exhaustively (exactly-one formulas "
        "with <= 4 variables and <= 3 clauses; all graphs with <= 5 vertices)",
        [](std::string & detail) {
            // every ordered triple over four variables
            std::vector<std::array<int, 3>> triples;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int c = 0; c < 4; ++c)
                        if (a != b && a != c && b != c)
                            triples.push_back({a, b, c});

            std::vector<std::vector<int>> picks;
            picks.push_back({});
            for (std::size_t i = 0; i < triples.size(); ++i) {
                picks.push_back({static_cast<int>(i)});
                for (std::size_t j = i + 1; j < triples.size(); ++j) {
                    picks.push_back({static_cast<int>(i), static_cast<int>(j)});
                    for (std::size_t k = j + 1; k < triples.size(); ++k)
                        picks.push_back({static_cast<int>(i), static_cast<int>(j),
                            static_cast<int>(k)});
                }
            }

            for (const auto & pick : picks) {
                CnfFormula f;
                f.variables = {"v0", "v1", "v2", "v3"};
                for (int idx : pick)
                    f.clauses.push_back(triples[idx]);
                bool expected = brute_one_in_three(f);
                Instance inst = reduce_one_in_three_sat(f);
                if ((solve_exact(inst).answer == Answer::Yes) != expected) {
                    detail = "exactly-one mismatch at " + emit_instance(inst);
                    return false;
                }
            }

            for (int k = 0; k <= 5; ++k) {
                int pairs = k * (k - 1) / 2;
                for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
                    TargetGraph g = loopless_graph_from_mask(k, mask);
                    bool expected = brute_colourable(g, 3);
                    Instance inst = reduce_three_colouring(g);
                    if ((solve_exact(inst).answer == Answer::Yes) != expected) {
                        detail = "colouring mismatch at " + emit_target(g);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(7, "expander sampling succeeds for n in 2..5 and the masks "
        "re-verify independently",
        [](std::string & detail) {
            for (int n = 2; n <= 5; ++n) {
                BipartiteMask mask = sample_verified_expander(n, 1000 + n);
                if ((mask.N + n - 1) / n != mask.t) {
                    detail = "t is not ceil(N/n) at n = " + std::to_string(n);
                    return false;
                }
                if (! naive_mask_check(mask)) {
                    detail = "independent re-verification failed at n = " + std::to_string(n);
                    return false;
                }
            }
            return true;
        });

    criterion(8, "restriction-loop domains equal the filtered one-vertex solutions, "
        "exhaustively over reflexive targets with <= 4 vertices",
        [](std::string & detail) {
            for (int k = 1; k <= 4; ++k) {
                int pairs = k * (k - 1) / 2;
                std::vector<Permutation> perms = all_permutations(k);
                for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
                    TargetGraph t = reflexive_graph_from_mask(k, mask);
                    Permutation id = Permutation::identity(k);
                    for (const auto & rho : perms) {
                        std::vector<int> dom = restricted_domain(t, id, rho);
                        Instance lone = labeled_instance(t, true, id, rho);
                        std::vector<int> filtered;
                        for (int u = 0; u < k; ++u)
                            if (check_assignment(lone, {u}).ok)
                                filtered.push_back(u);
                        if (dom != filtered) {
                            detail = "domain mismatch at " + emit_instance(lone);
                            return false;
                        }
                    }
                }
            }
            return true;
        });

    std::cout << (failures == 0 ? "all criteria passed" :
        std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
