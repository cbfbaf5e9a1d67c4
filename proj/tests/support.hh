#ifndef CORRHOM_TESTS_SUPPORT_HH
#define CORRHOM_TESTS_SUPPORT_HH

// Enumeration-based reference oracles for the test suites. These stay
// deliberately naive: answers come from trying every assignment against
// the definitional checker, never from the solvers under test.

#include <corrhom/model.hh>
#include <corrhom/transforms.hh>

#include <cstdint>
#include <vector>

namespace corrhom::tests
{
    inline std::int64_t brute_count(const Instance & inst)
    {
        int g = inst.g_size(), n = inst.target.size();
        if (g == 0)
            return 1;
        if (n == 0)
            return 0;
        std::int64_t count = 0;
        Assignment f(g, 0);
        for (;;) {
            if (check_assignment(inst, f).ok)
                ++count;
            int k = 0;
            while (k < g && ++f[k] == n) {
                f[k] = 0;
                ++k;
            }
            if (k == g)
                break;
        }
        return count;
    }

    inline bool brute_solvable(const Instance & inst)
    {
        int g = inst.g_size(), n = inst.target.size();
        if (g == 0)
            return true;
        if (n == 0)
            return false;
        Assignment f(g, 0);
        for (;;) {
            if (check_assignment(inst, f).ok)
                return true;
            int k = 0;
            while (k < g && ++f[k] == n) {
                f[k] = 0;
                ++k;
            }
            if (k == g)
                break;
        }
        return false;
    }

    // exactly-one-true satisfiability over all 2^vars assignments
    inline bool brute_one_in_three(const CnfFormula & formula)
    {
        int nv = static_cast<int>(formula.variables.size());
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nv); ++bits) {
            bool ok = true;
            for (const auto & cl : formula.clauses) {
                int trues = 0;
                for (int v : cl)
                    trues += (bits >> v) & 1;
                if (trues != 1) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return true;
        }
        return false;
    }

    inline bool brute_colourable(const TargetGraph & graph, int colours)
    {
        int n = graph.size();
        std::vector<int> colour(n, 0);
        if (n == 0)
            return true;
        for (;;) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n && ok; ++v)
                    if (graph.adjacent(u, v) && colour[u] == colour[v])
                        ok = false;
            if (ok)
                return true;
            int k = 0;
            while (k < n && ++colour[k] == colours) {
                colour[k] = 0;
                ++k;
            }
            if (k == n)
                break;
        }
        return false;
    }
}

#endif
