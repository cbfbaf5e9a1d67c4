#ifndef CORRHOM_ENGINES_HH
#define CORRHOM_ENGINES_HH

#include <corrhom/classify.hh>
#include <corrhom/gf2.hh>
#include <corrhom/model.hh>
#include <corrhom/oracle.hh>

#include <array>
#include <string>

namespace corrhom
{
    // Linear encoding over targets whose vertex set (or each side of it)
    // is a canonically bit-labeled 4-set: reflexive 2K2 and irreflexive
    // K2,2 in standard mode, two disjoint K2,2 by side. Variables 2x and
    // 2x+1 are the two bit coordinates of G-vertex x; one equation per
    // edge, plus equations for lists expressible as affine subsets.
    struct XorEncoding
    {
        LinearSystem system;
        std::vector<std::array<int, 4>> vertex_canon;   // bit position -> H-vertex

        Assignment decode(const std::vector<int> & bits) const;
    };

    // Throws ShapeMismatch off the three shapes above and NonAffineList for
    // a list that is not an affine subset of its 4-set (size 3, or a
    // non-coset pair); the caller then falls back to the exact solver.
    XorEncoding encode_xor(const Instance & inst);

    Verdict solve_xor(const Instance & inst);

    // Reflexive cliques and, by side, complete bipartite targets plus
    // isolated vertices: every edge decomposes into two unary
    // requirements, so per-vertex intersection decides.
    Verdict solve_unary(const Instance & inst);

    // Targets where every vertex has at most one neighbour (loops counting
    // as self): each root image forces the whole component.
    Verdict solve_propagation(const Instance & inst);

    // Looped-center stars and, by side, double stars plus isolated
    // vertices: an edge is satisfied exactly when one endpoint hits its
    // centre preimage, giving width-2 clauses.
    Verdict solve_center_two_sat(const Instance & inst);

    // Two K1,2 with shared-side leaves plus isolated centre-side vertices:
    // one boolean per centre-side vertex, two per leaf-side vertex, linked
    // by one GF(2) equation per edge.
    Verdict solve_double_k12(const Instance & inst);

    struct EngineResult
    {
        Verdict verdict;
        std::string engine;     // engine that produced the verdict
        bool fallback = false;  // true when the exact solver stood in
    };

    // Classifies the target under the instance's effective variant and
    // routes to the designated engine; NP-complete classifications and
    // non-affine lists fall back to solve_exact, flagged in the result.
    EngineResult solve_auto(const Instance & inst, const SearchLimits & limits = {});

    // Forces a named engine (oracle|xor|two-sat|propagate|unary|double-k12);
    // "auto" dispatches through solve_auto.
    EngineResult run_engine(const std::string & engine, const Instance & inst,
        const SearchLimits & limits = {});
}

#endif
