#ifndef CORRHOM_TRANSFORMS_HH
#define CORRHOM_TRANSFORMS_HH

#include <corrhom/model.hh>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace corrhom
{
    // A verified bipartite 0/1 pattern: between any two subsets of size t
    // (one of rows, one of columns) there is at least one 1 and at least
    // one 0. Used to split a parallel edge pair over N copies per side.
    struct BipartiteMask
    {
        int n = 0;    // |V(H)| the mask was sized for
        int N = 0;    // copies per side
        int t = 0;    // ceil(N / n)
        std::vector<std::vector<char>> bits;
    };

    bool verify_expander_mask(const BipartiteMask & mask);

    // Samples random masks from the seed and keeps the first that passes
    // the exhaustive subset-pair check, with N = max(ceil(n log2 n) + 1, 2n).
    // Deterministic per (n, seed); throws RetriesExhausted after 1000
    // failed samples rather than ever returning an unverified mask.
    BipartiteMask sample_verified_expander(int n, std::uint64_t seed);

    // Replaces each G-loop at x by n+1 pairwise-adjacent copies of x that
    // inherit x's other edges, iterated until loop-free. Requires a
    // reflexive target; answer-preserving by the majority argument.
    Instance eliminate_loops(const Instance & inst);

    // Replaces each parallel pair by N copies of both endpoints with the
    // two labels laid out along a verified expander mask, iterated until
    // simple. A pair with equal labels collapses to a single edge.
    // Requires a loop-free instance over a reflexive target.
    Instance eliminate_parallel_edges(const Instance & inst, std::uint64_t seed);

    // Same vertices; u, v adjacent when H has a walk of length one or two
    // between them (so a vertex gains a loop exactly when it has any
    // incident edge or loop).
    TargetGraph square_graph(const TargetGraph & h);

    // For an instance over the square of `base`: subdivides each edge
    // (x, y, pi, rho) into (x, z, pi, 1), (z, y, 1, rho) with a fresh
    // midpoint, producing an equivalent instance over `base` itself.
    // Throws TargetMismatch when the instance's target is not square(base)
    // and ShapeMismatch when base is not reflexive.
    Instance subdivide_for_square(const Instance & inst, const TargetGraph & base);

    // Appends the G-loop (x, x, pi, rho).
    Instance add_restriction_loop(const Instance & inst, int g_vertex,
        const Permutation & pi, const Permutation & rho);

    // The images that survive such a loop: { u : pi(u) rho(u) in E(H) }.
    std::vector<int> restricted_domain(const TargetGraph & h,
        const Permutation & pi, const Permutation & rho);

    // For an instance over a reflexive K1 u K3 (isolated loop a, triangle
    // b c d): replaces each edge by a three-edge path whose endpoint-image
    // pairs realise exactly the K1 u K3 adjacency over the target with the
    // triangle thinned to the single edge c-d.
    Instance gadget_three_path(const Instance & inst);

    // A positive formula with exactly-one-true clauses of three distinct
    // variables.
    struct CnfFormula
    {
        std::vector<std::string> variables;
        std::vector<std::array<int, 3>> clauses;   // indices into variables
    };

    // One G-vertex per variable and per triple; the triple's value selects
    // which occurrence maps onto the isolated loop, so the instance is
    // solvable exactly when the formula has an exactly-one-true assignment.
    Instance reduce_one_in_three_sat(const CnfFormula & formula);

    // Proper 3-colourings of the input correspond to solutions over the
    // reflexive path a-b-c: each input edge becomes two parallel edges
    // whose labels together forbid exactly the equal colour pairs.
    Instance reduce_three_colouring(const TargetGraph & graph);
}

#endif
