#ifndef CORRHOM_GENERATE_HH
#define CORRHOM_GENERATE_HH

#include <corrhom/model.hh>

#include <cstdint>
#include <random>
#include <string>

namespace corrhom
{
    // Deterministic helper around a seeded engine; all randomized code in
    // the project draws through this.
    struct Rng
    {
        std::mt19937_64 eng;

        explicit Rng(std::uint64_t seed) : eng(seed) {}

        int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng() % n); }
        bool coin() { return (eng() >> 32) & 1; }
        bool chance(int num, int den) { return below(den) < num; }

        template <typename T>
        void shuffle(std::vector<T> & v)
        {
            for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
                std::swap(v[i], v[below(i + 1)]);
        }
    };

    // Canonical family builders with ids h0, h1, ...
    TargetGraph make_reflexive_clique(int n);
    TargetGraph make_reflexive_coclique(int n);
    TargetGraph make_reflexive_2k2();
    TargetGraph make_irreflexive_matching(int p, int q, bool with_sides);
    TargetGraph make_irreflexive_k22();
    TargetGraph make_looped_star(int leaves);
    TargetGraph make_matching_plus_reflexive(int p, int q);
    TargetGraph make_complete_bipartite(int black, int white, int iso_black, int iso_white);
    TargetGraph make_double_star(int black_center_leaves, int white_center_leaves,
        int iso_black, int iso_white);
    TargetGraph make_two_k12(int iso_centers, bool white_leaves);
    TargetGraph make_two_k22();
    TargetGraph make_reflexive_path3();
    TargetGraph make_k1_union_k3();

    // Appends loopless isolated vertices (standard-mode targets).
    TargetGraph with_isolated_loopless(const TargetGraph & t, int count);

    // The same graph with its vertex order randomly permuted; exercises
    // the canonical labelings, which must not depend on input order.
    TargetGraph shuffled_target(const TargetGraph & t, Rng & rng);

    Permutation random_permutation(const std::vector<char> & domain, Rng & rng);

    struct GenOptions
    {
        int g_count = 4;
        int edge_count = 4;
        bool allow_loops = true;     // standard mode only
        bool with_lists = false;
    };

    // A random labeled instance over the given target. By-side instances
    // get a random bipartition of G and side-respecting labels and lists.
    Instance random_instance(const TargetGraph & target, Mode mode,
        const GenOptions & opt, Rng & rng);

    // Builder named by CLI shape tags; sizes are family-specific knobs.
    TargetGraph make_family_target(const std::string & family, int size_a, int size_b, Rng & rng);
}

#endif
