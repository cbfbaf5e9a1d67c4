#ifndef CORRHOM_MODEL_HH
#define CORRHOM_MODEL_HH

#include <optional>
#include <string>
#include <vector>

namespace corrhom
{
    enum class Side { Black, White };

    Side opposite(Side s);
    std::string side_name(Side s);

    // The fixed target graph H: an ordered vertex set, a symmetric
    // adjacency relation (loops allowed), and an optional black/white
    // bipartition. When the bipartition is present the graph is loopless
    // and every edge joins black to white.
    struct TargetGraph
    {
        std::vector<std::string> vertices;
        std::vector<std::vector<char>> adj;     // adj[i][j] == adj[j][i]
        std::optional<std::vector<Side>> side;

        int size() const { return static_cast<int>(vertices.size()); }
        bool adjacent(int u, int v) const { return adj[u][v] != 0; }
        bool has_loop(int v) const { return adj[v][v] != 0; }
        int degree(int v) const;                // non-loop neighbours
        bool is_reflexive() const;
        bool is_irreflexive() const;
        bool has_loop() const;
        int index_of(const std::string & id) const;   // -1 when absent

        bool operator==(const TargetGraph &) const = default;
    };

    // Builds a validated target graph. Throws ValidationError naming the
    // offending element on duplicate ids, unknown endpoints, or
    // bipartition violations.
    TargetGraph make_target(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>> & edges,
        std::optional<std::vector<Side>> side = std::nullopt);

    // A bijection on H-vertex indices, over all of V(H) or over one side
    // of H. Out-of-domain positions hold -1.
    struct Permutation
    {
        std::vector<int> image;

        static Permutation identity(int n);
        static Permutation identity_on(const std::vector<char> & domain);
        // Cycle through the listed vertices (first -> second -> ... -> first),
        // identity elsewhere.
        static Permutation cycle(int n, const std::vector<int> & verts);
        static Permutation transposition(int n, int a, int b) { return cycle(n, {a, b}); }

        int size() const { return static_cast<int>(image.size()); }
        bool in_domain(int v) const { return v >= 0 && v < size() && image[v] >= 0; }
        int apply(int v) const;                 // throws DomainMismatch off-domain
        Permutation inverse() const;
        bool same_domain(const Permutation & other) const;

        bool operator==(const Permutation &) const = default;
    };

    // r(v) = p(q(v)); domains must agree and q must map into p's domain.
    Permutation compose(const Permutation & p, const Permutation & q);

    // Validates bijectivity and that the domain is exactly `domain`.
    // `what` names the permutation in error messages.
    void validate_permutation(const Permutation & p, const std::vector<char> & domain,
        const std::string & what);

    enum class Mode { Standard, BySide };

    // One labeled edge of G. u == v encodes a loop; repeated (u, v) pairs
    // encode parallel edges. pi is attached to u, rho to v; the record
    // (u, v, pi, rho) means the same constraint as (v, u, rho, pi).
    struct GEdge
    {
        int u = 0;
        int v = 0;
        Permutation pi;
        Permutation rho;

        bool operator==(const GEdge &) const = default;
    };

    // A labeled input graph over a fixed target. Loops and parallel edges
    // are first-class; simple inputs are just the special case without them.
    struct Instance
    {
        TargetGraph target;
        std::vector<std::string> g_vertices;
        std::vector<GEdge> edges;
        // lists[x] absent means "unrestricted"; present lists are kept as
        // membership vectors over V(H).
        std::vector<std::optional<std::vector<char>>> lists;
        Mode mode = Mode::Standard;
        std::optional<std::vector<Side>> g_side;

        int g_size() const { return static_cast<int>(g_vertices.size()); }
        bool has_lists() const;
        // Some list is a proper subset of the values the vertex could
        // otherwise take; this is what selects the list variant.
        bool has_proper_lists() const;
        int g_index_of(const std::string & id) const;
        // Membership vector of values allowed at x by side and list alone.
        std::vector<char> base_domain(int x) const;
        // The H-side a permutation at this endpoint must act on, as a
        // membership vector (all of V(H) in standard mode).
        std::vector<char> label_domain(int x) const;

        bool operator==(const Instance &) const = default;
    };

    // Full structural validation of an instance whose index fields are
    // already in range. Throws ValidationError.
    void validate_instance(const Instance & inst);

    // A total map V(G) -> V(H), stored by H-vertex index.
    using Assignment = std::vector<int>;

    struct CheckResult
    {
        bool ok = true;
        int violated_edge = -1;     // index into Instance::edges
        int violated_vertex = -1;   // list or side violation
    };

    // Accepts iff every edge (x, y, pi, rho), loops included, satisfies
    // pi(f(x)) rho(f(y)) in E(H) and f respects lists and sides. Returns
    // the first violation otherwise.
    CheckResult check_assignment(const Instance & inst, const Assignment & f);

    // One copy of V(H) per G-vertex; cross[e] flattens the allowed-pair
    // matrix of edge e: u in the copy at x joins w in the copy at y
    // exactly when pi(u) rho(w) is an edge of H.
    struct AuxiliaryGraph
    {
        int n = 0;                              // |V(H)|
        std::vector<std::vector<char>> cross;   // per edge, n*n row-major

        bool allowed(int e, int u, int w) const { return cross[e][u * n + w] != 0; }
    };

    AuxiliaryGraph build_auxiliary(const Instance & inst);
}

#endif
