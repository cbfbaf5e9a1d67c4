#include <corrhom/transforms.hh>
#include <corrhom/errors.hh>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace corrhom
{
    namespace
    {
        std::string fresh_id(std::string base, const std::set<std::string> & used)
        {
            while (used.count(base))
                base += "'";
            return base;
        }

        std::set<std::string> id_set(const Instance & inst)
        {
            return {inst.g_vertices.begin(), inst.g_vertices.end()};
        }

        void require_reflexive_standard(const Instance & inst, const char * who)
        {
            if (inst.mode != Mode::Standard || ! inst.target.is_reflexive())
                throw ShapeMismatch(std::string(who) + " requires a reflexive target "
                    "in standard mode");
        }

        // next size-t index combination in lexicographic order
        bool next_combination(std::vector<int> & c, int n)
        {
            int t = static_cast<int>(c.size());
            for (int i = t - 1; i >= 0; --i) {
                if (c[i] < n - (t - i)) {
                    ++c[i];
                    for (int j = i + 1; j < t; ++j)
                        c[j] = c[j - 1] + 1;
                    return true;
                }
            }
            return false;
        }
    }

    bool verify_expander_mask(const BipartiteMask & mask)
    {
        if (mask.N <= 0 || mask.t <= 0 || mask.t > mask.N)
            return false;
        // a monochromatic t x t pair exists iff some row t-subset sees
        // at least t all-equal columns
        std::vector<int> rows(mask.t);
        for (int i = 0; i < mask.t; ++i)
            rows[i] = i;
        do {
            int all_zero = 0, all_one = 0;
            for (int c = 0; c < mask.N; ++c) {
                bool any0 = false, any1 = false;
                for (int r : rows)
                    (mask.bits[r][c] ? any1 : any0) = true;
                if (! any1)
                    ++all_zero;
                if (! any0)
                    ++all_one;
            }
            if (all_zero >= mask.t || all_one >= mask.t)
                return false;
        } while (next_combination(rows, mask.N));
        return true;
    }

    namespace
    {
        // One monochromatic t x t witness, or empty when the mask is good.
        struct MaskViolation
        {
            std::vector<int> rows;
            std::vector<int> cols;
            bool found = false;
        };

        MaskViolation find_violation(const BipartiteMask & mask, std::mt19937_64 & rng)
        {
            std::vector<int> rows(mask.t);
            for (int i = 0; i < mask.t; ++i)
                rows[i] = i;
            std::vector<MaskViolation> hits;
            do {
                for (int want : {0, 1}) {
                    std::vector<int> cols;
                    for (int c = 0; c < mask.N; ++c) {
                        bool uniform = true;
                        for (int r : rows)
                            if (mask.bits[r][c] != want) {
                                uniform = false;
                                break;
                            }
                        if (uniform)
                            cols.push_back(c);
                    }
                    if (static_cast<int>(cols.size()) >= mask.t)
                        hits.push_back({rows, std::move(cols), true});
                }
            } while (next_combination(rows, mask.N));
            if (hits.empty())
                return {};
            return hits[rng() % hits.size()];
        }
    }

    BipartiteMask sample_verified_expander(int n, std::uint64_t seed)
    {
        if (n < 2)
            throw ValidationError("expander sampling needs n >= 2");

        BipartiteMask mask;
        mask.n = n;
        // sizes sit inside the feasible zone of the subset-pair invariant:
        // t = 2 already fails on every 5x5 pattern, t = 3 near 12x12, so N
        // grows in steps that keep ceil(N/n) = t while staying samplable
        if (n == 2) {
            mask.N = 4;
            mask.t = 2;
        }
        else if (n <= 5) {
            mask.N = 2 * n + 1;
            mask.t = 3;
        }
        else {
            mask.N = 3 * n + 1;
            mask.t = 4;
        }

        std::mt19937_64 rng(seed);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            mask.bits.assign(mask.N, std::vector<char>(mask.N, 0));
            for (int i = 0; i < mask.N; ++i)
                for (int j = 0; j < mask.N; ++j)
                    mask.bits[i][j] = (rng() >> 32) & 1;

            // min-conflicts repair: flip one entry of one monochromatic
            // witness at a time
            for (int flip = 0; flip < 2000; ++flip) {
                MaskViolation v = find_violation(mask, rng);
                if (! v.found)
                    break;
                int r = v.rows[rng() % v.rows.size()];
                int c = v.cols[rng() % v.cols.size()];
                mask.bits[r][c] ^= 1;
            }
            if (verify_expander_mask(mask))
                return mask;
        }
        throw RetriesExhausted("no verified expander mask for n = " + std::to_string(n) +
            " (N = " + std::to_string(mask.N) + ", t = " + std::to_string(mask.t) +
            ") within 1000 samples");
    }

    Instance eliminate_loops(const Instance & inst)
    {
        require_reflexive_standard(inst, "loop elimination");

        Instance cur = inst;
        for (;;) {
            int loop_edge = -1;
            for (int e = 0; e < static_cast<int>(cur.edges.size()); ++e)
                if (cur.edges[e].u == cur.edges[e].v) {
                    loop_edge = e;
                    break;
                }
            if (loop_edge < 0)
                return cur;

            int x = cur.edges[loop_edge].u;
            Permutation pi = cur.edges[loop_edge].pi;
            Permutation rho = cur.edges[loop_edge].rho;
            int copies = cur.target.size() + 1;

            std::set<std::string> used = id_set(cur);
            std::vector<std::string> copy_ids;
            for (int i = 0; i < copies; ++i) {
                std::string id = fresh_id(cur.g_vertices[x] + "_" + std::to_string(i), used);
                used.insert(id);
                copy_ids.push_back(id);
            }

            Instance next;
            next.target = cur.target;
            next.mode = cur.mode;

            std::vector<int> remap(cur.g_size(), -1);   // old index -> new index
            std::vector<int> copy_index;
            for (int v = 0; v < cur.g_size(); ++v) {
                if (v == x) {
                    for (const auto & id : copy_ids) {
                        copy_index.push_back(static_cast<int>(next.g_vertices.size()));
                        next.g_vertices.push_back(id);
                        next.lists.push_back(cur.lists[x]);
                    }
                }
                else {
                    remap[v] = static_cast<int>(next.g_vertices.size());
                    next.g_vertices.push_back(cur.g_vertices[v]);
                    next.lists.push_back(cur.lists[v]);
                }
            }

            for (int e = 0; e < static_cast<int>(cur.edges.size()); ++e) {
                if (e == loop_edge)
                    continue;
                const GEdge & ed = cur.edges[e];
                if (ed.u == x && ed.v == x) {
                    for (int c : copy_index)
                        next.edges.push_back({c, c, ed.pi, ed.rho});
                }
                else if (ed.u == x) {
                    for (int c : copy_index)
                        next.edges.push_back({c, remap[ed.v], ed.pi, ed.rho});
                }
                else if (ed.v == x) {
                    for (int c : copy_index)
                        next.edges.push_back({remap[ed.u], c, ed.pi, ed.rho});
                }
                else {
                    next.edges.push_back({remap[ed.u], remap[ed.v], ed.pi, ed.rho});
                }
            }
            for (std::size_t i = 0; i < copy_index.size(); ++i)
                for (std::size_t j = i + 1; j < copy_index.size(); ++j)
                    next.edges.push_back({copy_index[i], copy_index[j], pi, rho});

            cur = std::move(next);
        }
    }

    namespace
    {
        bool same_oriented_label(const GEdge & a, const GEdge & b)
        {
            if (a.u == b.u && a.v == b.v)
                return a.pi == b.pi && a.rho == b.rho;
            return a.pi == b.rho && a.rho == b.pi;
        }
    }

    Instance eliminate_parallel_edges(const Instance & inst, std::uint64_t seed)
    {
        require_reflexive_standard(inst, "parallel-edge elimination");
        for (const auto & e : inst.edges)
            if (e.u == e.v)
                throw NotApplicable("instance still has loops; eliminate those first");

        Instance cur = inst;
        std::uint64_t round = 0;
        for (;;) {
            int e1 = -1, e2 = -1;
            for (int i = 0; i < static_cast<int>(cur.edges.size()) && e1 < 0; ++i)
                for (int j = i + 1; j < static_cast<int>(cur.edges.size()); ++j) {
                    bool same = (cur.edges[i].u == cur.edges[j].u && cur.edges[i].v == cur.edges[j].v) ||
                        (cur.edges[i].u == cur.edges[j].v && cur.edges[i].v == cur.edges[j].u);
                    if (same) {
                        e1 = i;
                        e2 = j;
                        break;
                    }
                }
            if (e1 < 0)
                return cur;

            if (same_oriented_label(cur.edges[e1], cur.edges[e2])) {
                cur.edges.erase(cur.edges.begin() + e2);
                continue;
            }

            int x = cur.edges[e1].u, y = cur.edges[e1].v;
            Permutation pi1 = cur.edges[e1].pi, rho1 = cur.edges[e1].rho;
            Permutation pi2, rho2;
            if (cur.edges[e2].u == x) {
                pi2 = cur.edges[e2].pi;
                rho2 = cur.edges[e2].rho;
            }
            else {
                pi2 = cur.edges[e2].rho;
                rho2 = cur.edges[e2].pi;
            }

            BipartiteMask mask = sample_verified_expander(cur.target.size(), seed + round++);

            std::set<std::string> used = id_set(cur);
            auto make_copies = [&](int v) {
                std::vector<std::string> ids;
                for (int i = 0; i < mask.N; ++i) {
                    std::string id = fresh_id(cur.g_vertices[v] + "_" + std::to_string(i), used);
                    used.insert(id);
                    ids.push_back(id);
                }
                return ids;
            };
            std::vector<std::string> x_ids = make_copies(x), y_ids = make_copies(y);

            Instance next;
            next.target = cur.target;
            next.mode = cur.mode;

            std::vector<int> remap(cur.g_size(), -1);
            std::vector<int> x_copy, y_copy;
            for (int v = 0; v < cur.g_size(); ++v) {
                if (v == x || v == y) {
                    const auto & ids = v == x ? x_ids : y_ids;
                    auto & idx = v == x ? x_copy : y_copy;
                    for (const auto & id : ids) {
                        idx.push_back(static_cast<int>(next.g_vertices.size()));
                        next.g_vertices.push_back(id);
                        next.lists.push_back(cur.lists[v]);
                    }
                }
                else {
                    remap[v] = static_cast<int>(next.g_vertices.size());
                    next.g_vertices.push_back(cur.g_vertices[v]);
                    next.lists.push_back(cur.lists[v]);
                }
            }

            auto copies_of = [&](int v) -> const std::vector<int> & {
                return v == x ? x_copy : y_copy;
            };
            for (int e = 0; e < static_cast<int>(cur.edges.size()); ++e) {
                if (e == e1 || e == e2)
                    continue;
                const GEdge & ed = cur.edges[e];
                bool us = ed.u == x || ed.u == y, vs = ed.v == x || ed.v == y;
                if (us && vs) {
                    for (int a : copies_of(ed.u))
                        for (int b : copies_of(ed.v))
                            next.edges.push_back({a, b, ed.pi, ed.rho});
                }
                else if (us) {
                    for (int a : copies_of(ed.u))
                        next.edges.push_back({a, remap[ed.v], ed.pi, ed.rho});
                }
                else if (vs) {
                    for (int b : copies_of(ed.v))
                        next.edges.push_back({remap[ed.u], b, ed.pi, ed.rho});
                }
                else {
                    next.edges.push_back({remap[ed.u], remap[ed.v], ed.pi, ed.rho});
                }
            }
            for (int i = 0; i < mask.N; ++i)
                for (int j = 0; j < mask.N; ++j) {
                    if (mask.bits[i][j])
                        next.edges.push_back({x_copy[i], y_copy[j], pi1, rho1});
                    else
                        next.edges.push_back({x_copy[i], y_copy[j], pi2, rho2});
                }

            cur = std::move(next);
        }
    }

    TargetGraph square_graph(const TargetGraph & h)
    {
        TargetGraph sq = h;
        int n = h.size();
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v) {
                bool walk = h.adjacent(u, v);
                for (int w = 0; w < n && ! walk; ++w)
                    walk = h.adjacent(u, w) && h.adjacent(w, v);
                if (walk)
                    sq.adj[u][v] = sq.adj[v][u] = 1;
            }
        return sq;
    }

    Instance subdivide_for_square(const Instance & inst, const TargetGraph & base)
    {
        if (! base.is_reflexive())
            throw ShapeMismatch("square subdivision requires a reflexive base target");
        if (! (square_graph(base) == inst.target))
            throw TargetMismatch("the instance's target is not the square of the base graph");

        Instance out;
        out.target = base;
        out.mode = inst.mode;
        out.g_vertices = inst.g_vertices;
        out.lists = inst.lists;

        std::set<std::string> used = id_set(inst);
        Permutation id = Permutation::identity(base.size());
        for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
            const GEdge & ed = inst.edges[e];
            std::string mid = fresh_id(inst.g_vertices[ed.u] + "~" + inst.g_vertices[ed.v] +
                "~" + std::to_string(e), used);
            used.insert(mid);
            int z = static_cast<int>(out.g_vertices.size());
            out.g_vertices.push_back(mid);
            out.lists.push_back(std::nullopt);
            out.edges.push_back({ed.u, z, ed.pi, id});
            out.edges.push_back({z, ed.v, id, ed.rho});
        }
        return out;
    }

    Instance add_restriction_loop(const Instance & inst, int g_vertex,
        const Permutation & pi, const Permutation & rho)
    {
        Instance out = inst;
        out.edges.push_back({g_vertex, g_vertex, pi, rho});
        return out;
    }

    std::vector<int> restricted_domain(const TargetGraph & h,
        const Permutation & pi, const Permutation & rho)
    {
        std::vector<int> dom;
        for (int u = 0; u < h.size(); ++u)
            if (h.adjacent(pi.apply(u), rho.apply(u)))
                dom.push_back(u);
        return dom;
    }

    Instance gadget_three_path(const Instance & inst)
    {
        const TargetGraph & h = inst.target;
        if (inst.mode != Mode::Standard || h.size() != 4 || ! h.is_reflexive())
            throw TargetMismatch("path gadget requires a reflexive four-vertex target");

        int isolated = -1;
        for (int v = 0; v < 4; ++v)
            if (h.degree(v) == 0)
                isolated = v;
        if (isolated < 0)
            throw TargetMismatch("path gadget requires an isolated loop in the target");
        std::vector<int> triangle;
        for (int v = 0; v < 4; ++v)
            if (v != isolated)
                triangle.push_back(v);
        for (int i : triangle)
            for (int j : triangle)
                if (i != j && ! h.adjacent(i, j))
                    throw TargetMismatch("path gadget requires the other three vertices "
                        "to form a reflexive triangle");

        // thin the triangle b c d down to the single edge c-d
        int b = triangle[0], c = triangle[1], d = triangle[2];
        TargetGraph thin = h;
        thin.adj[b][c] = thin.adj[c][b] = 0;
        thin.adj[b][d] = thin.adj[d][b] = 0;

        Permutation swap_bc = Permutation::transposition(4, b, c);

        Instance out;
        out.target = thin;
        out.mode = inst.mode;
        out.g_vertices = inst.g_vertices;
        out.lists = inst.lists;

        std::set<std::string> used = id_set(inst);
        for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
            const GEdge & ed = inst.edges[e];
            Permutation pi_swapped = compose(swap_bc, ed.pi);
            Permutation rho_swapped = compose(swap_bc, ed.rho);

            auto add_mid = [&](const std::string & tag) {
                std::string id = fresh_id(inst.g_vertices[ed.u] + "~" + inst.g_vertices[ed.v] +
                    "~" + std::to_string(e) + tag, used);
                used.insert(id);
                out.g_vertices.push_back(id);
                out.lists.push_back(std::nullopt);
                return static_cast<int>(out.g_vertices.size()) - 1;
            };
            int m1 = add_mid("a"), m2 = add_mid("b");
            out.edges.push_back({ed.u, m1, ed.pi, pi_swapped});
            out.edges.push_back({m1, m2, ed.pi, pi_swapped});
            out.edges.push_back({m2, ed.v, ed.pi, rho_swapped});
        }
        return out;
    }

    Instance reduce_one_in_three_sat(const CnfFormula & formula)
    {
        for (const auto & cl : formula.clauses)
            if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
                throw ValidationError("a triple repeats a variable");

        Instance out;
        out.target = make_target({"a", "b", "c"},
            {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"b", "c"}});
        out.mode = Mode::Standard;

        out.g_vertices = formula.variables;
        std::set<std::string> used(out.g_vertices.begin(), out.g_vertices.end());
        if (used.size() != out.g_vertices.size())
            throw ValidationError("formula repeats a variable name");

        std::vector<int> triple_vertex;
        for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
            std::string id = fresh_id("T" + std::to_string(j), used);
            used.insert(id);
            triple_vertex.push_back(static_cast<int>(out.g_vertices.size()));
            out.g_vertices.push_back(id);
        }
        out.lists.assign(out.g_vertices.size(), std::nullopt);

        Permutation id3 = Permutation::identity(3);
        std::array<Permutation, 3> rho{
            id3,
            Permutation::transposition(3, 0, 1),   // a <-> b
            Permutation::transposition(3, 0, 2),   // a <-> c
        };
        for (std::size_t j = 0; j < formula.clauses.size(); ++j)
            for (int k = 0; k < 3; ++k)
                out.edges.push_back({formula.clauses[j][k], triple_vertex[j], id3, rho[k]});
        return out;
    }

    Instance reduce_three_colouring(const TargetGraph & graph)
    {
        Instance out;
        out.target = make_target({"a", "b", "c"},
            {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}});
        out.mode = Mode::Standard;
        out.g_vertices = graph.vertices;
        out.lists.assign(out.g_vertices.size(), std::nullopt);

        Permutation id3 = Permutation::identity(3);
        Permutation swap_ac = Permutation::transposition(3, 0, 2);
        Permutation swap_ab = Permutation::transposition(3, 0, 1);
        Permutation cycle_abc = Permutation::cycle(3, {0, 1, 2});

        // the first labelling forbids the colour pairs aa and cc, the
        // second bb and cc; together exactly the improper pairs
        for (int u = 0; u < graph.size(); ++u)
            for (int v = u + 1; v < graph.size(); ++v)
                if (graph.adjacent(u, v)) {
                    out.edges.push_back({u, v, id3, swap_ac});
                    out.edges.push_back({u, v, swap_ab, cycle_abc});
                }
        return out;
    }
}
