#include <corrhom/engines.hh>
#include <corrhom/errors.hh>
#include <corrhom/two_sat.hh>

#include <algorithm>
#include <map>
#include <numeric>

namespace corrhom
{
    namespace
    {
        ShapeCase guarded_shape(const Instance & inst)
        {
            bool by_side = inst.mode == Mode::BySide;
            const TargetGraph & h = inst.target;
            if (! by_side && h.has_loop())
                return detect_shape(strip_isolated_loopless(h), false);
            return detect_shape(h, by_side);
        }

        Verdict verified_yes(const Instance & inst, Assignment f)
        {
            if (! check_assignment(inst, f).ok)
                throw InternalError("engine produced an invalid witness");
            return {Answer::Yes, std::move(f)};
        }

        int first_member(const std::vector<char> & set)
        {
            for (std::size_t h = 0; h < set.size(); ++h)
                if (set[h])
                    return static_cast<int>(h);
            return -1;
        }

        // ---- xor engine -------------------------------------------------

        struct XorShape
        {
            int cross_bit = 0;                      // 0: same class, 1: opposite
            std::vector<int> class_bit;             // H-vertex -> component/side class
            std::array<int, 4> canon_all{};         // standard mode
            std::array<int, 4> canon_black{}, canon_white{};
        };

        std::array<int, 4> canon_of(const std::vector<int> & class0, const std::vector<int> & class1)
        {
            if (class0.size() != 2 || class1.size() != 2)
                throw InternalError("canonical labeling needs two classes of two vertices");
            return {class0[0], class0[1], class1[0], class1[1]};
        }

        // connected components over non-loop edges
        std::vector<int> target_components(const TargetGraph & h)
        {
            std::vector<int> comp(h.size(), -1);
            int c = 0;
            for (int s = 0; s < h.size(); ++s) {
                if (comp[s] >= 0)
                    continue;
                comp[s] = c;
                std::vector<int> queue{s};
                while (! queue.empty()) {
                    int u = queue.back();
                    queue.pop_back();
                    for (int v = 0; v < h.size(); ++v)
                        if (v != u && h.adjacent(u, v) && comp[v] < 0) {
                            comp[v] = c;
                            queue.push_back(v);
                        }
                }
                ++c;
            }
            return comp;
        }

        XorShape xor_shape_of(const Instance & inst)
        {
            const TargetGraph & h = inst.target;
            ShapeCase shape = detect_shape(h, inst.mode == Mode::BySide);
            XorShape xs;
            xs.class_bit.assign(h.size(), 0);

            if (inst.mode == Mode::Standard && shape.tag == ShapeTag::Reflexive2K2) {
                std::vector<int> comp = target_components(h);
                std::vector<int> c0, c1;
                for (int v = 0; v < h.size(); ++v)
                    (comp[v] == comp[0] ? c0 : c1).push_back(v);
                for (int v : c1)
                    xs.class_bit[v] = 1;
                xs.canon_all = canon_of(c0, c1);
                xs.cross_bit = 0;
                return xs;
            }
            if (inst.mode == Mode::Standard && shape.tag == ShapeTag::IrreflexiveK22) {
                std::vector<int> c0{0}, c1;
                for (int v = 1; v < h.size(); ++v)
                    (h.adjacent(0, v) ? c1 : c0).push_back(v);
                for (int v : c1)
                    xs.class_bit[v] = 1;
                xs.canon_all = canon_of(c0, c1);
                xs.cross_bit = 1;
                return xs;
            }
            if (inst.mode == Mode::BySide && shape.tag == ShapeTag::TwoK22) {
                std::vector<int> comp = target_components(h);
                int first_black = -1;
                for (int v = 0; v < h.size(); ++v)
                    if ((*h.side)[v] == Side::Black) {
                        first_black = v;
                        break;
                    }
                std::vector<int> b0, b1, w0, w1;
                for (int v = 0; v < h.size(); ++v) {
                    bool in0 = comp[v] == comp[first_black];
                    if (! in0)
                        xs.class_bit[v] = 1;
                    ((*h.side)[v] == Side::Black ? (in0 ? b0 : b1) : (in0 ? w0 : w1)).push_back(v);
                }
                xs.canon_black = canon_of(b0, b1);
                xs.canon_white = canon_of(w0, w1);
                xs.cross_bit = 0;
                return xs;
            }
            throw ShapeMismatch("xor engine needs a reflexive 2K2, an irreflexive K2,2, "
                "or a by-side pair of K2,2");
        }

        void encode_list(XorEncoding & enc, const Instance & inst, int x)
        {
            std::vector<char> dom = inst.base_domain(x);
            std::vector<int> allowed;
            for (int p = 0; p < 4; ++p)
                if (dom[enc.vertex_canon[x][p]])
                    allowed.push_back(p);

            int a = 2 * x, b = 2 * x + 1;
            switch (allowed.size()) {
            case 4:
                return;
            case 0:
                enc.system.add_row({}, 1);
                return;
            case 1:
                enc.system.add_row({a}, (allowed[0] >> 1) & 1);
                enc.system.add_row({b}, allowed[0] & 1);
                return;
            case 2: {
                int d = allowed[0] ^ allowed[1];
                if (d == 1)
                    enc.system.add_row({a}, (allowed[0] >> 1) & 1);
                else if (d == 2)
                    enc.system.add_row({b}, allowed[0] & 1);
                else
                    enc.system.add_row({a, b}, ((allowed[0] >> 1) ^ allowed[0]) & 1);
                return;
            }
            default:
                throw NonAffineList("list at '" + inst.g_vertices[x] +
                    "' keeps 3 of 4 values and has no affine description");
            }
        }
    }

    Assignment XorEncoding::decode(const std::vector<int> & bits) const
    {
        Assignment f(vertex_canon.size(), -1);
        for (std::size_t x = 0; x < vertex_canon.size(); ++x)
            f[x] = vertex_canon[x][2 * bits[2 * x] + bits[2 * x + 1]];
        return f;
    }

    XorEncoding encode_xor(const Instance & inst)
    {
        XorShape xs = xor_shape_of(inst);

        XorEncoding enc;
        enc.system.num_vars = 2 * inst.g_size();
        enc.vertex_canon.resize(inst.g_size());
        for (int x = 0; x < inst.g_size(); ++x) {
            if (inst.mode == Mode::Standard)
                enc.vertex_canon[x] = xs.canon_all;
            else
                enc.vertex_canon[x] = (*inst.g_side)[x] == Side::Black
                    ? xs.canon_black : xs.canon_white;
        }

        for (const auto & e : inst.edges) {
            std::array<int, 4> phi_u{}, phi_v{};
            for (int p = 0; p < 4; ++p) {
                phi_u[p] = xs.class_bit[e.pi.apply(enc.vertex_canon[e.u][p])];
                phi_v[p] = xs.class_bit[e.rho.apply(enc.vertex_canon[e.v][p])];
            }
            AffineForm g = fit_affine(phi_u);
            AffineForm h = fit_affine(phi_v);

            std::vector<int> on;
            if (g.coeff_a)
                on.push_back(2 * e.u);
            if (g.coeff_b)
                on.push_back(2 * e.u + 1);
            if (h.coeff_a)
                on.push_back(2 * e.v);
            if (h.coeff_b)
                on.push_back(2 * e.v + 1);
            // duplicate variables cancel, which handles G-loops
            enc.system.add_row(on, g.constant ^ h.constant ^ xs.cross_bit);
        }

        for (int x = 0; x < inst.g_size(); ++x)
            if (inst.lists[x])
                encode_list(enc, inst, x);

        return enc;
    }

    Verdict solve_xor(const Instance & inst)
    {
        XorEncoding enc = encode_xor(inst);
        Gf2Solution sol = solve_linear_gf2(enc.system);
        if (! sol.satisfiable)
            return {Answer::No, std::nullopt};
        return verified_yes(inst, enc.decode(sol.assignment));
    }

    // ---- unary engine ---------------------------------------------------

    Verdict solve_unary(const Instance & inst)
    {
        ShapeCase shape = guarded_shape(inst);
        bool ok = (inst.mode == Mode::Standard && shape.tag == ShapeTag::ReflexiveClique) ||
            (inst.mode == Mode::BySide && shape.tag == ShapeTag::CompleteBipartitePlusIsolated);
        if (! ok)
            throw ShapeMismatch("unary engine needs a reflexive clique or a by-side "
                "complete bipartite target (plus isolated vertices)");

        const TargetGraph & h = inst.target;
        std::vector<char> core(h.size(), 0);
        for (int v = 0; v < h.size(); ++v)
            core[v] = (h.degree(v) > 0 || h.has_loop(v)) ? 1 : 0;

        std::vector<std::vector<char>> dom(inst.g_size());
        for (int x = 0; x < inst.g_size(); ++x)
            dom[x] = inst.base_domain(x);

        auto restrict_through = [&](int x, const Permutation & sigma) {
            for (int u = 0; u < h.size(); ++u)
                if (dom[x][u] && ! core[sigma.apply(u)])
                    dom[x][u] = 0;
        };
        for (const auto & e : inst.edges) {
            restrict_through(e.u, e.pi);
            restrict_through(e.v, e.rho);
        }

        Assignment f(inst.g_size(), -1);
        for (int x = 0; x < inst.g_size(); ++x) {
            f[x] = first_member(dom[x]);
            if (f[x] < 0)
                return {Answer::No, std::nullopt};
        }
        return verified_yes(inst, f);
    }

    // ---- propagation engine ----------------------------------------------

    Verdict solve_propagation(const Instance & inst)
    {
        ShapeCase shape = guarded_shape(inst);
        bool ok = shape.tag == ShapeTag::IrreflexiveMatchingPlusIsolated ||
            (inst.mode == Mode::Standard &&
                (shape.tag == ShapeTag::ReflexiveCoClique ||
                 shape.tag == ShapeTag::MatchingPlusReflexiveIsolated));
        if (! ok)
            throw ShapeMismatch("propagation engine needs a target whose vertices have "
                "at most one neighbour (loops counting as self)");

        const TargetGraph & h = inst.target;
        std::vector<int> succ(h.size(), -1);
        for (int u = 0; u < h.size(); ++u)
            for (int v = 0; v < h.size(); ++v)
                if (h.adjacent(u, v)) {
                    if (succ[u] >= 0)
                        throw InternalError("propagation target has a branching vertex");
                    succ[u] = v;
                }

        // group G-vertices into connected components, in discovery order
        int g = inst.g_size();
        std::vector<std::vector<std::pair<int, int>>> incident(g);
        for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
            const GEdge & ed = inst.edges[e];
            if (ed.u != ed.v) {
                incident[ed.u].emplace_back(e, ed.v);
                incident[ed.v].emplace_back(e, ed.u);
            }
        }

        std::vector<int> comp(g, -1);
        Assignment f(g, -1);

        for (int root = 0; root < g; ++root) {
            if (comp[root] >= 0)
                continue;
            std::vector<int> members{root};
            comp[root] = root;
            for (std::size_t k = 0; k < members.size(); ++k)
                for (const auto & [e, y] : incident[members[k]])
                    if (comp[y] < 0) {
                        comp[y] = root;
                        members.push_back(y);
                    }

            std::vector<char> root_dom = inst.base_domain(root);
            bool solved = false;
            for (int v0 = 0; v0 < h.size() && ! solved; ++v0) {
                if (! root_dom[v0])
                    continue;
                for (int m : members)
                    f[m] = -1;
                f[root] = v0;

                bool dead = false;
                std::vector<int> queue{root};
                for (std::size_t k = 0; k < queue.size() && ! dead; ++k) {
                    int x = queue[k];
                    for (const auto & [e, y] : incident[x]) {
                        if (f[y] >= 0)
                            continue;
                        const GEdge & ed = inst.edges[e];
                        const Permutation & out = ed.u == x ? ed.pi : ed.rho;
                        const Permutation & in = ed.u == x ? ed.rho : ed.pi;
                        int w = succ[out.apply(f[x])];
                        if (w < 0) {
                            dead = true;
                            break;
                        }
                        f[y] = in.inverse().apply(w);
                        queue.push_back(y);
                    }
                }
                if (dead)
                    continue;

                // verify lists, sides, loops, parallel and non-tree edges
                for (int m : members) {
                    if (! inst.base_domain(m)[f[m]]) {
                        dead = true;
                        break;
                    }
                }
                if (! dead)
                    for (const auto & ed : inst.edges) {
                        if (comp[ed.u] != root)
                            continue;
                        if (! h.adjacent(ed.pi.apply(f[ed.u]), ed.rho.apply(f[ed.v]))) {
                            dead = true;
                            break;
                        }
                    }
                solved = ! dead;
            }
            if (! solved)
                return {Answer::No, std::nullopt};
        }
        return verified_yes(inst, f);
    }

    // ---- star / double-star engine ----------------------------------------

    Verdict solve_center_two_sat(const Instance & inst)
    {
        ShapeCase shape = guarded_shape(inst);
        const TargetGraph & h = inst.target;

        int center_black = -1, center_white = -1;   // standard mode uses both = c
        if (inst.mode == Mode::Standard && shape.tag == ShapeTag::LoopedCenterStar) {
            for (int v = 0; v < h.size(); ++v)
                if (h.has_loop(v))
                    center_black = center_white = v;
        }
        else if (inst.mode == Mode::BySide && shape.tag == ShapeTag::DoubleStarPlusIsolated) {
            for (int c : shape.centers)
                ((*h.side)[c] == Side::Black ? center_black : center_white) = c;
        }
        else {
            throw ShapeMismatch("two-sat engine needs a looped-center star or a by-side "
                "double star (plus isolated vertices)");
        }

        std::vector<char> non_isolated(h.size(), 0);
        for (int v = 0; v < h.size(); ++v)
            non_isolated[v] = (h.degree(v) > 0 || h.has_loop(v)) ? 1 : 0;

        auto center_at = [&](int x) {
            if (inst.mode == Mode::Standard)
                return center_black;
            return (*inst.g_side)[x] == Side::Black ? center_black : center_white;
        };

        // unary pass: positive-degree vertices must keep all their images
        // away from isolated target vertices
        std::vector<std::vector<char>> surviving(inst.g_size());
        for (int x = 0; x < inst.g_size(); ++x)
            surviving[x] = inst.base_domain(x);
        auto restrict_through = [&](int x, const Permutation & sigma) {
            for (int u = 0; u < h.size(); ++u)
                if (surviving[x][u] && ! non_isolated[sigma.apply(u)])
                    surviving[x][u] = 0;
        };
        for (const auto & e : inst.edges) {
            restrict_through(e.u, e.pi);
            restrict_through(e.v, e.rho);
        }
        for (int x = 0; x < inst.g_size(); ++x)
            if (first_member(surviving[x]) < 0)
                return {Answer::No, std::nullopt};

        // clause variables X(x, u) on demand
        std::map<std::pair<int, int>, int> var_of;
        std::vector<std::pair<int, int>> pair_of;
        auto var = [&](int x, int u) {
            auto [it, fresh] = var_of.try_emplace({x, u}, static_cast<int>(pair_of.size()));
            if (fresh)
                pair_of.push_back({x, u});
            return it->second;
        };

        std::vector<std::pair<int, int>> clauses;
        for (const auto & e : inst.edges) {
            int pu = e.pi.inverse().apply(center_at(e.u));
            int pv = e.rho.inverse().apply(center_at(e.v));
            clauses.emplace_back(var(e.u, pu), var(e.v, pv));
        }

        TwoSat sat(static_cast<int>(pair_of.size()));
        for (const auto & [a, b] : clauses)
            sat.add_clause(TwoSat::pos(a), TwoSat::pos(b));
        for (int v = 0; v < static_cast<int>(pair_of.size()); ++v) {
            const auto & [x, u] = pair_of[v];
            if (! surviving[x][u])
                sat.add_unit(TwoSat::neg(v));
            for (int w = v + 1; w < static_cast<int>(pair_of.size()); ++w)
                if (pair_of[w].first == x)
                    sat.add_clause(TwoSat::neg(v), TwoSat::neg(w));
        }

        auto model = sat.solve();
        if (! model)
            return {Answer::No, std::nullopt};

        Assignment f(inst.g_size(), -1);
        for (int v = 0; v < static_cast<int>(pair_of.size()); ++v)
            if ((*model)[v])
                f[pair_of[v].first] = pair_of[v].second;
        for (int x = 0; x < inst.g_size(); ++x)
            if (f[x] < 0)
                f[x] = first_member(surviving[x]);
        return verified_yes(inst, f);
    }

    // ---- two-K1,2 engine ----------------------------------------------------

    Verdict solve_double_k12(const Instance & inst)
    {
        ShapeCase shape = guarded_shape(inst);
        if (inst.mode != Mode::BySide || shape.tag != ShapeTag::TwoK12WhiteLeavesPlusBlackIsolated)
            throw ShapeMismatch("double-k12 engine needs a by-side pair of K1,2 with "
                "shared-side leaves plus isolated centre-side vertices");

        const TargetGraph & h = inst.target;
        int c1 = shape.centers[0], c2 = shape.centers[1];
        Side center_side = (*h.side)[c1];

        // leaf canon: the two leaves of c1 at positions 0,1; of c2 at 2,3
        std::array<int, 4> leaf_canon{};
        int at = 0;
        for (int c : {c1, c2})
            for (int v = 0; v < h.size(); ++v)
                if (v != c1 && v != c2 && h.adjacent(c, v))
                    leaf_canon[at++] = v;
        if (at != 4)
            throw InternalError("two-K1,2 target without exactly four leaves");

        std::vector<int> leaf_pos(h.size(), -1);
        for (int p = 0; p < 4; ++p)
            leaf_pos[leaf_canon[p]] = p;

        // centre-side candidates per vertex
        int g = inst.g_size();
        std::vector<std::vector<int>> candidates(g);
        std::vector<char> on_center_side(g, 0);
        for (int x = 0; x < g; ++x) {
            on_center_side[x] = (*inst.g_side)[x] == center_side ? 1 : 0;
            if (on_center_side[x]) {
                std::vector<char> dom = inst.base_domain(x);
                for (int u = 0; u < h.size(); ++u)
                    if (dom[u])
                        candidates[x].push_back(u);
            }
        }
        auto intersect_with_pair = [&](int x, int a, int b) {
            std::vector<int> keep;
            for (int u : candidates[x])
                if (u == a || u == b)
                    keep.push_back(u);
            candidates[x] = std::move(keep);
        };
        for (const auto & e : inst.edges) {
            int x = on_center_side[e.u] ? e.u : e.v;
            const Permutation & sigma = on_center_side[e.u] ? e.pi : e.rho;
            Permutation inv = sigma.inverse();
            intersect_with_pair(x, inv.apply(c1), inv.apply(c2));
        }

        // variable layout: one selector bit per two-candidate centre vertex,
        // then two bits per leaf-side vertex
        std::vector<int> selector(g, -1), leaf_var(g, -1);
        int nv = 0;
        for (int x = 0; x < g; ++x) {
            if (on_center_side[x]) {
                if (candidates[x].empty())
                    return {Answer::No, std::nullopt};
                if (candidates[x].size() == 2)
                    selector[x] = nv++;
            }
        }
        for (int x = 0; x < g; ++x)
            if (! on_center_side[x]) {
                leaf_var[x] = nv;
                nv += 2;
            }

        LinearSystem sys;
        sys.num_vars = nv;

        for (const auto & e : inst.edges) {
            int x = on_center_side[e.u] ? e.u : e.v;
            int y = on_center_side[e.u] ? e.v : e.u;
            const Permutation & sigma = on_center_side[e.u] ? e.pi : e.rho;
            const Permutation & tau = on_center_side[e.u] ? e.rho : e.pi;

            std::array<int, 4> lam{};
            for (int p = 0; p < 4; ++p)
                lam[p] = leaf_pos[tau.apply(leaf_canon[p])] >> 1;
            AffineForm lf = fit_affine(lam);

            std::vector<int> on;
            if (lf.coeff_a)
                on.push_back(leaf_var[y]);
            if (lf.coeff_b)
                on.push_back(leaf_var[y] + 1);

            if (candidates[x].size() == 1) {
                int beta = sigma.apply(candidates[x][0]) == c2 ? 1 : 0;
                sys.add_row(on, beta ^ lf.constant);
            }
            else {
                int beta0 = sigma.apply(candidates[x][0]) == c2 ? 1 : 0;
                on.push_back(selector[x]);
                sys.add_row(on, beta0 ^ lf.constant);
            }
        }

        // leaf-side lists, encoded like the xor engine's
        for (int y = 0; y < g; ++y) {
            if (on_center_side[y] || ! inst.lists[y])
                continue;
            std::vector<char> dom = inst.base_domain(y);
            std::vector<int> allowed;
            for (int p = 0; p < 4; ++p)
                if (dom[leaf_canon[p]])
                    allowed.push_back(p);
            int a = leaf_var[y], b = leaf_var[y] + 1;
            if (allowed.size() == 4)
                continue;
            if (allowed.empty()) {
                sys.add_row({}, 1);
            }
            else if (allowed.size() == 1) {
                sys.add_row({a}, (allowed[0] >> 1) & 1);
                sys.add_row({b}, allowed[0] & 1);
            }
            else if (allowed.size() == 2) {
                int d = allowed[0] ^ allowed[1];
                if (d == 1)
                    sys.add_row({a}, (allowed[0] >> 1) & 1);
                else if (d == 2)
                    sys.add_row({b}, allowed[0] & 1);
                else
                    sys.add_row({a, b}, ((allowed[0] >> 1) ^ allowed[0]) & 1);
            }
            else {
                throw NonAffineList("list at '" + inst.g_vertices[y] +
                    "' keeps 3 of 4 leaves and has no affine description");
            }
        }

        Gf2Solution sol = solve_linear_gf2(sys);
        if (! sol.satisfiable)
            return {Answer::No, std::nullopt};

        Assignment f(g, -1);
        for (int x = 0; x < g; ++x) {
            if (on_center_side[x]) {
                f[x] = selector[x] >= 0
                    ? candidates[x][sol.assignment[selector[x]]]
                    : candidates[x][0];
            }
            else {
                int pos = 2 * sol.assignment[leaf_var[x]] + sol.assignment[leaf_var[x] + 1];
                f[x] = leaf_canon[pos];
            }
        }
        return verified_yes(inst, f);
    }

    // ---- dispatch ------------------------------------------------------------

    namespace
    {
        Verdict dispatch(const std::string & engine, const Instance & inst,
            const SearchLimits & limits)
        {
            if (engine == "oracle")
                return solve_exact(inst, limits);
            if (engine == "xor")
                return solve_xor(inst);
            if (engine == "unary")
                return solve_unary(inst);
            if (engine == "propagate")
                return solve_propagation(inst);
            if (engine == "two-sat")
                return solve_center_two_sat(inst);
            if (engine == "double-k12")
                return solve_double_k12(inst);
            throw ValidationError("unknown engine '" + engine + "'");
        }
    }

    EngineResult solve_auto(const Instance & inst, const SearchLimits & limits)
    {
        Classification c = classify(inst.target, effective_variant(inst));
        if (c.polynomial) {
            try {
                return {dispatch(c.engine, inst, limits), c.engine, false};
            }
            catch (const NonAffineList &) {
                // fall through to the exact solver
            }
            catch (const ShapeMismatch &) {
                // polynomial by classification, but outside the engine's
                // encodable shapes (isolated loopless vertices next to a 2K2)
            }
        }
        return {solve_exact(inst, limits), "oracle", true};
    }

    EngineResult run_engine(const std::string & engine, const Instance & inst,
        const SearchLimits & limits)
    {
        if (engine == "auto")
            return solve_auto(inst, limits);
        return {dispatch(engine, inst, limits), engine, false};
    }
}
