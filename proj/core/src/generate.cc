#include <corrhom/generate.hh>
#include <corrhom/errors.hh>

#include <algorithm>

namespace corrhom
{
    namespace
    {
        std::vector<std::string> ids(int n)
        {
            std::vector<std::string> v;
            for (int i = 0; i < n; ++i)
                v.push_back("h" + std::to_string(i));
            return v;
        }

        using EdgeList = std::vector<std::pair<std::string, std::string>>;

        EdgeList loops(int n)
        {
            EdgeList e;
            for (int i = 0; i < n; ++i)
                e.push_back({"h" + std::to_string(i), "h" + std::to_string(i)});
            return e;
        }

        std::string id(int i)
        {
            return "h" + std::to_string(i);
        }
    }

    TargetGraph make_reflexive_clique(int n)
    {
        EdgeList e = loops(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e.push_back({id(i), id(j)});
        return make_target(ids(n), e);
    }

    TargetGraph make_reflexive_coclique(int n)
    {
        return make_target(ids(n), loops(n));
    }

    TargetGraph make_reflexive_2k2()
    {
        EdgeList e = loops(4);
        e.push_back({id(0), id(1)});
        e.push_back({id(2), id(3)});
        return make_target(ids(4), e);
    }

    TargetGraph make_irreflexive_matching(int p, int q, bool with_sides)
    {
        int n = 2 * p + q;
        EdgeList e;
        for (int i = 0; i < p; ++i)
            e.push_back({id(2 * i), id(2 * i + 1)});
        if (! with_sides)
            return make_target(ids(n), e);
        std::vector<Side> side(n, Side::Black);
        for (int i = 0; i < p; ++i)
            side[2 * i + 1] = Side::White;
        for (int i = 2 * p; i < n; ++i)
            side[i] = (i - 2 * p) % 2 ? Side::White : Side::Black;
        return make_target(ids(n), e, side);
    }

    TargetGraph make_irreflexive_k22()
    {
        EdgeList e;
        for (int i = 0; i < 2; ++i)
            for (int j = 2; j < 4; ++j)
                e.push_back({id(i), id(j)});
        return make_target(ids(4), e);
    }

    TargetGraph make_looped_star(int leaves)
    {
        EdgeList e{{id(0), id(0)}};
        for (int i = 1; i <= leaves; ++i)
            e.push_back({id(0), id(i)});
        return make_target(ids(leaves + 1), e);
    }

    TargetGraph make_matching_plus_reflexive(int p, int q)
    {
        int n = 2 * p + q;
        EdgeList e;
        for (int i = 0; i < p; ++i)
            e.push_back({id(2 * i), id(2 * i + 1)});
        for (int i = 2 * p; i < n; ++i)
            e.push_back({id(i), id(i)});
        return make_target(ids(n), e);
    }

    TargetGraph make_complete_bipartite(int black, int white, int iso_black, int iso_white)
    {
        int n = black + white + iso_black + iso_white;
        EdgeList e;
        for (int i = 0; i < black; ++i)
            for (int j = 0; j < white; ++j)
                e.push_back({id(i), id(black + j)});
        std::vector<Side> side(n, Side::Black);
        for (int j = 0; j < white; ++j)
            side[black + j] = Side::White;
        for (int k = 0; k < iso_white; ++k)
            side[black + white + iso_black + k] = Side::White;
        return make_target(ids(n), e, side);
    }

    TargetGraph make_double_star(int black_center_leaves, int white_center_leaves,
        int iso_black, int iso_white)
    {
        // h0 black centre, h1 white centre, then white leaves of h0, black
        // leaves of h1, then isolated vertices
        int n = 2 + black_center_leaves + white_center_leaves + iso_black + iso_white;
        EdgeList e{{id(0), id(1)}};
        std::vector<Side> side(n, Side::Black);
        side[1] = Side::White;
        int at = 2;
        for (int i = 0; i < black_center_leaves; ++i, ++at) {
            e.push_back({id(0), id(at)});
            side[at] = Side::White;
        }
        for (int i = 0; i < white_center_leaves; ++i, ++at) {
            e.push_back({id(1), id(at)});
            side[at] = Side::Black;
        }
        at += iso_black;
        for (int i = 0; i < iso_white; ++i, ++at)
            side[at] = Side::White;
        return make_target(ids(n), e, side);
    }

    TargetGraph make_two_k12(int iso_centers, bool white_leaves)
    {
        // centres h0, h1 with leaf pairs h2 h3 and h4 h5
        int n = 6 + iso_centers;
        EdgeList e{{id(0), id(2)}, {id(0), id(3)}, {id(1), id(4)}, {id(1), id(5)}};
        Side center = white_leaves ? Side::Black : Side::White;
        std::vector<Side> side(n, center);
        for (int i = 2; i < 6; ++i)
            side[i] = opposite(center);
        return make_target(ids(n), e, side);
    }

    TargetGraph make_two_k22()
    {
        EdgeList e;
        for (int comp = 0; comp < 2; ++comp) {
            int base = 4 * comp;
            for (int i = 0; i < 2; ++i)
                for (int j = 2; j < 4; ++j)
                    e.push_back({id(base + i), id(base + j)});
        }
        std::vector<Side> side(8, Side::Black);
        side[2] = side[3] = side[6] = side[7] = Side::White;
        return make_target(ids(8), e, side);
    }

    TargetGraph make_reflexive_path3()
    {
        EdgeList e = loops(3);
        e.push_back({id(0), id(1)});
        e.push_back({id(1), id(2)});
        return make_target(ids(3), e);
    }

    TargetGraph make_k1_union_k3()
    {
        EdgeList e = loops(4);
        e.push_back({id(1), id(2)});
        e.push_back({id(1), id(3)});
        e.push_back({id(2), id(3)});
        return make_target(ids(4), e);
    }

    TargetGraph with_isolated_loopless(const TargetGraph & t, int count)
    {
        if (t.side)
            throw ValidationError("isolated loopless padding applies to unsided targets");
        TargetGraph out = t;
        for (int k = 0; k < count; ++k) {
            std::string vid = "iso" + std::to_string(k);
            while (out.index_of(vid) >= 0)
                vid += "'";
            out.vertices.push_back(vid);
        }
        int n = out.size();
        for (auto & row : out.adj)
            row.resize(n, 0);
        while (static_cast<int>(out.adj.size()) < n)
            out.adj.push_back(std::vector<char>(n, 0));
        return out;
    }

    TargetGraph shuffled_target(const TargetGraph & t, Rng & rng)
    {
        std::vector<int> order(t.size());
        for (int i = 0; i < t.size(); ++i)
            order[i] = i;
        rng.shuffle(order);

        TargetGraph out;
        out.vertices.resize(t.size());
        out.adj.assign(t.size(), std::vector<char>(t.size(), 0));
        if (t.side)
            out.side = std::vector<Side>(t.size(), Side::Black);
        for (int i = 0; i < t.size(); ++i) {
            out.vertices[i] = t.vertices[order[i]];
            if (t.side)
                (*out.side)[i] = (*t.side)[order[i]];
        }
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j)
                out.adj[i][j] = t.adj[order[i]][order[j]];
        return out;
    }

    Permutation random_permutation(const std::vector<char> & domain, Rng & rng)
    {
        std::vector<int> members;
        for (std::size_t v = 0; v < domain.size(); ++v)
            if (domain[v])
                members.push_back(static_cast<int>(v));
        std::vector<int> images = members;
        rng.shuffle(images);

        Permutation p;
        p.image.assign(domain.size(), -1);
        for (std::size_t k = 0; k < members.size(); ++k)
            p.image[members[k]] = images[k];
        return p;
    }

    Instance random_instance(const TargetGraph & target, Mode mode,
        const GenOptions & opt, Rng & rng)
    {
        Instance inst;
        inst.target = target;
        inst.mode = mode;
        for (int i = 0; i < opt.g_count; ++i)
            inst.g_vertices.push_back("g" + std::to_string(i));
        inst.lists.assign(opt.g_count, std::nullopt);

        std::vector<int> blacks, whites;
        if (mode == Mode::BySide) {
            std::vector<Side> side(opt.g_count, Side::Black);
            for (int i = 0; i < opt.g_count; ++i)
                side[i] = rng.coin() ? Side::Black : Side::White;
            if (opt.g_count >= 2) {
                // edges need both classes present
                side[0] = Side::Black;
                side[1] = Side::White;
            }
            inst.g_side = side;
            for (int i = 0; i < opt.g_count; ++i)
                (side[i] == Side::Black ? blacks : whites).push_back(i);
        }

        int edges = opt.g_count == 0 ? 0 : opt.edge_count;
        if (mode == Mode::BySide && (blacks.empty() || whites.empty()))
            edges = 0;
        for (int e = 0; e < edges; ++e) {
            GEdge ge;
            if (mode == Mode::BySide) {
                ge.u = blacks[rng.below(static_cast<int>(blacks.size()))];
                ge.v = whites[rng.below(static_cast<int>(whites.size()))];
                if (rng.coin())
                    std::swap(ge.u, ge.v);
            }
            else {
                ge.u = rng.below(opt.g_count);
                ge.v = rng.below(opt.g_count);
                if (ge.u == ge.v && ! opt.allow_loops) {
                    if (opt.g_count < 2)
                        continue;
                    ge.v = (ge.u + 1 + rng.below(opt.g_count - 1)) % opt.g_count;
                }
            }
            ge.pi = random_permutation(inst.label_domain(ge.u), rng);
            ge.rho = random_permutation(inst.label_domain(ge.v), rng);
            inst.edges.push_back(std::move(ge));
        }

        if (opt.with_lists) {
            for (int x = 0; x < opt.g_count; ++x) {
                if (! rng.coin())
                    continue;
                std::vector<char> universe = inst.label_domain(x);
                std::vector<char> members(target.size(), 0);
                for (int h = 0; h < target.size(); ++h)
                    if (universe[h] && rng.chance(2, 3))
                        members[h] = 1;
                inst.lists[x] = std::move(members);
            }
        }

        validate_instance(inst);
        return inst;
    }

    TargetGraph make_family_target(const std::string & family, int size_a, int size_b, Rng & rng)
    {
        TargetGraph t;
        if (family == "reflexive-clique")
            t = make_reflexive_clique(std::max(1, size_a));
        else if (family == "reflexive-co-clique")
            t = make_reflexive_coclique(std::max(1, size_a));
        else if (family == "reflexive-2k2")
            t = make_reflexive_2k2();
        else if (family == "irreflexive-matching")
            t = make_irreflexive_matching(std::max(0, size_a), std::max(0, size_b), false);
        else if (family == "irreflexive-matching-by-side")
            t = make_irreflexive_matching(std::max(0, size_a), std::max(0, size_b), true);
        else if (family == "irreflexive-k22")
            t = make_irreflexive_k22();
        else if (family == "looped-star")
            t = make_looped_star(std::max(1, size_a));
        else if (family == "matching-plus-reflexive")
            t = make_matching_plus_reflexive(std::max(1, size_a), std::max(1, size_b));
        else if (family == "complete-bipartite")
            t = make_complete_bipartite(std::max(1, size_a), std::max(1, size_b), 1, 0);
        else if (family == "double-star")
            t = make_double_star(std::max(1, size_a), std::max(1, size_b), 1, 0);
        else if (family == "two-k12")
            t = make_two_k12(std::max(0, size_a), true);
        else if (family == "two-k22")
            t = make_two_k22();
        else if (family == "reflexive-path3")
            t = make_reflexive_path3();
        else if (family == "k1-union-k3")
            t = make_k1_union_k3();
        else
            throw ValidationError("unknown target family '" + family + "'");
        return shuffled_target(t, rng);
    }
}
