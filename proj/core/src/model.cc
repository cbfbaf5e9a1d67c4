#include <corrhom/model.hh>
#include <corrhom/errors.hh>

#include <algorithm>
#include <set>

namespace corrhom
{
    Side opposite(Side s)
    {
        return s == Side::Black ? Side::White : Side::Black;
    }

    std::string side_name(Side s)
    {
        return s == Side::Black ? "black" : "white";
    }

    int TargetGraph::degree(int v) const
    {
        int d = 0;
        for (int w = 0; w < size(); ++w)
            if (w != v && adj[v][w])
                ++d;
        return d;
    }

    bool TargetGraph::is_reflexive() const
    {
        for (int v = 0; v < size(); ++v)
            if (! has_loop(v))
                return false;
        return true;
    }

    bool TargetGraph::is_irreflexive() const
    {
        for (int v = 0; v < size(); ++v)
            if (has_loop(v))
                return false;
        return true;
    }

    bool TargetGraph::has_loop() const
    {
        return ! is_irreflexive();
    }

    int TargetGraph::index_of(const std::string & id) const
    {
        for (int v = 0; v < size(); ++v)
            if (vertices[v] == id)
                return v;
        return -1;
    }

    TargetGraph make_target(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>> & edges,
        std::optional<std::vector<Side>> side)
    {
        TargetGraph t;
        t.vertices = std::move(vertices);
        std::set<std::string> seen;
        for (const auto & id : t.vertices)
            if (! seen.insert(id).second)
                throw ValidationError("duplicate target vertex id '" + id + "'");

        int n = t.size();
        t.adj.assign(n, std::vector<char>(n, 0));
        for (const auto & [a, b] : edges) {
            int i = t.index_of(a), j = t.index_of(b);
            if (i < 0)
                throw ValidationError("edge endpoint '" + a + "' is not a target vertex");
            if (j < 0)
                throw ValidationError("edge endpoint '" + b + "' is not a target vertex");
            t.adj[i][j] = t.adj[j][i] = 1;
        }

        if (side) {
            if (static_cast<int>(side->size()) != n)
                throw ValidationError("side mapping does not cover every target vertex");
            t.side = std::move(side);
            for (int v = 0; v < n; ++v) {
                if (t.has_loop(v))
                    throw ValidationError("looped vertex '" + t.vertices[v] + "' in a sided target");
                for (int w = v + 1; w < n; ++w)
                    if (t.adj[v][w] && (*t.side)[v] == (*t.side)[w])
                        throw ValidationError("edge " + t.vertices[v] + "-" + t.vertices[w] +
                            " joins two " + side_name((*t.side)[v]) + " vertices");
            }
        }
        return t;
    }

    Permutation Permutation::identity(int n)
    {
        Permutation p;
        p.image.resize(n);
        for (int v = 0; v < n; ++v)
            p.image[v] = v;
        return p;
    }

    Permutation Permutation::identity_on(const std::vector<char> & domain)
    {
        Permutation p;
        p.image.assign(domain.size(), -1);
        for (std::size_t v = 0; v < domain.size(); ++v)
            if (domain[v])
                p.image[v] = static_cast<int>(v);
        return p;
    }

    Permutation Permutation::cycle(int n, const std::vector<int> & verts)
    {
        Permutation p = identity(n);
        for (std::size_t k = 0; k < verts.size(); ++k)
            p.image[verts[k]] = verts[(k + 1) % verts.size()];
        return p;
    }

    int Permutation::apply(int v) const
    {
        if (! in_domain(v))
            throw DomainMismatch("permutation applied outside its domain (index " +
                std::to_string(v) + ")");
        return image[v];
    }

    Permutation Permutation::inverse() const
    {
        Permutation r;
        r.image.assign(image.size(), -1);
        for (std::size_t v = 0; v < image.size(); ++v)
            if (image[v] >= 0)
                r.image[image[v]] = static_cast<int>(v);
        return r;
    }

    bool Permutation::same_domain(const Permutation & other) const
    {
        if (image.size() != other.image.size())
            return false;
        for (std::size_t v = 0; v < image.size(); ++v)
            if ((image[v] < 0) != (other.image[v] < 0))
                return false;
        return true;
    }

    Permutation compose(const Permutation & p, const Permutation & q)
    {
        if (! p.same_domain(q))
            throw DomainMismatch("composing permutations over different domains");
        Permutation r;
        r.image.assign(q.image.size(), -1);
        for (int v = 0; v < q.size(); ++v)
            if (q.image[v] >= 0)
                r.image[v] = p.apply(q.image[v]);
        return r;
    }

    void validate_permutation(const Permutation & p, const std::vector<char> & domain,
        const std::string & what)
    {
        if (p.image.size() != domain.size())
            throw ValidationError(what + ": wrong universe size");
        std::vector<char> hit(domain.size(), 0);
        for (std::size_t v = 0; v < domain.size(); ++v) {
            if (domain[v]) {
                if (p.image[v] < 0)
                    throw ValidationError(what + ": no image for a domain vertex");
                int w = p.image[v];
                if (w >= static_cast<int>(domain.size()) || ! domain[w])
                    throw ValidationError(what + ": image leaves the domain");
                if (hit[w])
                    throw ValidationError(what + ": not a bijection (image repeated)");
                hit[w] = 1;
            }
            else if (p.image[v] >= 0) {
                throw ValidationError(what + ": image given outside the required domain");
            }
        }
    }

    bool Instance::has_lists() const
    {
        for (const auto & l : lists)
            if (l)
                return true;
        return false;
    }

    bool Instance::has_proper_lists() const
    {
        for (int x = 0; x < g_size(); ++x) {
            if (! lists[x])
                continue;
            std::vector<char> universe = mode == Mode::BySide
                ? label_domain(x) : std::vector<char>(target.size(), 1);
            for (int h = 0; h < target.size(); ++h)
                if (universe[h] && ! (*lists[x])[h])
                    return true;
        }
        return false;
    }

    int Instance::g_index_of(const std::string & id) const
    {
        for (int x = 0; x < g_size(); ++x)
            if (g_vertices[x] == id)
                return x;
        return -1;
    }

    std::vector<char> Instance::base_domain(int x) const
    {
        std::vector<char> dom = label_domain(x);
        if (lists[x])
            for (int h = 0; h < target.size(); ++h)
                if (! (*lists[x])[h])
                    dom[h] = 0;
        return dom;
    }

    std::vector<char> Instance::label_domain(int x) const
    {
        std::vector<char> dom(target.size(), 1);
        if (mode == Mode::BySide) {
            Side s = (*g_side)[x];
            for (int h = 0; h < target.size(); ++h)
                dom[h] = (*target.side)[h] == s ? 1 : 0;
        }
        return dom;
    }

    void validate_instance(const Instance & inst)
    {
        std::set<std::string> seen;
        for (const auto & id : inst.g_vertices)
            if (! seen.insert(id).second)
                throw ValidationError("duplicate input vertex id '" + id + "'");

        if (inst.mode == Mode::BySide) {
            if (! inst.target.side)
                throw ValidationError("by-side instance over a target without sides");
            if (! inst.g_side || static_cast<int>(inst.g_side->size()) != inst.g_size())
                throw ValidationError("by-side instance without a complete gSide mapping");
        }

        if (static_cast<int>(inst.lists.size()) != inst.g_size())
            throw ValidationError("lists vector does not match the vertex count");

        for (int x = 0; x < inst.g_size(); ++x) {
            if (! inst.lists[x])
                continue;
            if (static_cast<int>(inst.lists[x]->size()) != inst.target.size())
                throw ValidationError("list at '" + inst.g_vertices[x] + "' has the wrong universe");
            if (inst.mode == Mode::BySide) {
                for (int h = 0; h < inst.target.size(); ++h)
                    if ((*inst.lists[x])[h] && (*inst.target.side)[h] != (*inst.g_side)[x])
                        throw ValidationError("list at '" + inst.g_vertices[x] +
                            "' contains off-side vertex '" + inst.target.vertices[h] + "'");
            }
        }

        int e_idx = 0;
        for (const auto & e : inst.edges) {
            std::string what = "edge #" + std::to_string(e_idx++);
            if (e.u < 0 || e.u >= inst.g_size() || e.v < 0 || e.v >= inst.g_size())
                throw ValidationError(what + ": endpoint is not an input vertex");
            if (inst.mode == Mode::BySide && (*inst.g_side)[e.u] == (*inst.g_side)[e.v])
                throw ValidationError(what + ": joins two " +
                    side_name((*inst.g_side)[e.u]) + " vertices");
            validate_permutation(e.pi, inst.label_domain(e.u), what + " pi");
            validate_permutation(e.rho, inst.label_domain(e.v), what + " rho");
        }
    }

    CheckResult check_assignment(const Instance & inst, const Assignment & f)
    {
        for (int x = 0; x < inst.g_size(); ++x) {
            int h = f[x];
            if (h < 0 || h >= inst.target.size())
                return {false, -1, x};
            if (inst.mode == Mode::BySide && (*inst.target.side)[h] != (*inst.g_side)[x])
                return {false, -1, x};
            if (inst.lists[x] && ! (*inst.lists[x])[h])
                return {false, -1, x};
        }
        for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
            const GEdge & ed = inst.edges[e];
            if (! inst.target.adjacent(ed.pi.apply(f[ed.u]), ed.rho.apply(f[ed.v])))
                return {false, e, -1};
        }
        return {};
    }

    AuxiliaryGraph build_auxiliary(const Instance & inst)
    {
        AuxiliaryGraph aux;
        aux.n = inst.target.size();
        aux.cross.reserve(inst.edges.size());
        for (const auto & e : inst.edges) {
            std::vector<char> m(aux.n * aux.n, 0);
            for (int u = 0; u < aux.n; ++u) {
                if (! e.pi.in_domain(u))
                    continue;
                for (int w = 0; w < aux.n; ++w)
                    if (e.rho.in_domain(w) &&
                            inst.target.adjacent(e.pi.image[u], e.rho.image[w]))
                        m[u * aux.n + w] = 1;
            }
            aux.cross.push_back(std::move(m));
        }
        return aux;
    }
}
