#include <corrhom/oracle.hh>
#include <corrhom/errors.hh>

#include <chrono>
#include <vector>

namespace corrhom
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct Searcher
        {
            const Instance & inst;
            AuxiliaryGraph aux;
            int n;

            // adjacency of G as (edge index, oriented other endpoint)
            std::vector<std::vector<std::pair<int, int>>> incident;
            std::vector<std::vector<char>> domain;
            Assignment assigned;

            std::int64_t nodes = 0;
            std::int64_t max_nodes;
            Clock::time_point deadline;
            bool use_deadline;
            bool exceeded = false;

            std::int64_t found = 0;
            std::int64_t cap;
            std::optional<Assignment> first_witness;

            Searcher(const Instance & i, std::int64_t max_nodes_, std::int64_t max_millis,
                    std::int64_t cap_) :
                inst(i), aux(build_auxiliary(i)), n(i.target.size()),
                incident(i.g_size()), max_nodes(max_nodes_), cap(cap_)
            {
                use_deadline = max_millis > 0;
                if (use_deadline)
                    deadline = Clock::now() + std::chrono::milliseconds(max_millis);

                for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
                    const GEdge & ed = inst.edges[e];
                    if (ed.u != ed.v) {
                        incident[ed.u].emplace_back(e, ed.v);
                        incident[ed.v].emplace_back(e, ed.u);
                    }
                }

                assigned.assign(inst.g_size(), -1);
                domain.resize(inst.g_size());
                for (int x = 0; x < inst.g_size(); ++x)
                    domain[x] = inst.base_domain(x);

                // loops constrain a single vertex; fold them into the domains
                for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
                    const GEdge & ed = inst.edges[e];
                    if (ed.u == ed.v)
                        for (int h = 0; h < n; ++h)
                            if (domain[ed.u][h] && ! aux.allowed(e, h, h))
                                domain[ed.u][h] = 0;
                }
            }

            bool cross_ok(int e, int x_is_u, int hx, int hy) const
            {
                return x_is_u ? aux.allowed(e, hx, hy) : aux.allowed(e, hy, hx);
            }

            // returns false when limits are hit
            bool search(int x)
            {
                if (x == inst.g_size()) {
                    if (found == 0)
                        first_witness = assigned;
                    ++found;
                    return true;
                }
                for (int h = 0; h < n; ++h) {
                    if (! domain[x][h])
                        continue;
                    if (++nodes > max_nodes && max_nodes > 0) {
                        exceeded = true;
                        return false;
                    }
                    if (use_deadline && (nodes & 0xff) == 0 && Clock::now() > deadline) {
                        exceeded = true;
                        return false;
                    }

                    assigned[x] = h;
                    std::vector<std::pair<int, int>> pruned;
                    bool dead = false;
                    for (const auto & [e, y] : incident[x]) {
                        if (assigned[y] >= 0) {
                            if (! cross_ok(e, inst.edges[e].u == x, h, assigned[y])) {
                                dead = true;
                                break;
                            }
                            continue;
                        }
                        bool any = false;
                        for (int w = 0; w < n; ++w) {
                            if (! domain[y][w])
                                continue;
                            if (cross_ok(e, inst.edges[e].u == x, h, w)) {
                                any = true;
                            }
                            else {
                                domain[y][w] = 0;
                                pruned.emplace_back(y, w);
                            }
                        }
                        if (! any) {
                            dead = true;
                            break;
                        }
                    }

                    if (! dead) {
                        if (! search(x + 1)) {
                            for (const auto & [y, w] : pruned)
                                domain[y][w] = 1;
                            assigned[x] = -1;
                            return false;
                        }
                        if (cap > 0 && found >= cap) {
                            for (const auto & [y, w] : pruned)
                                domain[y][w] = 1;
                            assigned[x] = -1;
                            return true;
                        }
                    }
                    for (const auto & [y, w] : pruned)
                        domain[y][w] = 1;
                    assigned[x] = -1;
                }
                return true;
            }
        };
    }

    Verdict solve_exact(const Instance & inst, const SearchLimits & limits)
    {
        Searcher s(inst, limits.max_nodes, limits.max_millis, 1);
        s.search(0);
        if (s.found > 0) {
            Verdict v{Answer::Yes, s.first_witness};
            if (! check_assignment(inst, *v.witness).ok)
                throw InternalError("exact solver produced an invalid witness");
            return v;
        }
        if (s.exceeded)
            return {Answer::ResourceExceeded, std::nullopt};
        return {Answer::No, std::nullopt};
    }

    std::int64_t count_solutions(const Instance & inst, std::int64_t cap)
    {
        Searcher s(inst, 0, 0, cap);
        s.search(0);
        return s.found;
    }
}
