#include <corrhom/two_sat.hh>

#include <algorithm>

namespace corrhom
{
    namespace
    {
        int negation(int lit)
        {
            return lit ^ 1;
        }

        // iterative Tarjan; components are numbered in completion order,
        // so an implication a -> b across components has comp[b] < comp[a]
        struct Tarjan
        {
            const std::vector<std::vector<int>> & graph;
            std::vector<int> index, low, comp;
            std::vector<char> on_stack;
            std::vector<int> stack;
            int next_index = 0, next_comp = 0;

            explicit Tarjan(const std::vector<std::vector<int>> & g) :
                graph(g), index(g.size(), -1), low(g.size(), 0),
                comp(g.size(), -1), on_stack(g.size(), 0)
            {
                for (int v = 0; v < static_cast<int>(g.size()); ++v)
                    if (index[v] < 0)
                        run(v);
            }

            void run(int root)
            {
                // explicit stack of (vertex, next edge position)
                std::vector<std::pair<int, std::size_t>> work;
                work.emplace_back(root, 0);
                while (! work.empty()) {
                    auto & [v, ei] = work.back();
                    if (ei == 0) {
                        index[v] = low[v] = next_index++;
                        stack.push_back(v);
                        on_stack[v] = 1;
                    }
                    bool descended = false;
                    while (ei < graph[v].size()) {
                        int w = graph[v][ei++];
                        if (index[w] < 0) {
                            work.emplace_back(w, 0);
                            descended = true;
                            break;
                        }
                        if (on_stack[w])
                            low[v] = std::min(low[v], index[w]);
                    }
                    if (descended)
                        continue;
                    if (low[v] == index[v]) {
                        while (true) {
                            int w = stack.back();
                            stack.pop_back();
                            on_stack[w] = 0;
                            comp[w] = next_comp;
                            if (w == v)
                                break;
                        }
                        ++next_comp;
                    }
                    int finished = v;
                    work.pop_back();
                    if (! work.empty())
                        low[work.back().first] = std::min(low[work.back().first], low[finished]);
                }
            }
        };
    }

    TwoSat::TwoSat(int num_vars) :
        num_vars_(num_vars), implications_(2 * num_vars)
    {
    }

    void TwoSat::add_clause(int lit_a, int lit_b)
    {
        implications_[negation(lit_a)].push_back(lit_b);
        if (lit_a != lit_b)
            implications_[negation(lit_b)].push_back(lit_a);
    }

    std::optional<std::vector<char>> TwoSat::solve() const
    {
        Tarjan t(implications_);
        std::vector<char> value(num_vars_, 0);
        for (int v = 0; v < num_vars_; ++v) {
            if (t.comp[pos(v)] == t.comp[neg(v)])
                return std::nullopt;
            // the component closer to the sinks is safe to make true
            value[v] = t.comp[pos(v)] < t.comp[neg(v)] ? 1 : 0;
        }
        return value;
    }
}
