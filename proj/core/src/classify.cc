#include <corrhom/classify.hh>
#include <corrhom/errors.hh>

#include <algorithm>
#include <numeric>

namespace corrhom
{
    std::string shape_name(ShapeTag tag)
    {
        switch (tag) {
        case ShapeTag::ReflexiveClique:                     return "reflexive-clique";
        case ShapeTag::ReflexiveCoClique:                   return "reflexive-co-clique";
        case ShapeTag::Reflexive2K2:                        return "reflexive-2k2";
        case ShapeTag::IrreflexiveMatchingPlusIsolated:     return "irreflexive-matching-plus-isolated";
        case ShapeTag::IrreflexiveK22:                      return "irreflexive-k22";
        case ShapeTag::LoopedCenterStar:                    return "looped-center-star";
        case ShapeTag::MatchingPlusReflexiveIsolated:       return "matching-plus-reflexive-isolated";
        case ShapeTag::CompleteBipartitePlusIsolated:       return "complete-bipartite-plus-isolated";
        case ShapeTag::DoubleStarPlusIsolated:              return "double-star-plus-isolated";
        case ShapeTag::TwoK12WhiteLeavesPlusBlackIsolated:  return "two-k12-plus-center-side-isolated";
        case ShapeTag::TwoK22:                              return "two-k22";
        case ShapeTag::General:                             return "general";
        }
        return "general";
    }

    std::string variant_name(Variant v)
    {
        switch (v) {
        case Variant::Standard:   return "standard";
        case Variant::List:       return "list";
        case Variant::BySide:     return "by-side";
        case Variant::BySideList: return "by-side-list";
        }
        return "standard";
    }

    Variant effective_variant(const Instance & inst)
    {
        bool lists = inst.has_proper_lists();
        if (inst.mode == Mode::BySide)
            return lists ? Variant::BySideList : Variant::BySide;
        return lists ? Variant::List : Variant::Standard;
    }

    TargetGraph strip_isolated_loopless(const TargetGraph & h)
    {
        if (! h.has_loop())
            throw NotApplicable("stripping applies only to targets with at least one loop");
        std::vector<int> keep;
        for (int v = 0; v < h.size(); ++v)
            if (h.has_loop(v) || h.degree(v) > 0)
                keep.push_back(v);

        TargetGraph r;
        for (int v : keep)
            r.vertices.push_back(h.vertices[v]);
        int m = static_cast<int>(keep.size());
        r.adj.assign(m, std::vector<char>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                r.adj[i][j] = h.adj[keep[i]][keep[j]];
        return r;
    }

    namespace
    {
        bool is_complete_reflexive(const TargetGraph & h)
        {
            for (int u = 0; u < h.size(); ++u)
                for (int v = u; v < h.size(); ++v)
                    if (! h.adjacent(u, v))
                        return false;
            return true;
        }

        bool edgeless_apart_from_loops(const TargetGraph & h)
        {
            for (int u = 0; u < h.size(); ++u)
                for (int v = u + 1; v < h.size(); ++v)
                    if (h.adjacent(u, v))
                        return false;
            return true;
        }

        std::vector<int> component_of(const TargetGraph & h)
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

        bool all_degrees_at_most_one(const TargetGraph & h, int & p, int & q)
        {
            p = q = 0;
            for (int v = 0; v < h.size(); ++v) {
                int d = h.degree(v);
                if (d > 1)
                    return false;
                if (d == 0)
                    ++q;
            }
            p = (h.size() - q) / 2;
            return true;
        }

        bool is_irreflexive_k22(const TargetGraph & h)
        {
            if (h.size() != 4 || ! h.is_irreflexive())
                return false;
            for (int v = 0; v < 4; ++v)
                if (h.degree(v) != 2)
                    return false;
            // degree-2 on 4 vertices is either a 4-cycle (bipartite, = K2,2)
            // or a triangle plus something, excluded by the degrees; rule out
            // the non-bipartite case by finding the non-neighbour pairing
            for (int v = 1; v < 4; ++v)
                if (! h.adjacent(0, v)) {
                    for (int w = 1; w < 4; ++w)
                        if (w != v && h.adjacent(v, w) != h.adjacent(0, w))
                            return false;
                    return true;
                }
            return false;
        }

        bool is_looped_center_star(const TargetGraph & h, int & center)
        {
            if (h.size() < 2)
                return false;
            center = -1;
            for (int v = 0; v < h.size(); ++v) {
                if (h.has_loop(v)) {
                    if (center >= 0)
                        return false;
                    center = v;
                }
            }
            if (center < 0)
                return false;
            for (int v = 0; v < h.size(); ++v) {
                if (v == center)
                    continue;
                if (h.degree(v) != 1 || ! h.adjacent(v, center))
                    return false;
            }
            return true;
        }

        bool is_matching_plus_reflexive_isolated(const TargetGraph & h, int & p, int & q)
        {
            p = q = 0;
            for (int v = 0; v < h.size(); ++v) {
                if (h.has_loop(v)) {
                    if (h.degree(v) != 0)
                        return false;
                    ++q;
                }
                else {
                    if (h.degree(v) != 1)
                        return false;
                }
            }
            p = (h.size() - q) / 2;
            return p >= 1 && q >= 1;
        }

        ShapeCase detect_standard(const TargetGraph & h)
        {
            ShapeCase s;
            if (h.is_reflexive() && is_complete_reflexive(h)) {
                s.tag = ShapeTag::ReflexiveClique;
                return s;
            }
            if (h.is_reflexive() && edgeless_apart_from_loops(h)) {
                s.tag = ShapeTag::ReflexiveCoClique;
                return s;
            }
            if (h.size() == 4 && h.is_reflexive()) {
                bool matching = true;
                for (int v = 0; v < 4; ++v)
                    if (h.degree(v) != 1)
                        matching = false;
                if (matching) {
                    s.tag = ShapeTag::Reflexive2K2;
                    return s;
                }
            }
            if (h.is_irreflexive() && all_degrees_at_most_one(h, s.p, s.q)) {
                s.tag = ShapeTag::IrreflexiveMatchingPlusIsolated;
                return s;
            }
            if (is_irreflexive_k22(h)) {
                s = ShapeCase{};
                s.tag = ShapeTag::IrreflexiveK22;
                return s;
            }
            int center = -1;
            if (is_looped_center_star(h, center)) {
                s = ShapeCase{};
                s.tag = ShapeTag::LoopedCenterStar;
                s.centers = {center};
                return s;
            }
            if (is_matching_plus_reflexive_isolated(h, s.p, s.q)) {
                s.tag = ShapeTag::MatchingPlusReflexiveIsolated;
                return s;
            }
            return ShapeCase{};
        }

        bool is_complete_bipartite_plus_isolated(const TargetGraph & h)
        {
            for (int u = 0; u < h.size(); ++u) {
                if (h.degree(u) == 0)
                    continue;
                for (int v = 0; v < h.size(); ++v)
                    if (h.degree(v) > 0 && (*h.side)[u] != (*h.side)[v] && ! h.adjacent(u, v))
                        return false;
            }
            return true;
        }

        bool is_double_star_plus_isolated(const TargetGraph & h, std::vector<int> & centers)
        {
            centers.clear();
            for (int v = 0; v < h.size(); ++v)
                if (h.degree(v) >= 2)
                    centers.push_back(v);
            if (centers.size() != 2 || ! h.adjacent(centers[0], centers[1]))
                return false;
            for (int v = 0; v < h.size(); ++v) {
                if (v == centers[0] || v == centers[1] || h.degree(v) == 0)
                    continue;
                if (! h.adjacent(v, centers[0]) && ! h.adjacent(v, centers[1]))
                    return false;
            }
            return true;
        }

        bool is_two_k12_oriented(const TargetGraph & h, Side leaf_side, std::vector<int> & centers)
        {
            centers.clear();
            int leaves = 0;
            for (int v = 0; v < h.size(); ++v) {
                if ((*h.side)[v] == leaf_side) {
                    if (h.degree(v) != 1)
                        return false;
                    ++leaves;
                }
                else if (h.degree(v) == 2) {
                    centers.push_back(v);
                }
                else if (h.degree(v) != 0) {
                    return false;
                }
            }
            return leaves == 4 && centers.size() == 2;
        }

        bool is_two_k22(const TargetGraph & h)
        {
            if (h.size() != 8)
                return false;
            for (int v = 0; v < h.size(); ++v)
                if (h.degree(v) != 2)
                    return false;
            std::vector<int> comp = component_of(h);
            int nc = *std::max_element(comp.begin(), comp.end()) + 1;
            if (nc != 2)
                return false;
            for (int c = 0; c < 2; ++c) {
                int black = 0, white = 0;
                for (int v = 0; v < h.size(); ++v)
                    if (comp[v] == c)
                        ((*h.side)[v] == Side::Black ? black : white) += 1;
                if (black != 2 || white != 2)
                    return false;
            }
            return true;
        }

        ShapeCase detect_by_side(const TargetGraph & h)
        {
            ShapeCase s;
            if (all_degrees_at_most_one(h, s.p, s.q)) {
                s.tag = ShapeTag::IrreflexiveMatchingPlusIsolated;
                return s;
            }
            s = ShapeCase{};
            if (is_complete_bipartite_plus_isolated(h)) {
                s.tag = ShapeTag::CompleteBipartitePlusIsolated;
                return s;
            }
            if (is_double_star_plus_isolated(h, s.centers)) {
                s.tag = ShapeTag::DoubleStarPlusIsolated;
                return s;
            }
            if (is_two_k12_oriented(h, Side::White, s.centers) ||
                    is_two_k12_oriented(h, Side::Black, s.centers)) {
                s.tag = ShapeTag::TwoK12WhiteLeavesPlusBlackIsolated;
                return s;
            }
            if (is_two_k22(h)) {
                s = ShapeCase{};
                s.tag = ShapeTag::TwoK22;
                return s;
            }
            return ShapeCase{};
        }

        bool components_all_cliques(const TargetGraph & h, std::vector<int> & sizes)
        {
            std::vector<int> comp = component_of(h);
            int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
            sizes.assign(nc, 0);
            for (int v = 0; v < h.size(); ++v)
                ++sizes[comp[v]];
            for (int u = 0; u < h.size(); ++u)
                for (int v = u + 1; v < h.size(); ++v)
                    if (comp[u] == comp[v] && ! h.adjacent(u, v))
                        return false;
            std::sort(sizes.begin(), sizes.end());
            return true;
        }

        bool is_reflexive_p3(const TargetGraph & h)
        {
            if (h.size() != 3 || ! h.is_reflexive())
                return false;
            int deg2 = 0, deg1 = 0;
            for (int v = 0; v < 3; ++v) {
                if (h.degree(v) == 2)
                    ++deg2;
                if (h.degree(v) == 1)
                    ++deg1;
            }
            return deg2 == 1 && deg1 == 2;
        }

        std::string np_reason(const TargetGraph & stripped, const ShapeCase & shape, Variant variant)
        {
            bool list_variant = variant == Variant::List || variant == Variant::BySideList;
            if (list_variant &&
                    (shape.tag == ShapeTag::Reflexive2K2 || shape.tag == ShapeTag::IrreflexiveK22 ||
                     shape.tag == ShapeTag::TwoK22 ||
                     shape.tag == ShapeTag::TwoK12WhiteLeavesPlusBlackIsolated))
                return "lists restrict the target and embed a hard sub-target problem";

            if (variant == Variant::BySide || variant == Variant::BySideList)
                return "induced-path and degree analysis reduces a hard standard problem to this target";

            if (stripped.is_reflexive()) {
                std::vector<int> sizes;
                if (components_all_cliques(stripped, sizes)) {
                    if (sizes == std::vector<int>{1, 2})
                        return "reduction from positive 1-in-3-SAT";
                    return "restriction loops delete clique vertices pairwise down to a hard union";
                }
                if (is_reflexive_p3(stripped))
                    return "reduction from 3-colourability";
                return "restriction loops and squaring reduce a hard smaller target to this one";
            }
            if (stripped.is_irreflexive())
                return "squaring yields a hard reflexive target";
            return "the associated bipartite split yields a hard by-side problem";
        }

        // engine per polynomial (shape, variant) pair; empty = NP-complete
        std::string engine_for(ShapeTag tag, Variant variant)
        {
            switch (variant) {
            case Variant::Standard:
                switch (tag) {
                case ShapeTag::ReflexiveClique:                 return "unary";
                case ShapeTag::ReflexiveCoClique:               return "propagate";
                case ShapeTag::Reflexive2K2:                    return "xor";
                case ShapeTag::IrreflexiveMatchingPlusIsolated: return "propagate";
                case ShapeTag::IrreflexiveK22:                  return "xor";
                case ShapeTag::LoopedCenterStar:                return "two-sat";
                case ShapeTag::MatchingPlusReflexiveIsolated:   return "propagate";
                default:                                        return "";
                }
            case Variant::List:
                switch (tag) {
                case ShapeTag::ReflexiveClique:                 return "unary";
                case ShapeTag::ReflexiveCoClique:               return "propagate";
                case ShapeTag::IrreflexiveMatchingPlusIsolated: return "propagate";
                case ShapeTag::LoopedCenterStar:                return "two-sat";
                case ShapeTag::MatchingPlusReflexiveIsolated:   return "propagate";
                default:                                        return "";
                }
            case Variant::BySide:
                switch (tag) {
                case ShapeTag::IrreflexiveMatchingPlusIsolated:     return "propagate";
                case ShapeTag::CompleteBipartitePlusIsolated:       return "unary";
                case ShapeTag::DoubleStarPlusIsolated:              return "two-sat";
                case ShapeTag::TwoK12WhiteLeavesPlusBlackIsolated:  return "double-k12";
                case ShapeTag::TwoK22:                              return "xor";
                default:                                            return "";
                }
            case Variant::BySideList:
                switch (tag) {
                case ShapeTag::IrreflexiveMatchingPlusIsolated: return "propagate";
                case ShapeTag::CompleteBipartitePlusIsolated:   return "unary";
                case ShapeTag::DoubleStarPlusIsolated:          return "two-sat";
                default:                                        return "";
                }
            }
            return "";
        }
    }

    ShapeCase detect_shape(const TargetGraph & h, bool by_side)
    {
        if (by_side) {
            if (! h.side)
                throw ValidationError("by-side shape detection requires a sided target");
            return detect_by_side(h);
        }
        return detect_standard(h);
    }

    Classification classify(const TargetGraph & h, Variant variant)
    {
        Classification c;
        c.variant = variant;

        bool by_side = variant == Variant::BySide || variant == Variant::BySideList;
        if (by_side && ! h.side)
            throw ValidationError("by-side classification requires a sided target");

        TargetGraph stripped = (! by_side && h.has_loop()) ? strip_isolated_loopless(h) : h;
        c.shape = detect_shape(stripped, by_side);

        c.engine = engine_for(c.shape.tag, variant);
        c.polynomial = ! c.engine.empty();
        if (! c.polynomial)
            c.reason = np_reason(stripped, c.shape, variant);
        return c;
    }
}
