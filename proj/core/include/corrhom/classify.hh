#ifndef CORRHOM_CLASSIFY_HH
#define CORRHOM_CLASSIFY_HH

#include <corrhom/model.hh>

#include <string>
#include <vector>

namespace corrhom
{
    enum class ShapeTag
    {
        ReflexiveClique,
        ReflexiveCoClique,
        Reflexive2K2,
        IrreflexiveMatchingPlusIsolated,
        IrreflexiveK22,
        LoopedCenterStar,
        MatchingPlusReflexiveIsolated,
        CompleteBipartitePlusIsolated,
        DoubleStarPlusIsolated,
        TwoK12WhiteLeavesPlusBlackIsolated,
        TwoK22,
        General
    };

    std::string shape_name(ShapeTag tag);

    struct ShapeCase
    {
        ShapeTag tag = ShapeTag::General;
        int p = 0;                   // number of matching edges, where meaningful
        int q = 0;                   // number of isolated / reflexive-isolated vertices
        std::vector<int> centers;    // star / double-star / K12 centers

        bool operator==(const ShapeCase &) const = default;
    };

    enum class Variant { Standard, List, BySide, BySideList };

    std::string variant_name(Variant v);

    // The variant an instance effectively poses: lists count only when
    // some list properly restricts its vertex.
    Variant effective_variant(const Instance & inst);

    struct Classification
    {
        Variant variant = Variant::Standard;
        ShapeCase shape;
        bool polynomial = false;
        std::string engine;   // when polynomial: oracle|xor|two-sat|propagate|unary|double-k12
        std::string reason;   // when NP-complete: the establishing reduction
    };

    // H minus all isolated loopless vertices. Applicable only when H has
    // a loop; throws NotApplicable otherwise (for irreflexive targets the
    // isolated vertices are part of the shape).
    TargetGraph strip_isolated_loopless(const TargetGraph & h);

    // The unique structural family of H, or General. With by_side true the
    // bipartite families (4, 8-11) are recognised instead of the standard
    // ones; the target must then carry sides.
    ShapeCase detect_shape(const TargetGraph & h, bool by_side = false);

    // Complexity of the correspondence homomorphism problem for target H
    // under the given variant, with the designated polynomial engine or the
    // reduction establishing NP-completeness. Targets with loops have their
    // isolated loopless vertices stripped before shape detection.
    Classification classify(const TargetGraph & h, Variant variant);
}

#endif
