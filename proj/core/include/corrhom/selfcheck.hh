#ifndef CORRHOM_SELFCHECK_HH
#define CORRHOM_SELFCHECK_HH

#include <corrhom/model.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace corrhom
{
    struct SuiteResult
    {
        std::string name;
        int trials = 0;
        int failures = 0;
        std::string first_failure;   // offending instance JSON, for replay
    };

    // Engine-versus-oracle agreement on random instances of one shape
    // family. Families: xor-2k2, xor-k22, xor-2k22, unary-clique,
    // unary-bipartite, propagate-coclique, propagate-matching,
    // propagate-matching-by-side, propagate-mixed, two-sat-star,
    // two-sat-double-star, double-k12.
    SuiteResult run_engine_suite(const std::string & family, int trials, int max_g,
        std::uint64_t seed);

    // Oracle-verdict preservation under a transform on random applicable
    // instances. Kinds: loops, parallel, square, three-path.
    SuiteResult run_transform_suite(const std::string & kind, int trials, std::uint64_t seed);

    std::vector<std::string> engine_suite_names();
    std::vector<std::string> transform_suite_names();

    // Every engine suite and every transform suite at the given scales.
    std::vector<SuiteResult> run_selfcheck(int trials, int max_g, std::uint64_t seed);
}

#endif
