#ifndef CORRHOM_ORACLE_HH
#define CORRHOM_ORACLE_HH

#include <corrhom/model.hh>

#include <cstdint>
#include <optional>

namespace corrhom
{
    struct SearchLimits
    {
        std::int64_t max_nodes = 10'000'000;
        std::int64_t max_millis = 10'000;
    };

    enum class Answer { Yes, No, ResourceExceeded };

    struct Verdict
    {
        Answer answer = Answer::No;
        std::optional<Assignment> witness;   // present iff answer == Yes
    };

    // Exact backtracking search over the input order of G-vertices with
    // input-order value choice, forward checking through the auxiliary
    // graph's cross-edge relation. Deterministic; every yes carries a
    // witness that passes check_assignment, and no is returned only after
    // the search space is exhausted.
    Verdict solve_exact(const Instance & inst, const SearchLimits & limits = {});

    // Number of accepted assignments, saturating at cap.
    std::int64_t count_solutions(const Instance & inst, std::int64_t cap);
}

#endif
