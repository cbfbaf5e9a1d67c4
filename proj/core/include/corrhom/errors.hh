#ifndef CORRHOM_ERRORS_HH
#define CORRHOM_ERRORS_HH

#include <stdexcept>
#include <string>

namespace corrhom
{
    // Malformed input text (bad JSON, missing fields, wrong types).
    struct ParseError : std::runtime_error
    {
        explicit ParseError(const std::string & what) : std::runtime_error(what) {}
    };

    // Well-formed input violating a structural invariant; the message
    // names the offending element.
    struct ValidationError : std::runtime_error
    {
        explicit ValidationError(const std::string & what) : std::runtime_error(what) {}
    };

    // Permutations combined over different domains.
    struct DomainMismatch : std::runtime_error
    {
        explicit DomainMismatch(const std::string & what) : std::runtime_error(what) {}
    };

    // An engine or transform applied to a target it does not handle.
    struct ShapeMismatch : std::runtime_error
    {
        explicit ShapeMismatch(const std::string & what) : std::runtime_error(what) {}
    };

    // A transform given an instance whose target is not the expected graph.
    struct TargetMismatch : std::runtime_error
    {
        explicit TargetMismatch(const std::string & what) : std::runtime_error(what) {}
    };

    // A list that cannot be expressed by linear equations over GF(2);
    // the caller must fall back to the exact solver.
    struct NonAffineList : std::runtime_error
    {
        explicit NonAffineList(const std::string & what) : std::runtime_error(what) {}
    };

    // Random resampling hit its retry bound without a verified result.
    struct RetriesExhausted : std::runtime_error
    {
        explicit RetriesExhausted(const std::string & what) : std::runtime_error(what) {}
    };

    // An operation whose precondition excludes this input entirely.
    struct NotApplicable : std::runtime_error
    {
        explicit NotApplicable(const std::string & what) : std::runtime_error(what) {}
    };

    // A broken internal invariant; never expected on valid inputs.
    struct InternalError : std::logic_error
    {
        explicit InternalError(const std::string & what) : std::logic_error(what) {}
    };
}

#endif
