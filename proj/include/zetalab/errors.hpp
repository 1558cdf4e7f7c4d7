#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

enum class errc {
    invalid_prime,
    too_large,
    spec_mismatch,
    division_by_zero,
    no_embedding,
    parse_error,
    invalid_curve,
    inconsistent_counts,
    counts_inconsistent,
    space_mismatch,
    not_in_space,
    unsupported_pole,
    need_more_counts,
    invalid_discriminant,
    invalid_argument,
    pole_error,
};

inline const char* errc_name(errc c)
{
    switch (c) {
    case errc::invalid_prime:        return "InvalidPrime";
    case errc::too_large:            return "TooLarge";
    case errc::spec_mismatch:        return "SpecMismatch";
    case errc::division_by_zero:     return "DivisionByZero";
    case errc::no_embedding:         return "NoEmbedding";
    case errc::parse_error:          return "ParseError";
    case errc::invalid_curve:        return "InvalidCurve";
    case errc::inconsistent_counts:  return "InconsistentCounts";
    case errc::counts_inconsistent:  return "CountsInconsistent";
    case errc::space_mismatch:       return "SpaceMismatch";
    case errc::not_in_space:         return "NotInSpace";
    case errc::unsupported_pole:     return "UnsupportedPole";
    case errc::need_more_counts:     return "NeedMoreCounts";
    case errc::invalid_discriminant: return "InvalidDiscriminant";
    case errc::invalid_argument:     return "InvalidArgument";
    case errc::pole_error:           return "PoleError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw error(code, what);
}

} // namespace zetalab
