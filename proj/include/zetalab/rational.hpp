#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace zetalab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned e)
{
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// q^e for integer e of either sign.
inline Rat rat_pow(const Int& q, long e)
{
    if (e >= 0) return Rat(int_pow(q, static_cast<unsigned>(e)));
    return Rat(1, int_pow(q, static_cast<unsigned>(-e)));
}

inline std::string to_string(const Rat& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rat& r)
{
    return r.convert_to<double>();
}

} // namespace zetalab
