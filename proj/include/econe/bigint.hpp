#pragma once
// Arbitrary-precision integers and rationals (Boost.Multiprecision) plus
// small conversion helpers. All counting beyond machine range goes through
// these types; the computational core never touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "econe/errors.hpp"

namespace econe {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, long long exp) {
    if (exp < 0) throw bad_argument("ipow: negative exponent");
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline bool fits_i64(const Int& v) {
    return v >= std::numeric_limits<long long>::min() &&
           v <= std::numeric_limits<long long>::max();
}

inline long long to_i64(const Int& v) {
    if (!fits_i64(v)) throw bad_argument("integer too large for 64-bit conversion: " + v.str());
    return static_cast<long long>(v);
}

}  // namespace econe
