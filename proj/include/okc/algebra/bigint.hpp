#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace okc {

/// Arbitrary-precision signed integer. Small values are stored inline.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

/// Non-negative gcd; gcd(0, 0) = 0.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Floor division (rounds toward negative infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace okc
