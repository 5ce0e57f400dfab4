#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "prodmat/errors.hpp"

namespace prodmat {

// Exact scalars. BigInt is an arbitrary-precision integer; Rational is kept
// in lowest terms with a positive denominator (0 is 0/1).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& x) {
    return denominator(x) == 1;
}

// The integer value of x; throws NonIntegerEntry otherwise.
inline BigInt to_integer(const Rational& x) {
    if (!is_integer(x)) {
        throw NonIntegerEntry("not an integer: " + x.str());
    }
    return numerator(x);
}

inline BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    BigInt b = 1;
    for (std::size_t i = 0; i < k; ++i) {
        b = b * BigInt(n - i) / BigInt(i + 1);
    }
    return b;
}

// Prints p/q, or just p when q = 1.
inline std::string to_string(const Rational& x) {
    return x.str();
}

}  // namespace prodmat
