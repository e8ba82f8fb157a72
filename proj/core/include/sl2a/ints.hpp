#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace sl2a {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

// x*a + y*b == d with d == gcd(a, b) >= 0.
struct ExtGcd {
    Int d, x, y;
};

ExtGcd ext_gcd(Int a, Int b);

// Deterministic Miller-Rabin, valid for |n| < 2^64.  Larger inputs throw
// Unsupported.
bool is_prime_integer(const Int& n);

} // namespace sl2a
