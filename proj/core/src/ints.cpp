#include "sl2a/ints.hpp"

#include "sl2a/errors.hpp"

namespace sl2a {

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

bool is_prime_integer(const Int& n_in) {
    Int n = n_in < 0 ? Int(-n_in) : n_in;
    if (n >= (Int(1) << 64)) throw Unsupported("primality test limited to 64-bit integers");
    if (n < 2) return false;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace sl2a
