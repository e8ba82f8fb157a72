#pragma once

#include "sl2a/elem.hpp"

namespace sl2a {

// Extended valuation value: nullopt encodes +infinity (valuation of 0).
using ValExt = std::optional<long long>;

inline bool val_ge(const ValExt& v, long long bound) {
    return !v.has_value() || *v >= bound;
}
inline ValExt val_add(const ValExt& a, const ValExt& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

// pi-adic valuation on Frac(R) for a prime element pi of the un-localized
// ring R.  v(r) = max{ n >= 0 : pi^n | r } on R, extended by
// v(x/y) = v(x) - v(y) and v(0) = +inf.
struct Valuation {
    Rs rs;   // ring carrying the variables/base (localization allowed)
    Poly pi; // prime element of the un-localized ring
    int pi_var = -1; // >= 0 when pi is unit * variable
};

// Verifies primality through is_prime (unless assume_prime).
Valuation make_valuation(const Rs& rs, const RingElem& pi, bool assume_prime = false);

ValExt valuation(const Poly& p, const Valuation& v);
ValExt valuation(const RingElem& e, const Valuation& v);

// Primality test for the supported decision classes:
//   (a) constant prime integer over an Integers base,
//   (b) unit * variable over any supported base,
//   (c) univariate polynomial over a prime field, by trial factorization.
// Anything else throws Unsupported.
bool is_prime(const RingElem& p, const Rs& rs);
bool is_prime_poly(const Poly& p, const RingSpec& rs);

// Residue ring spec of R/(pi): drops the variable or switches the base to
// F_p.  UnsupportedRing when pi is a nonlinear univariate polynomial.
Rs quotient_spec(const Valuation& v);

// Image of an integral element in Frac(R/pi R) as an element over
// quotient_spec(v).  NotIntegral when v(e) < 0.
RingElem reduce_mod_pi(const RingElem& e, const Valuation& v);

// Exact divisibility a | b in the un-localized ring.
bool divides(const RingElem& a, const RingElem& b, const Rs& rs);

// Extended gcd in a Euclidean base: Z (constants) or F_q[u] (univariate).
// d = r*u + s*v with d | u and d | v; d >= 0 over Z, monic over F_q[u].
struct BezoutTriple {
    RingElem d, r, s;
};
BezoutTriple bezout_gcd(const RingElem& u, const RingElem& v, const Rs& rs);

// Verdict on whether the ideal (x, y) of the given ring is principal.
struct PairVerdict {
    enum Kind { Principal, NonPrincipal, Undecided } kind;
    RingElem generator; // for Principal
    RingElem bez_a, bez_b; // a*x + b*y == generator, for Principal
    std::string reason;
};
// Decides fields, Z, F_q[u], and the pair (prime integer c, q) in Z[u];
// other shapes return Undecided.
PairVerdict pair_principal(const RingElem& x, const RingElem& y, const Rs& quotient);

// Given u*x == v*y, y*u != 0 and a Bezout triple for (u, v), produces the
// generator w = s*x + r*y of (x, y) together with the cofactors
// x = v1*w, y = u1*w.  HypothesisViolated when the inputs do not satisfy
// the stated relations.
struct TransferResult {
    RingElem w, u1, v1;
};
TransferResult principal_transfer(const RingElem& u, const RingElem& v,
                                  const RingElem& x, const RingElem& y,
                                  const BezoutTriple& bez, const Rs& rs);

} // namespace sl2a
