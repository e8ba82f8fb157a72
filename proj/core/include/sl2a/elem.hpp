#pragma once

#include "sl2a/ring.hpp"

namespace sl2a {

// Element of the fraction field F = Frac(R), kept as a normalized fraction
// of polynomials.  Normal form: zero is 0/1; over Z the joint integer
// content is removed and the denominator's lex-leading coefficient is
// positive; over F_q the denominator is monic.  A common univariate factor
// is cancelled whenever numerator and denominator involve at most one
// variable between them.  Equality is decided by cross-multiplication, so
// uncancelled multivariate factors are harmless.
struct RingElem {
    Rs rs;
    Poly num, den;

    bool is_zero() const { return num.is_zero(); }
};

RingElem make_elem(Rs rs, Poly num, Poly den); // normalizes; ZeroDenominator
RingElem elem_int(const Rs& rs, const Int& n);
RingElem elem_zero(const Rs& rs);
RingElem elem_one(const Rs& rs);
RingElem elem_var(const Rs& rs, int var);
RingElem elem_poly(const Rs& rs, Poly p);

RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator/(const RingElem& a, const RingElem& b); // ZeroDenominator
bool operator==(const RingElem& a, const RingElem& b);    // cross-multiplication
bool operator!=(const RingElem& a, const RingElem& b);

RingElem elem_inv(const RingElem& a);
RingElem elem_pow(const RingElem& a, long long e); // negative e inverts

// Membership in the un-localized ring: the exact polynomial when den | num.
std::optional<Poly> in_unlocalized(const RingElem& e);

// Membership in the localization named by e.rs (or an explicit spec):
// true when den | num * (d1...dk)^m for some bounded m.
bool in_localized(const RingElem& e);
bool in_localized(const RingElem& e, const RingSpec& rs);

} // namespace sl2a
