#pragma once

#include "sl2a/elem.hpp"

namespace sl2a {

// 2x2 matrix over the fraction field.
struct Mat2 {
    RingElem a11, a12, a21, a22;

    const Rs& rs() const { return a11.rs; }
};

Mat2 mat_identity(const Rs& rs);
Mat2 mat(const RingElem& a11, const RingElem& a12, const RingElem& a21,
         const RingElem& a22);

// E12(r) = [[1, r], [0, 1]],  E21(r) = [[1, 0], [r, 1]]
Mat2 elem12(const RingElem& r);
Mat2 elem21(const RingElem& r);
// D(alpha, beta), requires alpha*beta != 0
Mat2 diag(const RingElem& alpha, const RingElem& beta);

RingElem det(const Mat2& m);
Mat2 operator*(const Mat2& a, const Mat2& b);
bool operator==(const Mat2& a, const Mat2& b);
bool operator!=(const Mat2& a, const Mat2& b);

bool is_unimodular(const Mat2& m); // det == 1
Mat2 inv_unimodular(const Mat2& m); // adjugate; NotUnimodular when det != 1

// Entries lie in the un-localized ring of rs.
bool entries_in_ring(const Mat2& m, const Rs& rs);
// Entries lie in the localization described by rs.
bool entries_in_localized(const Mat2& m, const RingSpec& rs);

} // namespace sl2a
