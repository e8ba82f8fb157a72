#include "sl2a/mat2.hpp"

namespace sl2a {

Mat2 mat_identity(const Rs& rs) {
    return Mat2{elem_one(rs), elem_zero(rs), elem_zero(rs), elem_one(rs)};
}

Mat2 mat(const RingElem& a11, const RingElem& a12, const RingElem& a21,
         const RingElem& a22) {
    return Mat2{a11, a12, a21, a22};
}

Mat2 elem12(const RingElem& r) {
    return Mat2{elem_one(r.rs), r, elem_zero(r.rs), elem_one(r.rs)};
}

Mat2 elem21(const RingElem& r) {
    return Mat2{elem_one(r.rs), elem_zero(r.rs), r, elem_one(r.rs)};
}

Mat2 diag(const RingElem& alpha, const RingElem& beta) {
    if ((alpha * beta).is_zero()) throw ZeroElement("diagonal entries must be nonzero");
    return Mat2{alpha, elem_zero(alpha.rs), elem_zero(alpha.rs), beta};
}

RingElem det(const Mat2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

bool operator==(const Mat2& a, const Mat2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
}

bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

bool is_unimodular(const Mat2& m) { return det(m) == elem_one(m.rs()); }

Mat2 inv_unimodular(const Mat2& m) {
    if (!is_unimodular(m)) throw NotUnimodular("inverse requires det = 1");
    return Mat2{m.a22, -m.a12, -m.a21, m.a11};
}

bool entries_in_ring(const Mat2& m, const Rs& rs) {
    (void)rs;
    return in_unlocalized(m.a11) && in_unlocalized(m.a12) && in_unlocalized(m.a21) &&
           in_unlocalized(m.a22);
}

bool entries_in_localized(const Mat2& m, const RingSpec& rs) {
    return in_localized(m.a11, rs) && in_localized(m.a12, rs) &&
           in_localized(m.a21, rs) && in_localized(m.a22, rs);
}

} // namespace sl2a
