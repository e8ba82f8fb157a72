#pragma once

#include "sl2a/ring_ops.hpp"
#include "sl2a/tree.hpp"

namespace sl2a {

// Valuation patterns of the two fundamental vertex stabilizers:
//   A = SL_2(O): all four entries have v >= 0
//   B = D(1/pi,1) SL_2(O) D(pi,1): v(a11) >= 0, v(a12) >= -1,
//       v(a21) >= 1, v(a22) >= 0
//   U = A cap B
enum class SideClass { InU, InAOnly, InBOnly, Neither };

struct SidePattern {
    SideClass cls;
    ValExt v11, v12, v21, v22;
};

SidePattern classify_side(const Mat2& g, const Valuation& v); // NotUnimodular

// Ring data for the amalgam of SL_2(R[1/pi]): the un-localized ring R, the
// prime pi, and a constructive gcd for the residue ring R/pi.  Supported
// residue rings: fields Z/p, F_q, F_q[u]/(f); Euclidean rings Z and F_q[u]
// (for R = R0[t], pi = t); Z[u] pairs through pair_principal.
struct AmalgamContext {
    enum class Quot { FieldInt, FieldConst, FieldPolyMod, EuclInt, EuclFqUni, Pair, None };
    Rs ring;       // un-localized spec
    Valuation val;
    Quot quot = Quot::None;
    int t_var = -1;     // pi variable index for the R0[t] cases
    int u_var = -1;     // variable of F_q[u] (FieldPolyMod / EuclFqUni)
    Int p = 0;          // modulus for FieldInt
    Rs quotient;        // residue ring spec for the Pair / Eucl cases
};

AmalgamContext make_amalgam_context(const Rs& ring, const RingElem& pi);

// For a in the A pattern, h in SL_2(R) with v((h a)_21) >= 1, following the
// residue-ring gcd construction.  UnsupportedQuotient when R/pi offers no
// constructive answer, NotInA / NotUnimodular on bad input.
Mat2 coset_reduce(const Mat2& a, const AmalgamContext& ctx);

// Mirror image: for b in the B pattern, h in D(1/pi,1) SL_2(R) D(pi,1)
// with h*b in U.
Mat2 coset_reduce_b(const Mat2& b, const AmalgamContext& ctx);

// Alternating factorization h = f_1 ... f_k * u with f_i drawn from
// SL_2(R) and its D(1/pi,1)-conjugate in turn, every f_i outside U, and
// trailing u in U cap SL_2(R[1/pi]).
enum class Side { A, B };

struct AmalgamWord {
    std::vector<std::pair<Side, Mat2>> factors;
    Mat2 trailing;
};

Mat2 word_product(const AmalgamWord& w, const Rs& rs);

// Reduction loop: walk the geodesic from the base edge towards h.e and fold
// one edge per step with a stabilizer element from coset_reduce.
AmalgamWord amalgam_reduce(const Mat2& h, const AmalgamContext& ctx); // ReductionStuck

bool is_normal_form(const AmalgamWord& w, const AmalgamContext& ctx);

// membership helpers
bool in_u_cap_h(const Mat2& m, const AmalgamContext& ctx);
bool in_sl2_ring(const Mat2& m, const AmalgamContext& ctx);
bool in_b_conjugate(const Mat2& m, const AmalgamContext& ctx);

Mat2 diag_pi(const AmalgamContext& ctx, bool inverse_first);

} // namespace sl2a
