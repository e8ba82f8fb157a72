#pragma once

#include "sl2a/mat2.hpp"

namespace sl2a {

enum class TokKind { E12, E21, Diag, Named };

// One generator token.  E12/E21 carry the off-diagonal parameter, Diag the
// two diagonal entries, Named an index into an external generator table.
struct GenToken {
    TokKind kind;
    RingElem r;           // E12 / E21 parameter
    RingElem alpha, beta; // Diag entries
    int named = -1;
};

using GenWord = std::vector<GenToken>;

GenToken tok_e12(const RingElem& r);
GenToken tok_e21(const RingElem& r);
GenToken tok_diag(const RingElem& alpha, const RingElem& beta);
GenToken tok_named(int index);

Mat2 token_matrix(const GenToken& t, const Rs& rs,
                  const std::vector<Mat2>* table = nullptr);

// Left-to-right product of the word.
Mat2 eval_word(const GenWord& w, const Rs& rs,
               const std::vector<Mat2>* table = nullptr);

// Merge adjacent tokens of the same elementary kind (parameters add) and
// adjacent diagonal tokens (entries multiply); identity tokens vanish.
GenWord reduce_word(const GenWord& w, const Rs& rs);

// Six elementary factors whose product is exactly D(1/r, r).
GenWord diag_word(const RingElem& r); // ZeroElement when r = 0

// The finite generating set of E_2(S') for S' = P[y1..ym, y1^-1..ym^-1]:
// the diagonals D(y_i, 1/y_i) together with E12(z), E21(z) for z running
// over square-free products of the y_i (including the empty product 1).
// Requires every variable of the spec to be inverted, and nothing else.
std::vector<Mat2> e2_generating_set(const Rs& rs); // NotFullyLocalized

} // namespace sl2a
