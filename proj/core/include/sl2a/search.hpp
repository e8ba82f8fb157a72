#pragma once

#include "sl2a/amalgam.hpp"
#include "sl2a/words.hpp"

namespace sl2a {

// Finite search budget.  `menu` is the instantiated token list; the caps
// describe how its parameters were generated and are recorded with every
// verdict.  Verdicts are deterministic functions of (target, budget).
struct SearchBudget {
    int max_depth = 4;
    long long coeff_height_cap = 16;
    int degree_cap = 8;
    GenWord menu;
    std::vector<Mat2> table; // matrices behind Named tokens
    long long layer_cap = 8000000;
    long long enum_ceiling = 60000000;
    std::string menu_shape;
};

struct SearchStats {
    int depth = 0;              // deepest level fully enumerated
    Int words_enumerated = 0;   // products formed, before deduplication
    Int dedup_hits = 0;
    long long menu_size = 0;
    std::string menu_shape;
    std::string verdict;        // "Found" / "NotFoundAtBound"
    bool h0_covers_e2 = false;  // h0 menus only: every e2 token is a single letter
};

struct SearchResult {
    bool found = false;
    GenWord word; // reduced witness word when found
    SearchStats stats;
};

// Elementary tokens E12(p), E21(p) with p = +-c * v^e, c in [1, height],
// e in [0, degree], negative exponents only for inverted variables, plus
// the diagonal tokens D(v^e, v^-e) for inverted variables.
SearchBudget default_e2_budget(const Rs& rs, int depth, long long height, int degree);

// Letters of SL_2(R) and of its D(1/pi,1)-conjugate: elementary tokens
// with nonnegative-exponent parameters, the rotation [[0,-1],[1,0]], and
// the conjugates of all of those.
SearchBudget default_h0_budget(const AmalgamContext& ctx, int depth, long long height,
                               int degree);

// Exhaustive enumeration of all products of at most max_depth menu tokens,
// deduplicated by exact matrix value per layer (meet-in-the-middle for
// depth >= 3).  Found words re-evaluate to the target exactly.
SearchResult bounded_e2_search(const Mat2& target, const Rs& rs,
                               const SearchBudget& budget); // BudgetTooLarge

// Same engine over the h0 menu; when every e2 token of equal caps lies in
// A or B, a NotFound here implies NotFound for that e2 menu at equal depth
// (stats.h0_covers_e2 reports whether the implication applies).
SearchResult bounded_h0_search(const Mat2& target, const AmalgamContext& ctx,
                               const SearchBudget& budget);

} // namespace sl2a
