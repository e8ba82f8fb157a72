#pragma once

#include "sl2a/amalgam.hpp"
#include "sl2a/text.hpp"
#include "sl2a/tree.hpp"

#include <random>

namespace sl2a::testing {

using Rng = std::mt19937_64;

inline long long rnd_range(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Poly random_poly(Rng& rng, const RingSpec& rs, int max_terms, int max_deg,
                        long long max_coeff) {
    std::vector<Term> terms;
    int n = static_cast<int>(rnd_range(rng, 0, max_terms));
    for (int i = 0; i < n; ++i) {
        Mono m(rs.vars.size(), 0);
        for (size_t v = 0; v < rs.vars.size(); ++v)
            m[v] = static_cast<int>(rnd_range(rng, 0, max_deg));
        Int c = rnd_range(rng, -max_coeff, max_coeff);
        terms.push_back(Term{std::move(m), std::move(c)});
    }
    return poly_from_terms(rs, std::move(terms));
}

inline Poly random_nonzero_poly(Rng& rng, const RingSpec& rs, int max_terms, int max_deg,
                                long long max_coeff) {
    while (true) {
        Poly p = random_poly(rng, rs, max_terms, max_deg, max_coeff);
        if (!p.is_zero()) return p;
    }
}

inline RingElem random_elem(Rng& rng, const Rs& rs, int max_terms = 3, int max_deg = 3,
                            long long max_coeff = 9) {
    return make_elem(rs, random_poly(rng, *rs, max_terms, max_deg, max_coeff),
                     random_nonzero_poly(rng, *rs, max_terms, max_deg, max_coeff));
}

inline RingElem random_nonzero_elem(Rng& rng, const Rs& rs, int max_terms = 3,
                                    int max_deg = 3, long long max_coeff = 9) {
    while (true) {
        RingElem e = random_elem(rng, rs, max_terms, max_deg, max_coeff);
        if (!e.is_zero()) return e;
    }
}

// fraction with denominator coprime to pi (so v(e) >= 0)
inline RingElem random_integral_elem(Rng& rng, const Valuation& val, int max_terms = 3,
                                     int max_deg = 2, long long max_coeff = 6) {
    while (true) {
        Poly den = random_nonzero_poly(rng, *val.rs, max_terms, max_deg, max_coeff);
        if (*valuation(den, val) != 0) continue;
        Poly num = random_poly(rng, *val.rs, max_terms, max_deg, max_coeff);
        return make_elem(val.rs, std::move(num), std::move(den));
    }
}

inline Mat2 random_sl2_valuation_ring(Rng& rng, const Valuation& val, int len = 5) {
    Mat2 acc = mat_identity(val.rs);
    int n = static_cast<int>(rnd_range(rng, 1, len));
    for (int i = 0; i < n; ++i) {
        RingElem r = random_integral_elem(rng, val);
        acc = acc * (rng() % 2 ? elem12(r) : elem21(r));
    }
    return acc;
}

// element of SL_2(R[1/pi]) as a short product of capped elementary matrices
inline Mat2 random_sl2_localized(Rng& rng, const Valuation& val, int len, long long height,
                                 int pi_pow_bound) {
    RingElem pi = elem_poly(val.rs, val.pi);
    Mat2 acc = mat_identity(val.rs);
    int n = static_cast<int>(rnd_range(rng, 1, len));
    for (int i = 0; i < n; ++i) {
        long long c = rnd_range(rng, -height, height);
        if (c == 0) c = 1;
        long long e = rnd_range(rng, -pi_pow_bound, pi_pow_bound);
        RingElem r = elem_int(val.rs, c) * elem_pow(pi, e);
        acc = acc * (rng() % 2 ? elem12(r) : elem21(r));
    }
    return acc;
}

inline TreeVertex random_vertex(Rng& rng, const Valuation& val) {
    long long n = rnd_range(rng, -3, 3);
    RingElem u = random_integral_elem(rng, val) *
                 elem_pow(elem_poly(val.rs, val.pi), rnd_range(rng, -2, 1));
    return TreeVertex{n, u};
}

// breadth-first distance oracle; requires a finite residue system
inline long long bfs_distance(const TreeVertex& from, const TreeVertex& to,
                              const Valuation& val, int max_depth) {
    std::vector<TreeVertex> seen{from};
    std::vector<TreeVertex> frontier{from};
    if (vertex_eq(from, to, val)) return 0;
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<TreeVertex> next;
        for (const auto& w : frontier) {
            NeighborList nb = neighbors(w, val);
            if (!nb.complete) throw Error("bfs oracle needs a finite residue system");
            for (const auto& z : nb.list) {
                bool dup = false;
                for (const auto& s : seen)
                    if (vertex_eq(s, z, val)) dup = true;
                if (dup) continue;
                if (vertex_eq(z, to, val)) return d;
                seen.push_back(z);
                next.push_back(z);
            }
        }
        frontier = std::move(next);
    }
    return -1;
}

} // namespace sl2a::testing
