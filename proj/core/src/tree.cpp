#include "sl2a/tree.hpp"

#include <cassert>

namespace sl2a {

namespace {

RingElem pi_elem(const Valuation& v) { return elem_poly(v.rs, v.pi); }

RingElem pi_pow(const Valuation& v, long long n) {
    return elem_pow(pi_elem(v), n);
}

long long vv(const RingElem& e, const Valuation& v) {
    ValExt x = valuation(e, v);
    assert(x.has_value());
    return *x;
}

// column span of [[a, c], [b, d]] as a normalized vertex
TreeVertex normalize_class(RingElem a, RingElem b, RingElem c, RingElem d,
                           const Valuation& v) {
    // pivot on the top row entry of smaller valuation, first column on ties
    ValExt va = valuation(a, v), vc = valuation(c, v);
    bool swap = false;
    if (!va.has_value())
        swap = true;
    else if (vc.has_value() && *vc < *va)
        swap = true;
    if (swap) {
        std::swap(a, c);
        std::swap(b, d);
    }
    if (a.is_zero()) throw SingularMatrix("degenerate lattice basis");
    if (!c.is_zero()) {
        RingElem f = c / a; // valuation >= 0 by pivot choice
        c = c - f * a;      // = 0
        d = d - f * b;
    }
    if (d.is_zero()) throw SingularMatrix("degenerate lattice basis");
    return TreeVertex{vv(d / a, v), b / a};
}

} // namespace

TreeVertex base_vertex(const Valuation& v) {
    return TreeVertex{0, elem_zero(v.rs)};
}

TreeEdge base_edge(const Valuation& v) {
    return TreeEdge{base_vertex(v), TreeVertex{1, elem_zero(v.rs)}};
}

Mat2 vertex_matrix(const TreeVertex& w, const Valuation& v) {
    return Mat2{elem_one(v.rs), elem_zero(v.rs), w.u, pi_pow(v, w.n)};
}

bool vertex_eq(const TreeVertex& a, const TreeVertex& b, const Valuation& v) {
    if (a.n != b.n) return false;
    return val_ge(valuation(a.u - b.u, v), a.n);
}

bool edge_eq(const TreeEdge& a, const TreeEdge& b, const Valuation& v) {
    return (vertex_eq(a.a, b.a, v) && vertex_eq(a.b, b.b, v)) ||
           (vertex_eq(a.a, b.b, v) && vertex_eq(a.b, b.a, v));
}

TreeVertex act(const Mat2& g, const TreeVertex& w, const Valuation& v) {
    if (det(g).is_zero()) throw SingularMatrix("act needs det != 0");
    Mat2 m = vertex_matrix(w, v);
    Mat2 p = g * m;
    return normalize_class(p.a11, p.a21, p.a12, p.a22, v);
}

TreeEdge act(const Mat2& g, const TreeEdge& e, const Valuation& v) {
    return TreeEdge{act(g, e.a, v), act(g, e.b, v)};
}

namespace {

Mat2 inv_general(const Mat2& m) {
    RingElem d = det(m);
    if (d.is_zero()) throw SingularMatrix("singular");
    return Mat2{m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

ValExt min_val(const Mat2& m, const Valuation& v) {
    ValExt r = std::nullopt;
    for (const RingElem* e : {&m.a11, &m.a12, &m.a21, &m.a22}) {
        ValExt x = valuation(*e, v);
        if (!x) continue;
        if (!r || *x < *r) r = x;
    }
    return r;
}

} // namespace

long long distance(const TreeVertex& w1, const TreeVertex& w2, const Valuation& v) {
    Mat2 n = inv_general(vertex_matrix(w1, v)) * vertex_matrix(w2, v);
    ValExt a = min_val(n, v);
    assert(a.has_value());
    long long vd = vv(det(n), v);
    return vd - 2 * *a;
}

std::vector<TreeVertex> geodesic(const TreeVertex& w1, const TreeVertex& w2,
                                 const Valuation& v) {
    Mat2 m1 = vertex_matrix(w1, v);
    Mat2 n = inv_general(m1) * vertex_matrix(w2, v);
    // Smith decomposition over the valuation ring: row operations collected
    // into k1 with n = k1 * diag * (column ops), k1 in GL_2(O).
    Mat2 k1 = mat_identity(v.rs);
    // choose the pivot of minimal valuation, scanning 11, 12, 21, 22
    const RingElem* entries[4] = {&n.a11, &n.a12, &n.a21, &n.a22};
    int pivot = -1;
    long long best = 0;
    for (int i = 0; i < 4; ++i) {
        ValExt x = valuation(*entries[i], v);
        if (!x) continue;
        if (pivot < 0 || *x < best) {
            pivot = i;
            best = *x;
        }
    }
    if (pivot < 0) throw SingularMatrix("zero matrix");
    if (pivot >= 2) { // pivot in row 2: swap rows, record the swap
        std::swap(n.a11, n.a21);
        std::swap(n.a12, n.a22);
        Mat2 s = mat(elem_zero(v.rs), elem_one(v.rs), elem_one(v.rs), elem_zero(v.rs));
        k1 = k1 * s; // inverse of a row swap is the same swap
        pivot -= 2;
    }
    if (pivot == 1) { // pivot in column 2: swap columns (right op, ignored)
        std::swap(n.a11, n.a12);
        std::swap(n.a21, n.a22);
    }
    // clear the (2,1) entry: row2 -= f*row1, f in O
    if (!n.a21.is_zero()) {
        RingElem f = n.a21 / n.a11;
        n.a21 = elem_zero(v.rs);
        n.a22 = n.a22 - f * n.a12;
        // inverse op appended on the right of k1
        k1 = k1 * elem21(f);
    }
    // clearing the (1,2) entry is a column op; it does not change k1
    long long a = vv(n.a11, v);
    long long b = vv(n.a22, v);
    assert(b >= a);
    std::vector<TreeVertex> path;
    Mat2 base = m1 * k1;
    for (long long j = 0; j <= b - a; ++j) {
        Mat2 step = base * diag(elem_one(v.rs), pi_pow(v, j));
        path.push_back(normalize_class(step.a11, step.a21, step.a12, step.a22, v));
    }
    return path;
}

bool stabilizes(const Mat2& g, const TreeVertex& w, const Valuation& v) {
    if (!is_unimodular(g)) throw NotUnimodular("stabilizer test requires det = 1");
    Mat2 m = vertex_matrix(w, v);
    Mat2 c = inv_general(m) * g * m;
    for (const RingElem* e : {&c.a11, &c.a12, &c.a21, &c.a22})
        if (!val_ge(valuation(*e, v), 0)) return false;
    return true;
}

bool stabilizes(const Mat2& g, const TreeEdge& e, const Valuation& v) {
    return stabilizes(g, e.a, v) && stabilizes(g, e.b, v);
}

std::optional<std::vector<RingElem>> residue_system(const Valuation& v, long long cap) {
    const RingSpec& rs = *v.rs;
    // constant prime p over Z with no extra variables: 0..p-1
    if (poly_is_constant(v.pi) && rs.base == Base::Integers && rs.vars.empty()) {
        Int p = poly_constant_value(v.pi);
        if (p < 0) p = -p;
        if (p > cap) return std::nullopt;
        std::vector<RingElem> out;
        for (Int c = 0; c < p; ++c) out.push_back(elem_int(v.rs, c));
        return out;
    }
    if (v.pi_var >= 0) {
        // pi = variable: residues live in the remaining polynomial ring,
        // finite only when no other variable exists over a prime field
        if (rs.base == Base::Prime && rs.vars.size() == 1) {
            if (rs.prime_q > cap) return std::nullopt;
            std::vector<RingElem> out;
            for (long long c = 0; c < rs.prime_q; ++c) out.push_back(elem_int(v.rs, c));
            return out;
        }
        return std::nullopt;
    }
    if (rs.base == Base::Prime && rs.vars.size() == 1 && !poly_is_constant(v.pi)) {
        // irreducible univariate pi of degree d: all polynomials of degree < d
        int var = 0;
        int d = poly_degree_in(v.pi, var);
        double size = 1;
        for (int i = 0; i < d; ++i) size *= static_cast<double>(rs.prime_q);
        if (size > static_cast<double>(cap)) return std::nullopt;
        std::vector<RingElem> out;
        std::vector<long long> c(d, 0);
        while (true) {
            std::vector<Term> terms;
            for (int i = 0; i < d; ++i) {
                if (c[i] != 0) {
                    Mono m(rs.vars.size(), 0);
                    m[var] = i;
                    terms.push_back(Term{m, Int(c[i])});
                }
            }
            out.push_back(elem_poly(v.rs, poly_from_terms(rs, std::move(terms))));
            int i = 0;
            while (i < d && ++c[i] == rs.prime_q) c[i++] = 0;
            if (i == d) break;
        }
        return out;
    }
    return std::nullopt;
}

NeighborList neighbors(const TreeVertex& w, const Valuation& v, int extra_samples) {
    NeighborList out;
    out.list.push_back(TreeVertex{w.n - 1, w.u});
    auto res = residue_system(v);
    RingElem pin = pi_pow(v, w.n);
    if (res) {
        for (const auto& c : *res)
            out.list.push_back(TreeVertex{w.n + 1, w.u + c * pin});
        out.complete = true;
    } else {
        out.list.push_back(TreeVertex{w.n + 1, w.u});
        for (int i = 1; i <= extra_samples; ++i)
            out.list.push_back(TreeVertex{w.n + 1, w.u + elem_int(v.rs, i) * pin});
        out.complete = false;
    }
    return out;
}

} // namespace sl2a
