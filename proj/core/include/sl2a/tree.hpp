#pragma once

#include "sl2a/mat2.hpp"
#include "sl2a/ring_ops.hpp"

namespace sl2a {

// Vertex of the Bruhat-Tits tree of SL_2(F) for the valuation v: the
// homothety class of the lattice with basis (1, u), (0, pi^n), i.e. the
// column span of  M(n, u) = [[1, 0], [u, pi^n]].  Two pairs name the same
// class iff n = n' and v(u - u') >= n.  The base vertex x0 = (0, 0) is the
// class of O^2 and y0 = (1, 0) spans the fundamental edge with it; their
// stabilizers are SL_2(O) and D(1/pi,1) SL_2(O) D(pi,1).
struct TreeVertex {
    long long n;
    RingElem u;
};

struct TreeEdge {
    TreeVertex a, b; // unordered pair at distance 1
};

TreeVertex base_vertex(const Valuation& v);       // (0, 0)
TreeEdge base_edge(const Valuation& v);           // {(0,0), (1,0)}
Mat2 vertex_matrix(const TreeVertex& w, const Valuation& v);

bool vertex_eq(const TreeVertex& a, const TreeVertex& b, const Valuation& v);
bool edge_eq(const TreeEdge& a, const TreeEdge& b, const Valuation& v);

// Class of g * M(w), renormalized by valuation-pivoted column reduction
// (ties keep the first column).  SingularMatrix when det g = 0.
TreeVertex act(const Mat2& g, const TreeVertex& w, const Valuation& v);
TreeEdge act(const Mat2& g, const TreeEdge& e, const Valuation& v);

// Tree distance from the gap of the two invariant-factor exponents of
// M(w1)^-1 M(w2).
long long distance(const TreeVertex& w1, const TreeVertex& w2, const Valuation& v);

// Vertex path from w1 to w2; consecutive entries adjacent, length = distance.
std::vector<TreeVertex> geodesic(const TreeVertex& w1, const TreeVertex& w2,
                                 const Valuation& v);

// g fixes the vertex iff all entries of M^-1 g M have valuation >= 0; an
// edge is fixed iff both endpoints are (the action has no inversion).
bool stabilizes(const Mat2& g, const TreeVertex& w, const Valuation& v);
bool stabilizes(const Mat2& g, const TreeEdge& e, const Valuation& v);

// Neighbors of w: (n-1, u) plus (n+1, u + c*pi^n) for c over a residue
// system of R/pi.  When the residue ring is infinite, `complete` is false
// and only the canonical two plus `extra_samples` integer samples are
// returned.
struct NeighborList {
    std::vector<TreeVertex> list;
    bool complete;
};
NeighborList neighbors(const TreeVertex& w, const Valuation& v, int extra_samples = 0);

// Residue system of R/pi when finite and at most `cap` elements.
std::optional<std::vector<RingElem>> residue_system(const Valuation& v,
                                                    long long cap = 4096);

} // namespace sl2a
