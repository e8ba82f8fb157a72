#include "helpers.hpp"

#include <doctest.h>

using namespace sl2a;
using namespace sl2a::testing;

namespace {

struct TreeCase {
    const char* ring;
    const char* pi;
};

Valuation val_for(const TreeCase& c) {
    Rs rs = parse_ring_spec(c.ring);
    return make_valuation(rs, parse_elem(c.pi, rs));
}

} // namespace

TEST_SUITE_BEGIN("tree");

TEST_CASE("fundamental edge") {
    Valuation v = val_for({"Z", "2"});
    TreeEdge e = base_edge(v);
    CHECK(distance(e.a, e.b, v) == 1);
    CHECK(stabilizes(mat_identity(v.rs), e, v));
    // D(1/pi, 1) carries the base vertex to the second endpoint
    RingElem pi = elem_poly(v.rs, v.pi);
    Mat2 d = diag(elem_inv(pi), elem_one(v.rs));
    CHECK(vertex_eq(act(d, e.a, v), e.b, v));
}

TEST_CASE("action examples") {
    Valuation v = val_for({"Z", "2"});
    TreeEdge e = base_edge(v);
    Rng rng(41);
    TreeVertex w = random_vertex(rng, v);
    CHECK(vertex_eq(act(mat_identity(v.rs), w, v), w, v));
    // E21(pi) lies in the edge stabilizer
    RingElem pi = elem_poly(v.rs, v.pi);
    CHECK(stabilizes(elem21(pi), e, v));
    CHECK(vertex_eq(act(elem21(pi), e.a, v), e.a, v));
    CHECK(vertex_eq(act(elem21(pi), e.b, v), e.b, v));
    // D(1/pi^2, 1) moves the base vertex to (2, 0)
    Mat2 d2 = diag(elem_inv(pi * pi), elem_one(v.rs));
    TreeVertex img = act(d2, e.a, v);
    CHECK(img.n == 2);
    CHECK(vertex_eq(img, TreeVertex{2, elem_zero(v.rs)}, v));
    CHECK(distance(e.a, img, v) == 2);
    CHECK(bfs_distance(e.a, img, v, 3) == 2);
    CHECK_THROWS_AS(act(mat(elem_one(v.rs), elem_one(v.rs), elem_one(v.rs), elem_one(v.rs)),
                        w, v),
                    SingularMatrix);
}

TEST_CASE("distance and geodesics") {
    Valuation v = val_for({"Z", "2"});
    TreeVertex x0 = base_vertex(v);
    CHECK(distance(x0, x0, v) == 0);
    CHECK(distance(x0, TreeVertex{1, elem_zero(v.rs)}, v) == 1);
    auto path = geodesic(x0, TreeVertex{2, elem_zero(v.rs)}, v);
    REQUIRE(path.size() == 3);
    CHECK(vertex_eq(path[1], TreeVertex{1, elem_zero(v.rs)}, v));

    // random pairs: geodesic endpoints, adjacency, length; BFS cross-check
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        TreeVertex a = random_vertex(rng, v);
        TreeVertex b = random_vertex(rng, v);
        long long d = distance(a, b, v);
        CHECK(d >= 0);
        auto p = geodesic(a, b, v);
        CHECK(static_cast<long long>(p.size()) == d + 1);
        CHECK(vertex_eq(p.front(), a, v));
        CHECK(vertex_eq(p.back(), b, v));
        for (size_t j = 0; j + 1 < p.size(); ++j) CHECK(distance(p[j], p[j + 1], v) == 1);
        if (d <= 6) CHECK(bfs_distance(a, b, v, 7) == d);
    }
}

TEST_CASE("stabilizer examples") {
    Valuation v = val_for({"Z", "2"});
    RingElem pi = elem_poly(v.rs, v.pi);
    TreeVertex x0 = base_vertex(v);
    TreeVertex y0{1, elem_zero(v.rs)};
    Mat2 e12_inv = elem12(elem_inv(pi));
    CHECK(stabilizes(e12_inv, y0, v));
    CHECK(!stabilizes(e12_inv, x0, v));
    Mat2 e21_inv = elem21(elem_inv(pi));
    CHECK(!stabilizes(e21_inv, x0, v));
    CHECK(!stabilizes(e21_inv, y0, v));
    CHECK_THROWS_AS(stabilizes(diag(pi, elem_one(v.rs)), x0, v), NotUnimodular);
}

TEST_CASE("neighbor counts") {
    Valuation v2 = val_for({"Z", "2"});
    NeighborList n2 = neighbors(base_vertex(v2), v2);
    CHECK(n2.complete);
    CHECK(n2.list.size() == 3);
    for (const auto& w : n2.list) CHECK(distance(base_vertex(v2), w, v2) == 1);
    for (size_t i = 0; i < n2.list.size(); ++i)
        for (size_t j = i + 1; j < n2.list.size(); ++j)
            CHECK(!vertex_eq(n2.list[i], n2.list[j], v2));

    Valuation v3 = val_for({"F3[u]", "u"});
    NeighborList n3 = neighbors(base_vertex(v3), v3);
    CHECK(n3.complete);
    CHECK(n3.list.size() == 4);
    for (const auto& w : n3.list) CHECK(distance(base_vertex(v3), w, v3) == 1);

    // degree-2 residue field: q^2 + 1 neighbors
    Rs f2u = parse_ring_spec("F2[u]");
    Valuation vf = make_valuation(f2u, parse_elem("u^2 + u + 1", f2u));
    NeighborList nf = neighbors(base_vertex(vf), vf);
    CHECK(nf.complete);
    CHECK(nf.list.size() == 5);

    // infinite residue ring: flagged partial
    Rs zt = parse_ring_spec("Z[t]");
    Valuation vt = make_valuation(zt, parse_elem("t", zt));
    NeighborList np = neighbors(base_vertex(vt), vt, 2);
    CHECK(!np.complete);
    CHECK(np.list.size() == 4);
    for (const auto& w : np.list) CHECK(distance(base_vertex(vt), w, vt) == 1);
}

TEST_CASE("isometry, homomorphism, stabilizer consistency") {
    for (TreeCase c : {TreeCase{"Z", "2"}, TreeCase{"F3[u]", "u"}}) {
        Valuation v = val_for(c);
        Rng rng(47);
        for (int i = 0; i < 350; ++i) {
            Mat2 g = random_sl2_localized(rng, v, 4, 3, 2);
            Mat2 h = random_sl2_localized(rng, v, 3, 3, 2);
            TreeVertex w1 = random_vertex(rng, v);
            TreeVertex w2 = random_vertex(rng, v);
            CHECK(distance(act(g, w1, v), act(g, w2, v), v) == distance(w1, w2, v));
            CHECK(vertex_eq(act(g * h, w1, v), act(g, act(h, w1, v), v), v));
            CHECK(stabilizes(g, w1, v) == vertex_eq(act(g, w1, v), w1, v));
        }
    }
}

TEST_CASE("orbit parity and absence of inversion") {
    Valuation v = val_for({"Z", "2"});
    TreeEdge e = base_edge(v);
    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        Mat2 g = random_sl2_localized(rng, v, 8, 3, 2);
        TreeVertex gx = act(g, e.a, v);
        TreeVertex gy = act(g, e.b, v);
        // the two vertex orbits are separated by the parity of n
        CHECK(gx.n % 2 == 0);
        CHECK((gy.n % 2 + 2) % 2 == 1);
        // an edge is never mapped to itself with endpoints swapped
        CHECK(!(vertex_eq(gx, e.b, v) && vertex_eq(gy, e.a, v)));
    }
}

TEST_SUITE_END();
