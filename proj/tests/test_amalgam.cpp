#include "helpers.hpp"

#include <doctest.h>

using namespace sl2a;
using namespace sl2a::testing;

namespace {

AmalgamContext ctx_for(const char* ring, const char* pi) {
    Rs rs = parse_ring_spec(ring);
    return make_amalgam_context(rs, parse_elem(pi, rs));
}

} // namespace

TEST_SUITE_BEGIN("amalgam");

TEST_CASE("side classification") {
    AmalgamContext ctx = ctx_for("Z", "2");
    RingElem pi = elem_poly(ctx.ring, ctx.val.pi);
    CHECK(classify_side(elem21(pi), ctx.val).cls == SideClass::InU);
    CHECK(classify_side(elem12(elem_inv(pi)), ctx.val).cls == SideClass::InBOnly);
    CHECK(classify_side(elem21(elem_inv(pi)), ctx.val).cls == SideClass::Neither);
    CHECK(classify_side(elem21(elem_one(ctx.ring)), ctx.val).cls == SideClass::InAOnly);
    CHECK_THROWS_AS(classify_side(diag(pi, elem_one(ctx.ring)), ctx.val), NotUnimodular);

    // consistent with the stabilizers of the fundamental edge
    TreeEdge e = base_edge(ctx.val);
    Rng rng(59);
    for (int i = 0; i < 100; ++i) {
        Mat2 g = random_sl2_localized(rng, ctx.val, 4, 3, 2);
        SidePattern sp = classify_side(g, ctx.val);
        bool in_a = sp.cls == SideClass::InU || sp.cls == SideClass::InAOnly;
        bool in_b = sp.cls == SideClass::InU || sp.cls == SideClass::InBOnly;
        CHECK(in_a == stabilizes(g, e.a, ctx.val));
        CHECK(in_b == stabilizes(g, e.b, ctx.val));
    }
}

TEST_CASE("coset reduction, field quotient") {
    AmalgamContext ctx = ctx_for("Z", "2");
    Rs rs = ctx.ring;
    Mat2 a = mat(elem_one(rs), elem_zero(rs), parse_elem("1/3", rs), elem_one(rs));
    Mat2 h = coset_reduce(a, ctx);
    CHECK(h == elem21(elem_one(rs)));
    Mat2 ha = h * a;
    CHECK(ha.a21 == parse_elem("4/3", rs));
    CHECK(val_ge(valuation(ha.a21, ctx.val), 1));

    // already in U: the result still lands in U
    Mat2 u = elem21(elem_int(rs, 2));
    Mat2 hu = coset_reduce(u, ctx);
    CHECK(in_sl2_ring(hu, ctx));
    CHECK(classify_side(hu * u, ctx.val).cls == SideClass::InU);

    Mat2 bad = mat(elem_one(rs), elem_zero(rs), parse_elem("1/2", rs), elem_one(rs));
    CHECK_THROWS_AS(coset_reduce(bad, ctx), NotInA);
}

TEST_CASE("coset reduction contract on random inputs") {
    struct Case {
        const char* ring;
        const char* pi;
    };
    for (Case c : {Case{"Z", "2"}, Case{"Z", "5"}, Case{"F3[u]", "u"},
                   Case{"F2[u]", "u^2+u+1"}, Case{"Z[t]", "t"}, Case{"F3[u,t]", "t"}}) {
        CAPTURE(c.ring);
        CAPTURE(c.pi);
        AmalgamContext ctx = ctx_for(c.ring, c.pi);
        Rng rng(61);
        for (int i = 0; i < 100; ++i) {
            Mat2 a = random_sl2_valuation_ring(rng, ctx.val);
            Mat2 h = coset_reduce(a, ctx);
            CHECK(in_sl2_ring(h, ctx));
            CHECK(val_ge(valuation((h * a).a21, ctx.val), 1));
            CHECK(classify_side(h * a, ctx.val).cls == SideClass::InU);
        }
    }
}

TEST_CASE("mirror-side coset reduction") {
    AmalgamContext ctx = ctx_for("Z", "2");
    Rs rs = ctx.ring;
    RingElem pi = elem_poly(rs, ctx.val.pi);
    Mat2 b = elem12(elem_inv(pi));
    Mat2 h = coset_reduce_b(b, ctx);
    CHECK(in_b_conjugate(h, ctx));
    CHECK(classify_side(h * b, ctx.val).cls == SideClass::InU);

    Mat2 u = elem21(pi);
    Mat2 hu = coset_reduce_b(u, ctx);
    CHECK(classify_side(hu * u, ctx.val).cls == SideClass::InU);

    CHECK_THROWS_AS(coset_reduce_b(elem21(elem_inv(pi)), ctx), NotInB);

    Rng rng(67);
    for (int i = 0; i < 60; ++i) {
        Mat2 m = random_sl2_valuation_ring(rng, ctx.val);
        Mat2 dpi_inv = diag_pi(ctx, true);
        Mat2 dpi = diag_pi(ctx, false);
        Mat2 bm = dpi_inv * m * dpi; // generic element of the B side
        Mat2 f = coset_reduce_b(bm, ctx);
        CHECK(in_b_conjugate(f, ctx));
        CHECK(classify_side(f * bm, ctx.val).cls == SideClass::InU);
    }
}

TEST_CASE("amalgam reduction examples") {
    AmalgamContext ctx = ctx_for("Z", "2");
    Rs rs = ctx.ring;
    RingElem half = parse_elem("1/2", rs);

    AmalgamWord w0 = amalgam_reduce(mat_identity(rs), ctx);
    CHECK(w0.factors.empty());
    CHECK(w0.trailing == mat_identity(rs));

    AmalgamWord w1 = amalgam_reduce(elem12(half), ctx);
    REQUIRE(w1.factors.size() == 1);
    CHECK(w1.factors[0].first == Side::B);
    CHECK(word_product(w1, rs) == elem12(half));
    CHECK(is_normal_form(w1, ctx));

    AmalgamWord w2 = amalgam_reduce(elem21(half), ctx);
    CHECK(w2.factors.size() >= 2);
    CHECK(word_product(w2, rs) == elem21(half));
    CHECK(is_normal_form(w2, ctx));
    for (size_t i = 1; i < w2.factors.size(); ++i)
        CHECK(w2.factors[i].first != w2.factors[i - 1].first);
}

TEST_CASE("normal form predicate") {
    AmalgamContext ctx = ctx_for("Z", "2");
    Rs rs = ctx.ring;
    AmalgamWord empty{{}, mat_identity(rs)};
    CHECK(is_normal_form(empty, ctx));
    // a factor inside U cap H violates the form
    AmalgamWord bad{{{Side::A, elem21(elem_int(rs, 2))},
                     {Side::B, elem12(parse_elem("1/2", rs))}},
                    mat_identity(rs)};
    CHECK(!is_normal_form(bad, ctx));
    // non-alternating tags violate the form
    AmalgamWord bad2{{{Side::A, elem21(elem_one(rs))}, {Side::A, elem12(elem_one(rs))}},
                     mat_identity(rs)};
    CHECK(!is_normal_form(bad2, ctx));
    // trailing factor outside U cap H violates the form
    AmalgamWord bad3{{}, elem21(elem_one(rs))};
    CHECK(!is_normal_form(bad3, ctx));
}

TEST_CASE("round trip over three localizations") {
    struct Case {
        const char* ring;
        const char* pi;
    };
    for (Case c : {Case{"Z", "2"}, Case{"Z", "5"}, Case{"F3[u]", "u"},
                   Case{"F2[u]", "u^2+u+1"}, Case{"Z[t]", "t"}, Case{"F3[u,t]", "t"},
                   Case{"Z", "-2"}}) {
        CAPTURE(c.ring);
        AmalgamContext ctx = ctx_for(c.ring, c.pi);
        Rng rng(71);
        for (int i = 0; i < 40; ++i) {
            Mat2 h = random_sl2_localized(rng, ctx.val, 6, 3, 2);
            AmalgamWord w = amalgam_reduce(h, ctx);
            CHECK(word_product(w, ctx.ring) == h);
            CHECK(is_normal_form(w, ctx));
            // factor count is bounded by the edge displacement plus one
            TreeEdge e = base_edge(ctx.val);
            TreeEdge he = act(h, e, ctx.val);
            long long edge_dist =
                std::min(std::min(distance(e.a, he.a, ctx.val), distance(e.a, he.b, ctx.val)),
                         std::min(distance(e.b, he.a, ctx.val), distance(e.b, he.b, ctx.val)));
            CHECK(static_cast<long long>(w.factors.size()) <= edge_dist + 1);
            for (const auto& [side, m] : w.factors) {
                if (side == Side::A)
                    CHECK(in_sl2_ring(m, ctx));
                else
                    CHECK(in_b_conjugate(m, ctx));
            }
        }
    }
}

TEST_CASE("obstruction detection over Z[x][t]") {
    AmalgamContext ctx = ctx_for("Z[x,t]", "t");
    Rs rs = ctx.ring;
    // bottom-left entry 2/x: the residue pair (x, 2) leads to (2, x) in
    // Z[x], which is not principal
    Mat2 a = mat(elem_one(rs), elem_zero(rs), parse_elem("2/x", rs), elem_one(rs));
    CHECK_THROWS_AS(coset_reduce(a, ctx), UnsupportedQuotient);
    try {
        coset_reduce(a, ctx);
    } catch (const UnsupportedQuotient& e) {
        CHECK(std::string(e.what()).find("NonPrincipal") != std::string::npos);
    }
    // decidable-pair inputs still reduce
    Mat2 ok = mat(elem_one(rs), elem_zero(rs), parse_elem("3/(1+t)", rs), elem_one(rs));
    Mat2 h = coset_reduce(ok, ctx);
    CHECK(val_ge(valuation((h * ok).a21, ctx.val), 1));

    // rings without a constructive residue story are rejected
    Rs zx = parse_ring_spec("Z[x]");
    AmalgamContext none = make_amalgam_context(zx, parse_elem("x", zx));
    (void)none; // x is a variable: quotient Z is Euclidean, still fine
    Rs f3uv = parse_ring_spec("F3[u]");
    AmalgamContext f3ctx = make_amalgam_context(f3uv, parse_elem("u+1", f3uv));
    CHECK(f3ctx.quot == AmalgamContext::Quot::FieldPolyMod);
}

TEST_CASE("reduction rejects inputs outside SL2(R[1/pi])") {
    AmalgamContext ctx = ctx_for("Z", "2");
    Rs rs = ctx.ring;
    CHECK_THROWS_AS(amalgam_reduce(elem21(parse_elem("1/3", rs)), ctx), UnsupportedRing);
    CHECK_THROWS_AS(amalgam_reduce(diag(elem_int(rs, 2), elem_one(rs)), ctx),
                    NotUnimodular);
}

TEST_SUITE_END();
