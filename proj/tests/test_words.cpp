#include "helpers.hpp"

#include <doctest.h>

using namespace sl2a;
using namespace sl2a::testing;

TEST_SUITE_BEGIN("words");

TEST_CASE("elementary and diagonal constructors") {
    Rs rs = ring_z();
    CHECK(elem12(elem_zero(rs)) == mat_identity(rs));
    Rng rng(3);
    RingElem r = random_elem(rng, rs), s = random_elem(rng, rs);
    CHECK(det(elem12(r) * elem21(s)) == elem_one(rs));
    CHECK(inv_unimodular(elem12(r)) == elem12(-r));
    CHECK_THROWS_AS(diag(elem_zero(rs), elem_one(rs)), ZeroElement);
    CHECK_THROWS_AS(inv_unimodular(diag(elem_int(rs, 2), elem_one(rs))), NotUnimodular);
}

TEST_CASE("word evaluation") {
    Rs rs = ring_z();
    CHECK(eval_word({}, rs) == mat_identity(rs));
    RingElem one = elem_one(rs);
    GenWord w{tok_e12(one), tok_e21(-one), tok_e12(one)};
    Mat2 expect = mat(elem_zero(rs), one, -one, elem_zero(rs));
    CHECK(eval_word(w, rs) == expect);
    CHECK_THROWS_AS(eval_word({tok_named(0)}, rs), UnknownGenerator);
    // concatenation is multiplicative
    Rng rng(5);
    GenWord u{tok_e12(random_elem(rng, rs)), tok_e21(random_elem(rng, rs))};
    GenWord v{tok_e21(random_elem(rng, rs))};
    GenWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(eval_word(uv, rs) == eval_word(u, rs) * eval_word(v, rs));
}

TEST_CASE("six elementary factors multiply to D(1/r, r)") {
    Rs rs = ring_z();
    // r = 1: the product collapses to the identity
    CHECK(eval_word(diag_word(elem_one(rs)), rs) == mat_identity(rs));
    // r = 2 over Q, frozen by multiplying the six factors directly
    RingElem two = elem_int(rs, 2);
    Mat2 prod = eval_word(diag_word(two), rs);
    CHECK(prod == diag(elem_inv(two), two));
    // symbolic r over Frac(Z[r])
    Rs zr = parse_ring_spec("Z[r]");
    RingElem r = elem_var(zr, 0);
    CHECK(eval_word(diag_word(r), zr) == diag(elem_inv(r), r));
    CHECK_THROWS_AS(diag_word(elem_zero(rs)), ZeroElement);
}

TEST_CASE("diagonal word holds for random parameters") {
    Rs zst = parse_ring_spec("Z[s,t]");
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        RingElem r = random_nonzero_elem(rng, zst);
        CHECK(eval_word(diag_word(r), zst) == diag(elem_inv(r), r));
    }
}

TEST_CASE("conjugation by D(1/r,r) rescales elementary parameters") {
    Rs zst = parse_ring_spec("Z[s,t]");
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        RingElem r = random_nonzero_elem(rng, zst);
        RingElem x = random_elem(rng, zst);
        Mat2 d = diag(elem_inv(r), r);
        Mat2 dinv = inv_unimodular(d);
        Mat2 dn = mat_identity(zst), dninv = mat_identity(zst);
        for (int n = 0; n <= 3; ++n) {
            // positive n uses d^n, negative uses the inverse power
            if (n > 0) {
                dn = dn * d;
                dninv = dninv * dinv;
            }
            RingElem scale = elem_pow(r, -2LL * n);
            CHECK(dn * elem12(x) * dninv == elem12(scale * x));
            CHECK(dninv * elem21(x) * dn == elem21(scale * x));
            CHECK(dninv * elem12(x) * dn == elem12(x / scale));
            CHECK(dn * elem21(x) * dninv == elem21(x / scale));
        }
    }
}

TEST_CASE("generating set of E2 over the fully inverted ring") {
    // m = 0: only the empty product
    Rs p0 = parse_ring_spec("Z");
    auto g0 = e2_generating_set(p0);
    CHECK(g0.size() == 2);
    CHECK(g0[0] == elem12(elem_one(p0)));
    CHECK(g0[1] == elem21(elem_one(p0)));

    // m = 1
    Rs p1 = parse_ring_spec("Z[y] loc(y)");
    auto g1 = e2_generating_set(p1);
    CHECK(g1.size() == 5);

    // m = 2: 2 diagonals + 8 elementaries
    Rs p2 = parse_ring_spec("F3[y1,y2] loc(y1,y2)");
    auto g2 = e2_generating_set(p2);
    CHECK(g2.size() == 10);
    for (const auto& g : g2) {
        CHECK(det(g) == elem_one(p2));
        CHECK(entries_in_localized(g, *p2));
    }

    CHECK_THROWS_AS(e2_generating_set(parse_ring_spec("Z[y]")), NotFullyLocalized);
    CHECK_THROWS_AS(e2_generating_set(parse_ring_spec("Z[y1,y2] loc(y1)")),
                    NotFullyLocalized);
    CHECK_THROWS_AS(e2_generating_set(parse_ring_spec("Z[y] loc(y,1+y)")),
                    NotFullyLocalized);
}

TEST_CASE("E12(x/r^2) as a word over E2(R) tokens and E12(1/r)") {
    // the six-factor diagonal word uses parameters in R and 1/r only, so
    // conjugating E12(x) by it stays inside that token alphabet
    Rs zr = parse_ring_spec("Z[r]");
    RingElem r = elem_var(zr, 0);
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        RingElem x = elem_poly(zr, random_poly(rng, *zr, 3, 3, 9));
        GenWord word = diag_word(r);
        word.push_back(tok_e12(x));
        GenWord back = diag_word(r);
        std::reverse(back.begin(), back.end());
        for (auto& t : back) t.r = -t.r; // inverse of an elementary word
        word.insert(word.end(), back.begin(), back.end());
        for (const auto& t : word) {
            // parameters lie in R or are (+-) 1/r
            bool param_ok =
                in_unlocalized(t.r).has_value() || in_unlocalized(t.r * r).has_value();
            CHECK(param_ok);
        }
        CHECK(eval_word(word, zr) == elem12(x / (r * r)));
    }
}

TEST_CASE("word reduction merges adjacent same-kind tokens") {
    Rs rs = ring_z();
    RingElem one = elem_one(rs), two = elem_int(rs, 2);
    GenWord w{tok_e12(one), tok_e12(two), tok_e21(one), tok_e21(-one), tok_e12(one)};
    // E21 block cancels, then the flanking E12 blocks coalesce
    GenWord r = reduce_word(w, rs);
    REQUIRE(r.size() == 1);
    CHECK(r[0].kind == TokKind::E12);
    CHECK(r[0].r == elem_int(rs, 4));
    CHECK(eval_word(r, rs) == eval_word(w, rs));
}

TEST_SUITE_END();
