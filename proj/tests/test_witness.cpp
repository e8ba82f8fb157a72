#include "helpers.hpp"
#include "sl2a/cert_json.hpp"
#include "sl2a/witness.hpp"

#include <doctest.h>

using namespace sl2a;
using namespace sl2a::testing;

namespace {

WitnessOptions no_search() {
    WitnessOptions o;
    o.search_depth = 0;
    return o;
}

} // namespace

TEST_SUITE_BEGIN("witness");

TEST_CASE("polynomial-ring witness, f = 1 + s*t, p = 2") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    WitnessCertificate cert =
        mainstep_witness(z, parse_elem("1 + s*t", amb), parse_elem("2", amb), no_search());
    Mat2 expect = parse_matrix(
        "[[1 - 2*(1-s)/t, 4/t], [-(1-s)^2/t, 1 + 2*(1-s)/t]]", amb);
    CHECK(cert.h == expect);
    CHECK(cert.a == parse_matrix("[[1,0],[(1-s)/2,1]]", amb));
    CHECK(cert.b == parse_matrix("[[1,4/t],[0,1]]", amb));
    CHECK(*cert.f0 == elem_one(amb));
    CHECK(*cert.g == parse_elem("1-s", amb));
    CHECK(cert.tier == ClaimTier::TheoremBacked);
    for (const auto& c : cert.checks) CHECK(c.pass);
}

TEST_CASE("polynomial-ring witness, f = s + t^2, p = 3") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    WitnessCertificate cert =
        mainstep_witness(z, parse_elem("s + t^2", amb), parse_elem("3", amb), no_search());
    Mat2 expect = parse_matrix(
        "[[1 - 3*(1-s^2)/t, 9/t], [-(1-s^2)^2/t, 1 + 3*(1-s^2)/t]]", amb);
    CHECK(cert.h == expect);
    CHECK(*cert.f0 == parse_elem("s", amb));
    CHECK(*cert.g == parse_elem("1 - s^2", amb));
    CHECK(cert.tier == ClaimTier::TheoremBacked);
}

TEST_CASE("mainstep preconditions") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    CHECK_THROWS_AS(
        mainstep_witness(z, parse_elem("s*t", amb), parse_elem("2", amb), no_search()),
        DivisibleByT);
    CHECK_THROWS_AS(
        mainstep_witness(z, parse_elem("2 + s*t", amb), parse_elem("2", amb), no_search()),
        PDividesF0);
    CHECK_THROWS_AS(
        mainstep_witness(z, parse_elem("1 + s*t", amb), parse_elem("6", amb), no_search()),
        NotPrime);
}

TEST_CASE("mainstep entries involve only s and 1/t") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    for (const char* f : {"1 + s*t", "s + t^2", "1 + s + s*t^3"}) {
        WitnessCertificate cert =
            mainstep_witness(z, parse_elem(f, amb), parse_elem("5", amb), no_search());
        bool found = false;
        for (const auto& c : cert.checks)
            if (c.name == "h_entries_in_s_tinv") {
                found = true;
                CHECK(c.pass);
            }
        CHECK(found);
        CHECK(classify_side(cert.b, make_valuation(amb, cert.pi)).cls ==
              SideClass::InBOnly);
    }
}

TEST_CASE("Laurent witness over Z[x]") {
    Rs zx = parse_ring_spec("Z[x]");
    WitnessCertificate cert = laurent_witness(zx, parse_elem("2", zx),
                                              parse_elem("x", zx), no_search());
    Rs amb = cert.ambient_ring;
    Mat2 expect = parse_matrix("[[1 - 2*x/t, x^2/t], [-4/t, 1 + 2*x/t]]", amb);
    CHECK(cert.h == expect);
    CHECK(cert.tier == ClaimTier::TheoremBacked);
    CHECK(format_ring_spec(*cert.localized_ring) == "Z[x,t] loc(t)");

    CHECK_THROWS_AS(
        laurent_witness(zx, parse_elem("2", zx), parse_elem("3", zx), no_search()),
        PairPrincipal);
    CHECK_THROWS_AS(
        laurent_witness(zx, parse_elem("x", zx), parse_elem("x+2", zx), no_search()),
        UndecidedPair);

    WitnessCertificate c3 = laurent_witness(zx, parse_elem("3", zx),
                                            parse_elem("x^2+1", zx), no_search());
    CHECK(c3.h.a21 == parse_elem("-9/t", c3.ambient_ring));
}

TEST_CASE("congruence family reproduces the special case") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    RingElem f = parse_elem("1 + s*t", amb);
    RingElem p = parse_elem("2", amb);
    Mat2 bp = parse_matrix("[[1, 4], [0, 1]]", amb); // [[1, p^2], [0, 1]]
    WitnessCertificate more = more_examples_witness(z, f, p, bp, no_search());
    WitnessCertificate main = mainstep_witness(z, f, p, no_search());
    CHECK(more.b == main.b);
    CHECK(more.h == main.h);
    CHECK(more.tier == ClaimTier::TheoremBacked);
}

TEST_CASE("congruence family preconditions") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    RingElem f = parse_elem("1 + s*t", amb);
    RingElem p = parse_elem("2", amb);
    CHECK_THROWS_AS(more_examples_witness(z, f, p, parse_matrix("[[1,4],[1,1]]", amb),
                                          no_search()),
                    NotUnimodular);
    CHECK_THROWS_AS(more_examples_witness(z, f, p, parse_matrix("[[1,0],[0,1]]", amb),
                                          no_search()),
                    BetaZero);
    // beta not divisible by p^2
    CHECK_THROWS_AS(more_examples_witness(z, f, p, parse_matrix("[[1,2],[0,1]]", amb),
                                          no_search()),
                    CongruenceViolated);
    // alpha != delta mod p needs p with a residue of order > 2; det
    // [[13, 25], [1, 2]] = 1 and 13 - 2 = 11 is not 0 mod 5
    CHECK_THROWS_AS(more_examples_witness(z, f, parse_elem("5", amb),
                                          parse_matrix("[[13, 25], [1, 2]]", amb),
                                          no_search()),
                    CongruenceViolated);
}

TEST_CASE("witness over a congruent b' with gamma != 0") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    RingElem f = parse_elem("1 + s*t", amb);
    RingElem p = parse_elem("2", amb);
    // [[1, 8], [1, 9]]: det 1, alpha = delta mod 2, 4 | beta
    Mat2 bp = parse_matrix("[[1, 8], [1, 9]]", amb);
    WitnessCertificate cert = more_examples_witness(z, f, p, bp, no_search());
    CHECK(cert.tier == ClaimTier::TheoremBacked);
    CHECK(cert.h == cert.a * cert.b * inv_unimodular(cert.a));
    CHECK(entries_in_localized(cert.h, *cert.localized_ring));
}

TEST_CASE("asserted primality downgrades the claim tier") {
    Rs zx = parse_ring_spec("Z[x]");
    Rs amb = mainstep_ambient(zx);
    WitnessOptions opts = no_search();
    opts.assert_prime = true;
    // x^2 + 1 is prime in Z[x] but outside the supported decision classes
    WitnessCertificate cert = mainstep_witness(zx, parse_elem("1 + s*t", amb),
                                               parse_elem("x^2 + 1", amb), opts);
    CHECK(cert.tier == ClaimTier::SearchVerifiedAtBound);
    // without the assertion the construction is rejected
    WitnessOptions strict = no_search();
    CHECK_THROWS_AS(mainstep_witness(zx, parse_elem("1 + s*t", amb),
                                     parse_elem("x^2 + 1", amb), strict),
                    NotPrime);
}

TEST_CASE("verification recomputes the checks") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    WitnessCertificate cert =
        mainstep_witness(z, parse_elem("1 + s*t", amb), parse_elem("2", amb), no_search());
    VerifyReport rep = verify_certificate(cert);
    CHECK(rep.ok);
    CHECK(rep.tier == ClaimTier::TheoremBacked);

    // tampering with h breaks the product and determinant checks
    WitnessCertificate bad = cert;
    bad.h.a12 = bad.h.a12 + elem_one(amb);
    VerifyReport rep2 = verify_certificate(bad);
    CHECK(!rep2.ok);
    bool det_failed = false;
    for (const auto& c : rep2.checks)
        if ((c.name == "det_h_one" || c.name == "h_equals_a_b_ainv") && !c.pass)
            det_failed = true;
    CHECK(det_failed);

    // depth-0 search leaves a theorem-backed tier untouched
    CHECK(cert.search.depth == 0);
    CHECK(cert.tier == ClaimTier::TheoremBacked);
}

TEST_CASE("serialized certificates verify after reloading") {
    Rs zx = parse_ring_spec("Z[x]");
    WitnessCertificate lau = laurent_witness(zx, parse_elem("2", zx),
                                             parse_elem("x", zx), no_search());
    WitnessCertificate lau2 = load_certificate(emit_certificate(lau));
    CHECK(cert_equal(lau, lau2));
    CHECK(verify_certificate(lau2).ok);

    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    WitnessCertificate more = more_examples_witness(
        z, parse_elem("1 + s*t", amb), parse_elem("2", amb),
        parse_matrix("[[1, 8], [1, 9]]", amb), no_search());
    WitnessCertificate more2 = load_certificate(emit_certificate(more));
    CHECK(cert_equal(more, more2));
    CHECK(verify_certificate(more2).ok);
}

TEST_CASE("witness matrices stay where they claim") {
    Rs z = ring_z();
    Rs amb = mainstep_ambient(z);
    Rng rng(73);
    for (int i = 0; i < 20; ++i) {
        long long c1 = rnd_range(rng, -3, 3);
        long long c0 = rnd_range(rng, 1, 4);
        std::string f = std::to_string(c0) + " + " + std::to_string(c1) + "*s*t + t^2";
        long long p = std::vector<long long>{2, 3, 5, 7}[static_cast<size_t>(
            rnd_range(rng, 0, 3))];
        WitnessCertificate cert;
        try {
            cert = mainstep_witness(z, parse_elem(f, amb),
                                    elem_int(amb, p), no_search());
        } catch (const PDividesF0&) {
            continue;
        }
        CHECK(cert.h == cert.a * cert.b * inv_unimodular(cert.a));
        CHECK(is_unimodular(cert.h));
        CHECK(entries_in_localized(cert.h, *cert.localized_ring));
        CHECK(classify_side(cert.b, make_valuation(amb, cert.pi)).cls ==
              SideClass::InBOnly);
    }
}

TEST_SUITE_END();
