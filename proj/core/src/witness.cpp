#include "sl2a/witness.hpp"

#include "sl2a/text.hpp"

#include <algorithm>

namespace sl2a {

namespace {

Rs extend_vars(const Rs& base, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = base->vars;
    for (const auto& v : extra) {
        if (var_index(*base, v) >= 0)
            throw UnsupportedRing("base ring already uses variable '" + v + "'");
        vars.push_back(v);
    }
    return make_ring(base->base, base->prime_q, vars);
}

// transport an element of `from` into the larger spec `to` (same base,
// to.vars extends from.vars)
RingElem widen(const RingElem& e, const Rs& to) {
    auto lift_poly = [&](const Poly& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms) {
            Term u;
            u.coeff = t.coeff;
            u.mono = t.mono;
            u.mono.resize(to->vars.size(), 0);
            terms.push_back(std::move(u));
        }
        return poly_from_terms(*to, std::move(terms));
    };
    return make_elem(to, lift_poly(e.num), lift_poly(e.den));
}

// entries use only nonpositive powers of t and no inverse of anything else
bool entry_in_s_tinv(const RingElem& e, const Rs& ambient, int t_var) {
    if (e.is_zero()) return true;
    // strip t from the denominator, then require den | num and that the
    // Laurent expansion has no positive t power
    const RingSpec& rs = *ambient;
    Poly num = e.num, den = e.den;
    Valuation vt{ambient, poly_var(rs, t_var), t_var};
    long long a = *valuation(num, vt);
    long long b = *valuation(den, vt);
    Poly tp = poly_var(rs, t_var);
    num = *poly_exact_div(rs, num, poly_pow(rs, tp, static_cast<unsigned>(a)));
    den = *poly_exact_div(rs, den, poly_pow(rs, tp, static_cast<unsigned>(b)));
    auto r = poly_exact_div(rs, num, den);
    if (!r) return false;
    // value = t^(a-b) * r with t not dividing r
    return a - b + poly_degree_in(*r, t_var) <= 0;
}

bool matrix_in_s_tinv(const Mat2& m, const Rs& ambient, int t_var) {
    return entry_in_s_tinv(m.a11, ambient, t_var) && entry_in_s_tinv(m.a12, ambient, t_var) &&
           entry_in_s_tinv(m.a21, ambient, t_var) && entry_in_s_tinv(m.a22, ambient, t_var);
}

enum class PrimeStatus { Verified, Asserted, False };

PrimeStatus prime_status(const RingElem& p, const Rs& base, bool allow_assert) {
    try {
        return is_prime(p, base) ? PrimeStatus::Verified : PrimeStatus::False;
    } catch (const Unsupported&) {
        if (allow_assert) return PrimeStatus::Asserted;
        throw NotPrime("primality of p is undecided here; pass assert_prime to accept it");
    }
}

void push(std::vector<CheckResult>& cs, std::string name, bool pass, std::string detail = "") {
    cs.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

ClaimTier tier_from_checks(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs) {
        if (!c.pass) return ClaimTier::SearchVerifiedAtBound;
        if (c.detail.find("asserted") != std::string::npos)
            return ClaimTier::SearchVerifiedAtBound;
    }
    return ClaimTier::TheoremBacked;
}

// checks shared by generation and verification; everything is recomputed
// from the certificate fields
std::vector<CheckResult> run_checks(const WitnessCertificate& cert, bool allow_assert) {
    std::vector<CheckResult> cs;
    const Rs& amb = cert.ambient_ring;
    Valuation vt = make_valuation(amb, cert.pi);
    int t_var = vt.pi_var;
    if (t_var < 0) throw Malformed("pi must be a variable of the ambient ring");

    push(cs, "h_equals_a_b_ainv", cert.h == cert.a * cert.b * inv_unimodular(cert.a));
    push(cs, "det_h_one", is_unimodular(cert.h));
    push(cs, "a_in_valuation_ring", [&] {
        SidePattern sp = classify_side(cert.a, vt);
        return sp.cls == SideClass::InAOnly || sp.cls == SideClass::InU;
    }());
    push(cs, "b_in_b_only", classify_side(cert.b, vt).cls == SideClass::InBOnly);
    push(cs, "h_in_sl2_localized", entries_in_localized(cert.h, *cert.localized_ring));

    if (cert.kind == WitnessKind::Laurent) {
        if (!cert.x || !cert.y) throw Malformed("laurent certificate needs x, y");
        PairVerdict v = pair_principal(*cert.x, *cert.y, cert.base_ring);
        push(cs, "pair_nonprincipal", v.kind == PairVerdict::NonPrincipal, v.reason);
        push(cs, "x_unit_of_valuation_ring",
             val_ge(valuation(widen(*cert.x, amb), vt), 0) &&
                 !val_ge(valuation(widen(*cert.x, amb), vt), 1));
        push(cs, "y_unit_of_valuation_ring",
             val_ge(valuation(widen(*cert.y, amb), vt), 0) &&
                 !val_ge(valuation(widen(*cert.y, amb), vt), 1));
        return cs;
    }

    if (!cert.f || !cert.f0 || !cert.g || !cert.p)
        throw Malformed("certificate needs f, f0, g, p");
    auto fp = in_unlocalized(*cert.f);
    if (!fp) throw Malformed("f must be a polynomial");
    push(cs, "t_does_not_divide_f", val_ge(valuation(*cert.f, vt), 0) &&
                                        !val_ge(valuation(*cert.f, vt), 1));
    push(cs, "f0_nonzero", !cert.f0->is_zero());
    // f0 = f mod t
    RingElem f0_check = elem_poly(amb, poly_subst_zero(*amb, *fp, t_var));
    push(cs, "f0_matches_f", *cert.f0 == f0_check);
    // g = 1 - s*f0
    int s_var = var_index(*amb, "s");
    if (cert.kind == WitnessKind::Mainstep || cert.kind == WitnessKind::MoreExamples) {
        if (s_var < 0) throw Malformed("ambient ring lacks the variable s");
        push(cs, "g_matches_one_minus_s_f0",
             *cert.g == elem_one(amb) - elem_var(amb, s_var) * *cert.f0);
    }
    PrimeStatus ps = prime_status(*cert.p, amb, allow_assert);
    push(cs, "p_prime", ps != PrimeStatus::False,
         ps == PrimeStatus::Verified
             ? "verified"
             : (ps == PrimeStatus::Asserted ? "asserted (not machine-verified)"
                                            : "composite"));
    push(cs, "p_not_divides_f0", !divides(*cert.p, *cert.f0, amb));
    push(cs, "p_not_divides_g", !divides(*cert.p, *cert.g, amb));
    if (cert.kind == WitnessKind::Mainstep)
        push(cs, "h_entries_in_s_tinv", matrix_in_s_tinv(cert.h, amb, t_var));
    if (cert.kind == WitnessKind::MoreExamples) {
        if (!cert.b_prime) throw Malformed("more-examples certificate needs b_prime");
        const Mat2& bp = *cert.b_prime;
        push(cs, "b_prime_unimodular", is_unimodular(bp));
        push(cs, "b_prime_over_base_s", [&] {
            // entries in base[s]: polynomials with no t
            for (const RingElem* e : {&bp.a11, &bp.a12, &bp.a21, &bp.a22}) {
                auto q = in_unlocalized(*e);
                if (!q) return false;
                if (poly_degree_in(*q, t_var) > 0) return false;
            }
            return true;
        }());
        push(cs, "alpha_delta_congruent_mod_p", divides(*cert.p, bp.a11 - bp.a22, amb));
        push(cs, "p_squared_divides_beta", divides(*cert.p * *cert.p, bp.a12, amb));
        push(cs, "beta_nonzero", !bp.a12.is_zero());
    }
    return cs;
}

void run_corroboration(WitnessCertificate& cert, const WitnessOptions& opts) {
    cert.search.depth = opts.search_depth;
    cert.search.coeff_height_cap = opts.search_height;
    cert.search.degree_cap = opts.search_degree;
    if (opts.search_depth <= 0) {
        cert.search.menu_shape = "search skipped";
        return;
    }
    SearchBudget budget = default_e2_budget(cert.localized_ring, opts.search_depth,
                                            opts.search_height, opts.search_degree);
    Mat2 target{widen(cert.h.a11, cert.localized_ring), widen(cert.h.a12, cert.localized_ring),
                widen(cert.h.a21, cert.localized_ring), widen(cert.h.a22, cert.localized_ring)};
    SearchResult r = bounded_e2_search(target, cert.localized_ring, budget);
    cert.search.words_enumerated = r.stats.words_enumerated;
    cert.search.found = r.found;
    cert.search.menu_shape = r.stats.menu_shape;
    if (r.found)
        throw Error("bounded search factored a witness matrix; this contradicts the "
                    "certificate hypotheses and indicates a defect");
}

Rs localization_with(const Rs& amb, std::vector<RingElem> extra) {
    std::vector<Poly> inv;
    auto add = [&](const RingElem& e) {
        auto p = in_unlocalized(e);
        if (!p || p->is_zero()) return;
        if (poly_is_constant(*p)) {
            Int c = poly_constant_value(*p);
            if (amb->base == Base::Prime || c == 1 || c == -1) return; // unit
        }
        for (const auto& q : inv)
            if (poly_eq(q, *p)) return;
        inv.push_back(*p);
    };
    for (const auto& e : extra) add(e);
    return make_ring(amb->base, amb->prime_q, amb->vars, inv);
}

} // namespace

Rs mainstep_ambient(const Rs& base) { return extend_vars(base, {"s", "t"}); }
Rs laurent_ambient(const Rs& base) { return extend_vars(base, {"t"}); }

WitnessCertificate mainstep_witness(const Rs& base, const RingElem& f, const RingElem& p,
                                    const WitnessOptions& opts) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::Mainstep;
    cert.base_ring = base;
    Rs amb = mainstep_ambient(base);
    if (!same_coefficient_ring(*f.rs, *amb))
        throw UnsupportedRing("f must live over base[s, t]");
    int s_var = var_index(*amb, "s");
    int t_var = var_index(*amb, "t");
    cert.ambient_ring = amb;
    cert.pi = elem_var(amb, t_var);
    auto fpoly = in_unlocalized(f);
    if (!fpoly) throw UnsupportedRing("f must be a polynomial");
    Valuation vt = make_valuation(amb, cert.pi);
    if (val_ge(valuation(f, vt), 1)) throw DivisibleByT("t divides f");
    RingElem f0 = elem_poly(amb, poly_subst_zero(*amb, *fpoly, t_var));
    RingElem pw = widen(p, amb);
    PrimeStatus ps = prime_status(pw, amb, opts.assert_prime);
    if (ps == PrimeStatus::False) throw NotPrime("p is not prime in the base ring");
    if (divides(pw, f0, amb)) throw PDividesF0("p divides f0 in base[s]");
    RingElem g = elem_one(amb) - elem_var(amb, s_var) * f0;
    cert.f = f;
    cert.f0 = f0;
    cert.g = g;
    cert.p = pw;
    RingElem t = elem_var(amb, t_var);
    cert.a = elem21(g / pw);
    cert.b = elem12(pw * pw / t);
    cert.h = cert.a * cert.b * inv_unimodular(cert.a);
    cert.localized_ring =
        localization_with(amb, {elem_var(amb, s_var), t, f0, f});
    cert.checks = run_checks(cert, opts.assert_prime);
    run_corroboration(cert, opts);
    cert.tier = tier_from_checks(cert.checks);
    return cert;
}

WitnessCertificate laurent_witness(const Rs& base, const RingElem& x, const RingElem& y,
                                   const WitnessOptions& opts) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::Laurent;
    cert.base_ring = base;
    Rs amb = laurent_ambient(base);
    cert.ambient_ring = amb;
    int t_var = var_index(*amb, "t");
    cert.pi = elem_var(amb, t_var);
    PairVerdict v = pair_principal(x, y, base);
    if (v.kind == PairVerdict::Principal)
        throw PairPrincipal("the residue pair generates a principal ideal: " + v.reason);
    if (v.kind == PairVerdict::Undecided)
        throw UndecidedPair("principality of the residue pair is undecided: " + v.reason);
    cert.x = x;
    cert.y = y;
    RingElem xw = widen(x, amb), yw = widen(y, amb);
    RingElem t = elem_var(amb, t_var);
    cert.a = elem21(xw / yw);
    cert.b = elem12(yw * yw / t);
    cert.h = cert.a * cert.b * inv_unimodular(cert.a);
    cert.localized_ring = localization_with(amb, {t});
    cert.checks = run_checks(cert, opts.assert_prime);
    run_corroboration(cert, opts);
    cert.tier = tier_from_checks(cert.checks);
    return cert;
}

WitnessCertificate more_examples_witness(const Rs& base, const RingElem& f,
                                         const RingElem& p, const Mat2& b_prime,
                                         const WitnessOptions& opts) {
    WitnessCertificate cert;
    cert.kind = WitnessKind::MoreExamples;
    cert.base_ring = base;
    Rs amb = mainstep_ambient(base);
    if (!same_coefficient_ring(*f.rs, *amb))
        throw UnsupportedRing("f must live over base[s, t]");
    int s_var = var_index(*amb, "s");
    int t_var = var_index(*amb, "t");
    cert.ambient_ring = amb;
    cert.pi = elem_var(amb, t_var);
    auto fpoly = in_unlocalized(f);
    if (!fpoly) throw UnsupportedRing("f must be a polynomial");
    Valuation vt = make_valuation(amb, cert.pi);
    if (val_ge(valuation(f, vt), 1)) throw DivisibleByT("t divides f");
    RingElem f0 = elem_poly(amb, poly_subst_zero(*amb, *fpoly, t_var));
    RingElem pw = widen(p, amb);
    PrimeStatus ps = prime_status(pw, amb, opts.assert_prime);
    if (ps == PrimeStatus::False) throw NotPrime("p is not prime in the base ring");
    if (divides(pw, f0, amb)) throw PDividesF0("p divides f0 in base[s]");
    if (!is_unimodular(b_prime)) throw NotUnimodular("b' must have det = 1");
    if (b_prime.a12.is_zero()) throw BetaZero("beta must be nonzero");
    if (!divides(pw, b_prime.a11 - b_prime.a22, amb))
        throw CongruenceViolated("alpha and delta must agree mod p");
    if (!divides(pw * pw, b_prime.a12, amb))
        throw CongruenceViolated("p^2 must divide beta");
    RingElem g = elem_one(amb) - elem_var(amb, s_var) * f0;
    cert.f = f;
    cert.f0 = f0;
    cert.g = g;
    cert.p = pw;
    cert.b_prime = b_prime;
    RingElem t = elem_var(amb, t_var);
    cert.a = elem21(g / pw);
    cert.b = mat(b_prime.a11, b_prime.a12 / t, b_prime.a21 * t, b_prime.a22);
    cert.h = cert.a * cert.b * inv_unimodular(cert.a);
    cert.localized_ring = localization_with(amb, {elem_var(amb, s_var), t, f0, f});
    cert.checks = run_checks(cert, opts.assert_prime);
    run_corroboration(cert, opts);
    cert.tier = tier_from_checks(cert.checks);
    return cert;
}

VerifyReport verify_certificate(const WitnessCertificate& cert, bool rerun_search) {
    VerifyReport rep;
    rep.checks = run_checks(cert, true);
    if (rerun_search && cert.search.depth > 0) {
        SearchBudget budget =
            default_e2_budget(cert.localized_ring, cert.search.depth,
                              cert.search.coeff_height_cap, cert.search.degree_cap);
        Mat2 target{widen(cert.h.a11, cert.localized_ring),
                    widen(cert.h.a12, cert.localized_ring),
                    widen(cert.h.a21, cert.localized_ring),
                    widen(cert.h.a22, cert.localized_ring)};
        SearchResult r = bounded_e2_search(target, cert.localized_ring, budget);
        rep.checks.push_back(CheckResult{"search_not_found_at_bound", !r.found,
                                         r.stats.verdict + " after " +
                                             r.stats.words_enumerated.str() + " products"});
    }
    rep.tier = tier_from_checks(rep.checks);
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.pass; });
    return rep;
}

bool cert_equal(const WitnessCertificate& a, const WitnessCertificate& b) {
    auto opt_eq = [](const std::optional<RingElem>& x, const std::optional<RingElem>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || *x == *y;
    };
    if (a.kind != b.kind || a.tier != b.tier) return false;
    if (format_ring_spec(*a.base_ring) != format_ring_spec(*b.base_ring)) return false;
    if (format_ring_spec(*a.ambient_ring) != format_ring_spec(*b.ambient_ring)) return false;
    if (format_ring_spec(*a.localized_ring) != format_ring_spec(*b.localized_ring))
        return false;
    if (a.pi != b.pi) return false;
    if (!opt_eq(a.f, b.f) || !opt_eq(a.f0, b.f0) || !opt_eq(a.g, b.g) || !opt_eq(a.p, b.p) ||
        !opt_eq(a.x, b.x) || !opt_eq(a.y, b.y))
        return false;
    if (a.b_prime.has_value() != b.b_prime.has_value()) return false;
    if (a.b_prime && *a.b_prime != *b.b_prime) return false;
    if (a.a != b.a || a.b != b.b || a.h != b.h) return false;
    if (a.assumption_a != b.assumption_a) return false;
    if (a.checks.size() != b.checks.size()) return false;
    for (size_t i = 0; i < a.checks.size(); ++i) {
        if (a.checks[i].name != b.checks[i].name || a.checks[i].pass != b.checks[i].pass ||
            a.checks[i].detail != b.checks[i].detail)
            return false;
    }
    return a.search.depth == b.search.depth &&
           a.search.coeff_height_cap == b.search.coeff_height_cap &&
           a.search.degree_cap == b.search.degree_cap &&
           a.search.words_enumerated == b.search.words_enumerated &&
           a.search.found == b.search.found && a.search.menu_shape == b.search.menu_shape;
}

std::string witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::Mainstep: return "mainstep";
    case WitnessKind::Laurent: return "laurent";
    case WitnessKind::MoreExamples: return "more-examples";
    }
    return "?";
}

std::string claim_tier_name(ClaimTier t) {
    return t == ClaimTier::TheoremBacked ? "TheoremBacked" : "SearchVerifiedAtBound";
}

} // namespace sl2a
