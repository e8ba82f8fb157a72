#include "sl2a/amalgam.hpp"

#include <cassert>

namespace sl2a {

SidePattern classify_side(const Mat2& g, const Valuation& v) {
    if (!is_unimodular(g)) throw NotUnimodular("side classification requires det = 1");
    SidePattern p;
    p.v11 = valuation(g.a11, v);
    p.v12 = valuation(g.a12, v);
    p.v21 = valuation(g.a21, v);
    p.v22 = valuation(g.a22, v);
    bool in_a = val_ge(p.v11, 0) && val_ge(p.v12, 0) && val_ge(p.v21, 0) && val_ge(p.v22, 0);
    bool in_b = val_ge(p.v11, 0) && val_ge(p.v12, -1) && val_ge(p.v21, 1) && val_ge(p.v22, 0);
    if (in_a && in_b)
        p.cls = SideClass::InU;
    else if (in_a)
        p.cls = SideClass::InAOnly;
    else if (in_b)
        p.cls = SideClass::InBOnly;
    else
        p.cls = SideClass::Neither;
    return p;
}

AmalgamContext make_amalgam_context(const Rs& ring, const RingElem& pi) {
    AmalgamContext ctx;
    ctx.ring = unlocalized(ring);
    ctx.val = make_valuation(ctx.ring, pi);
    const RingSpec& rs = *ctx.ring;
    const Poly& p = ctx.val.pi;
    if (poly_is_constant(p) && rs.base == Base::Integers && rs.vars.empty()) {
        ctx.quot = AmalgamContext::Quot::FieldInt;
        ctx.p = poly_constant_value(p);
        if (ctx.p < 0) ctx.p = -ctx.p;
        return ctx;
    }
    if (ctx.val.pi_var >= 0) {
        // R = R0[t], pi = t: residue ring is R0
        ctx.t_var = ctx.val.pi_var;
        std::vector<std::string> vars;
        for (size_t i = 0; i < rs.vars.size(); ++i)
            if (static_cast<int>(i) != ctx.t_var) vars.push_back(rs.vars[i]);
        ctx.quotient = make_ring(rs.base, rs.prime_q, vars);
        if (vars.empty()) {
            ctx.quot = rs.base == Base::Integers ? AmalgamContext::Quot::EuclInt
                                                 : AmalgamContext::Quot::FieldConst;
        } else if (rs.base == Base::Prime && vars.size() == 1) {
            ctx.quot = AmalgamContext::Quot::EuclFqUni;
            ctx.u_var = 0;
        } else {
            ctx.quot = AmalgamContext::Quot::Pair;
        }
        return ctx;
    }
    if (rs.base == Base::Prime && rs.vars.size() == 1 && !poly_is_constant(p)) {
        // R = F_q[u], pi irreducible: residue field F_q[u]/(pi)
        ctx.quot = AmalgamContext::Quot::FieldPolyMod;
        ctx.u_var = 0;
        return ctx;
    }
    ctx.quot = AmalgamContext::Quot::None;
    return ctx;
}

Mat2 diag_pi(const AmalgamContext& ctx, bool inverse_first) {
    RingElem pi = elem_poly(ctx.ring, ctx.val.pi);
    RingElem one = elem_one(ctx.ring);
    return inverse_first ? diag(elem_inv(pi), one) : diag(pi, one);
}

namespace {

// strip pi powers so the denominator is coprime to pi; valid for v(e) >= 0
Poly integral_then_clear(const RingElem& e, const AmalgamContext& ctx, Poly& den_out) {
    const RingSpec& rs = *ctx.ring;
    long long a = e.num.is_zero() ? 0 : *valuation(e.num, ctx.val);
    long long b = *valuation(e.den, ctx.val);
    Poly num = e.num, den = e.den;
    if (b > 0) {
        den = *poly_exact_div(rs, den, poly_pow(rs, ctx.val.pi, static_cast<unsigned>(b)));
        if (!num.is_zero()) {
            assert(a >= b);
            num = poly_mul(rs, *poly_exact_div(rs, num,
                                               poly_pow(rs, ctx.val.pi, static_cast<unsigned>(a))),
                           poly_pow(rs, ctx.val.pi, static_cast<unsigned>(a - b)));
        }
    }
    den_out = den;
    return num;
}

// p := z*alpha, q := z*beta as ring elements, z in R coprime to pi
void clear_denominators(const RingElem& alpha, const RingElem& beta,
                        const AmalgamContext& ctx, Poly& p, Poly& q) {
    const RingSpec& rs = *ctx.ring;
    Poly d1, d2;
    Poly n1 = integral_then_clear(alpha, ctx, d1);
    Poly n2 = integral_then_clear(beta, ctx, d2);
    p = poly_mul(rs, n1, d2);
    q = poly_mul(rs, n2, d1);
}

// residue-field data: reduce, test zero, w = lift(-qbar/pbar)
struct FieldOps {
    const AmalgamContext& ctx;

    Poly reduce(const Poly& x) const {
        const RingSpec& rs = *ctx.ring;
        switch (ctx.quot) {
        case AmalgamContext::Quot::FieldInt: {
            Poly r = x;
            if (r.is_zero()) return r;
            Int c = poly_constant_value(r) % ctx.p;
            if (c < 0) c += ctx.p;
            return poly_int(rs, c);
        }
        case AmalgamContext::Quot::FieldConst:
            return poly_subst_zero(rs, x, ctx.t_var);
        case AmalgamContext::Quot::FieldPolyMod:
            return poly_divmod_uni(rs, x, ctx.val.pi, ctx.u_var).rem;
        default:
            break;
        }
        throw UnsupportedQuotient("not a field residue ring");
    }

    // lift of -(qb / pb), pb nonzero in the residue field
    Poly neg_ratio(const Poly& qb, const Poly& pb) const {
        const RingSpec& rs = *ctx.ring;
        switch (ctx.quot) {
        case AmalgamContext::Quot::FieldInt: {
            ExtGcd g = ext_gcd(poly_constant_value(pb), Int(ctx.p));
            Int w = ((-poly_constant_value(qb)) * g.x) % ctx.p;
            if (w < 0) w += ctx.p;
            return poly_int(rs, w);
        }
        case AmalgamContext::Quot::FieldConst: {
            Int inv = coeff_inverse(rs, poly_constant_value(pb));
            return poly_int(rs, coeff_normalize(rs, -poly_constant_value(qb) * inv));
        }
        case AmalgamContext::Quot::FieldPolyMod: {
            // invert pb modulo pi by the extended Euclid in F_q[u]
            Rs base = ctx.ring;
            BezoutTriple bz = bezout_gcd(elem_poly(base, pb), elem_poly(base, ctx.val.pi), base);
            assert(poly_is_constant(bz.d.num) && poly_constant_value(bz.d.num) == 1);
            Poly inv = bz.r.num; // r*pb + s*pi = 1
            Poly w = poly_mul(rs, poly_neg(rs, qb), inv);
            return poly_divmod_uni(rs, w, ctx.val.pi, ctx.u_var).rem;
        }
        default:
            break;
        }
        throw UnsupportedQuotient("not a field residue ring");
    }
};

bool field_quotient(const AmalgamContext& ctx) {
    return ctx.quot == AmalgamContext::Quot::FieldInt ||
           ctx.quot == AmalgamContext::Quot::FieldConst ||
           ctx.quot == AmalgamContext::Quot::FieldPolyMod;
}

// residue images in R0 for the R0[t] cases, kept embedded in R
Poly t_image(const Poly& x, const AmalgamContext& ctx) {
    return poly_subst_zero(*ctx.ring, x, ctx.t_var);
}

// extended gcd in the residue ring for the Eucl/Pair cases; returns
// (d, rr, ss) with rr*pb + ss*qb = d, all embedded in R
struct QuotGcd {
    Poly d, rr, ss;
};

QuotGcd quotient_gcd(const Poly& pb, const Poly& qb, const AmalgamContext& ctx) {
    const RingSpec& rs = *ctx.ring;
    const Rs& qs = ctx.quotient;
    Poly pq = poly_drop_var(rs, pb, ctx.t_var, *qs);
    Poly qq = poly_drop_var(rs, qb, ctx.t_var, *qs);
    auto lift_back = [&](const RingElem& x) -> Poly {
        auto p = in_unlocalized(x);
        assert(p.has_value());
        // reinsert the t variable with exponent 0
        std::vector<Term> terms;
        for (const auto& t : p->terms) {
            Term u;
            u.coeff = t.coeff;
            u.mono.reserve(rs.vars.size());
            for (size_t i = 0, j = 0; i < rs.vars.size(); ++i) {
                if (static_cast<int>(i) == ctx.t_var)
                    u.mono.push_back(0);
                else
                    u.mono.push_back(t.mono[j++]);
            }
            terms.push_back(std::move(u));
        }
        return poly_from_terms(rs, std::move(terms));
    };
    if (ctx.quot == AmalgamContext::Quot::EuclInt ||
        ctx.quot == AmalgamContext::Quot::EuclFqUni) {
        BezoutTriple bz = bezout_gcd(elem_poly(qs, pq), elem_poly(qs, qq), qs);
        return {lift_back(bz.d), lift_back(bz.r), lift_back(bz.s)};
    }
    PairVerdict verdict = pair_principal(elem_poly(qs, pq), elem_poly(qs, qq), qs);
    if (verdict.kind != PairVerdict::Principal)
        throw UnsupportedQuotient(
            std::string("residue pair is ") +
            (verdict.kind == PairVerdict::NonPrincipal ? "NonPrincipal: " : "Undecided: ") +
            verdict.reason);
    return {lift_back(verdict.generator), lift_back(verdict.bez_a), lift_back(verdict.bez_b)};
}

} // namespace

Mat2 coset_reduce(const Mat2& a, const AmalgamContext& ctx) {
    SidePattern sp = classify_side(a, ctx.val);
    if (sp.cls != SideClass::InU && sp.cls != SideClass::InAOnly)
        throw NotInA("input is not in the A pattern");
    if (ctx.quot == AmalgamContext::Quot::None)
        throw UnsupportedQuotient("no constructive residue ring for this (R, pi)");
    const Rs& R = ctx.ring;
    const RingSpec& rs = *R;
    Poly p, q;
    clear_denominators(a.a11, a.a21, ctx, p, q);
    if (field_quotient(ctx)) {
        FieldOps f{ctx};
        Poly pb = f.reduce(p);
        Poly qb = f.reduce(q);
        if (!pb.is_zero()) {
            return elem21(elem_poly(R, f.neg_ratio(qb, pb)));
        }
        assert(!qb.is_zero());
        return mat(elem_zero(R), -elem_one(R), elem_one(R), elem_zero(R));
    }
    Poly pb = t_image(p, ctx);
    Poly qb = t_image(q, ctx);
    QuotGcd g = quotient_gcd(pb, qb, ctx);
    Poly lam = *poly_exact_div(rs, qb, g.d);
    Poly mu = poly_neg(rs, *poly_exact_div(rs, pb, g.d));
    // det [[-rr, -ss], [lam, mu]] = ss*lam - rr*mu = (rr*pb + ss*qb)/d = 1
    return mat(-elem_poly(R, g.rr), -elem_poly(R, g.ss), elem_poly(R, lam),
               elem_poly(R, mu));
}

Mat2 coset_reduce_b(const Mat2& b, const AmalgamContext& ctx) {
    SidePattern sp = classify_side(b, ctx.val);
    if (sp.cls != SideClass::InU && sp.cls != SideClass::InBOnly)
        throw NotInB("input is not in the B pattern");
    if (ctx.quot == AmalgamContext::Quot::None)
        throw UnsupportedQuotient("no constructive residue ring for this (R, pi)");
    const Rs& R = ctx.ring;
    const RingSpec& rs = *R;
    Mat2 dpi = diag_pi(ctx, false);
    Mat2 dpi_inv = diag_pi(ctx, true);
    Mat2 c = dpi * b * dpi_inv; // conjugate back into the A pattern
    Poly p, q;
    clear_denominators(c.a12, c.a22, ctx, p, q); // second column: aim at (1,2)
    Mat2 h0 = mat_identity(R);
    if (field_quotient(ctx)) {
        FieldOps f{ctx};
        Poly pb = f.reduce(p);
        Poly qb = f.reduce(q);
        if (!pb.is_zero()) {
            // top row (l, -1) with l = qbar/pbar
            Poly l = f.neg_ratio(poly_neg(rs, qb), pb);
            h0 = mat(elem_poly(R, l), -elem_one(R), elem_one(R), elem_zero(R));
        }
        // pb = 0: top row (1, 0) already kills the entry, keep h0 = I
    } else {
        Poly pb = t_image(p, ctx);
        Poly qb = t_image(q, ctx);
        QuotGcd g = quotient_gcd(pb, qb, ctx);
        Poly lam = *poly_exact_div(rs, qb, g.d);
        Poly mu = poly_neg(rs, *poly_exact_div(rs, pb, g.d));
        // det [[lam, mu], [rr, ss]] = lam*ss - mu*rr = 1
        h0 = mat(elem_poly(R, lam), elem_poly(R, mu), elem_poly(R, g.rr),
                 elem_poly(R, g.ss));
    }
    return dpi_inv * h0 * dpi;
}

Mat2 word_product(const AmalgamWord& w, const Rs& rs) {
    Mat2 acc = mat_identity(rs);
    for (const auto& [side, m] : w.factors) {
        (void)side;
        acc = acc * m;
    }
    return acc * w.trailing;
}

bool in_sl2_ring(const Mat2& m, const AmalgamContext& ctx) {
    return is_unimodular(m) && entries_in_ring(m, ctx.ring);
}

bool in_b_conjugate(const Mat2& m, const AmalgamContext& ctx) {
    Mat2 back = diag_pi(ctx, false) * m * diag_pi(ctx, true);
    return in_sl2_ring(back, ctx);
}

bool in_u_cap_h(const Mat2& m, const AmalgamContext& ctx) {
    if (!in_sl2_ring(m, ctx)) return false;
    return val_ge(valuation(m.a21, ctx.val), 1);
}

AmalgamWord amalgam_reduce(const Mat2& h, const AmalgamContext& ctx) {
    if (!is_unimodular(h)) throw NotUnimodular("amalgam_reduce requires det = 1");
    {
        RingSpec loc = *ctx.ring;
        loc.inverted = {ctx.val.pi};
        if (!entries_in_localized(h, loc))
            throw UnsupportedRing("entries must lie in R[1/pi]");
    }
    const Valuation& v = ctx.val;
    TreeEdge e = base_edge(v);
    const TreeVertex x0 = e.a;
    const TreeVertex y0 = e.b;
    Mat2 current = h;
    std::vector<std::pair<Side, Mat2>> factors;
    long long prev_span = -1;
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw ReductionStuck("no progress");
        TreeVertex ex = act(current, x0, v);
        TreeVertex ey = act(current, y0, v);
        if (vertex_eq(ex, x0, v) && vertex_eq(ey, y0, v)) break;
        if (vertex_eq(ex, y0, v) && vertex_eq(ey, x0, v))
            throw ReductionStuck("edge inversion");
        long long dxx = distance(x0, ex, v), dxy = distance(x0, ey, v);
        long long dyx = distance(y0, ex, v), dyy = distance(y0, ey, v);
        long long dx = std::min(dxx, dxy);
        long long dy = std::min(dyx, dyy);
        long long span = std::max(std::max(dxx, dxy), std::max(dyx, dyy));
        if (prev_span >= 0 && span >= prev_span) throw ReductionStuck("distance did not drop");
        prev_span = span;
        if (dx <= dy) {
            // fold at x0: z2 = first step towards the far endpoint of h.e
            const TreeVertex& far = dxx >= dxy ? ex : ey;
            auto path = geodesic(x0, far, v);
            assert(path.size() >= 2);
            TreeVertex z2 = path[1];
            Mat2 g = mat_identity(ctx.ring);
            if (z2.n == -1) {
                g = mat(elem_zero(ctx.ring), -elem_one(ctx.ring), elem_one(ctx.ring),
                        elem_zero(ctx.ring));
            } else {
                assert(z2.n == 1);
                g = elem21(z2.u); // maps (1, 0) to (1, u2), fixes x0
            }
            Mat2 f = coset_reduce(g, ctx);
            current = f * current;
            factors.emplace_back(Side::A, inv_unimodular(f));
        } else {
            const TreeVertex& far = dyx >= dyy ? ex : ey;
            auto path = geodesic(y0, far, v);
            assert(path.size() >= 2);
            TreeVertex z2 = path[1];
            assert(z2.n == 2);
            // g in B maps x0 to (2, u2): D(1/pi,1) E21(u2/pi) J D(pi,1)
            RingElem pi = elem_poly(ctx.ring, v.pi);
            RingElem w = z2.u / pi;
            Mat2 g = mat(elem_zero(ctx.ring), -elem_inv(pi), pi, -w);
            Mat2 f = coset_reduce_b(g, ctx);
            current = f * current;
            factors.emplace_back(Side::B, inv_unimodular(f));
        }
    }
    // fold unit factors into their successors and merge equal sides
    Mat2 trailing = current;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (in_u_cap_h(factors[i].second, ctx)) {
                if (i + 1 < factors.size()) {
                    factors[i + 1].second = factors[i].second * factors[i + 1].second;
                } else {
                    trailing = factors[i].second * trailing;
                }
                factors.erase(factors.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if (i + 1 < factors.size() && factors[i].first == factors[i + 1].first) {
                factors[i].second = factors[i].second * factors[i + 1].second;
                factors.erase(factors.begin() + static_cast<long>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    AmalgamWord word{std::move(factors), trailing};
    if (word_product(word, h.rs()) != h) throw ReductionStuck("product mismatch");
    return word;
}

bool is_normal_form(const AmalgamWord& w, const AmalgamContext& ctx) {
    for (size_t i = 0; i < w.factors.size(); ++i) {
        if (i > 0 && w.factors[i].first == w.factors[i - 1].first) return false;
        if (in_u_cap_h(w.factors[i].second, ctx)) return false;
    }
    return in_u_cap_h(w.trailing, ctx);
}

} // namespace sl2a
