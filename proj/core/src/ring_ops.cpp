#include "sl2a/ring_ops.hpp"

#include <algorithm>
#include <cassert>

namespace sl2a {

namespace {

// pi = unit * x_i ?
int unit_variable_index(const RingSpec& rs, const Poly& p) {
    if (p.terms.size() != 1) return -1;
    const Term& t = p.terms.front();
    int var = -1;
    for (size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 1 && var < 0)
            var = static_cast<int>(i);
        else if (t.mono[i] != 0)
            return -1;
    }
    if (var < 0) return -1;
    if (rs.base == Base::Integers && t.coeff != 1 && t.coeff != -1) return -1;
    return var;
}

Poly require_in_ring(const RingElem& e, const char* what) {
    auto p = in_unlocalized(e);
    if (!p) throw UnsupportedRing(std::string(what) + " must lie in the un-localized ring");
    return *p;
}

long long count_divisions(const RingSpec& rs, Poly p, const Poly& pi) {
    long long n = 0;
    while (true) {
        auto q = poly_exact_div(rs, p, pi);
        if (!q) return n;
        p = std::move(*q);
        ++n;
    }
}

} // namespace

Valuation make_valuation(const Rs& rs, const RingElem& pi, bool assume_prime) {
    Valuation v;
    v.rs = rs;
    v.pi = require_in_ring(pi, "pi");
    if (v.pi.is_zero()) throw NotPrime("pi must be nonzero");
    if (!assume_prime && !is_prime_poly(v.pi, *unlocalized(rs)))
        throw NotPrime("pi is not prime in the un-localized ring");
    v.pi_var = unit_variable_index(*rs, v.pi);
    return v;
}

ValExt valuation(const Poly& p, const Valuation& v) {
    if (p.is_zero()) return std::nullopt;
    if (v.pi_var >= 0) {
        long long m = p.terms.front().mono[v.pi_var];
        for (const auto& t : p.terms)
            m = std::min<long long>(m, t.mono[v.pi_var]);
        return m;
    }
    return count_divisions(*v.rs, p, v.pi);
}

ValExt valuation(const RingElem& e, const Valuation& v) {
    if (e.is_zero()) return std::nullopt;
    return *valuation(e.num, v) - *valuation(e.den, v);
}

bool is_prime_poly(const Poly& p, const RingSpec& rs) {
    if (p.is_zero()) return false;
    if (poly_is_constant(p)) {
        if (rs.base == Base::Prime) return false; // nonzero constants are units
        return is_prime_integer(poly_constant_value(p));
    }
    if (unit_variable_index(rs, p) >= 0) return true;
    if (rs.base == Base::Prime) {
        auto used = poly_vars_used(p);
        if (used.size() == 1) {
            int var = used.front();
            int d = poly_degree_in(p, var);
            // irreducibility by trial division over F_q
            long long q = rs.prime_q;
            double budget = 1;
            for (int i = 0; i < d / 2; ++i) budget *= static_cast<double>(q);
            if (budget > 2e6)
                throw Unsupported("trial factorization budget exceeded");
            // enumerate monic divisor candidates of degree 1..d/2
            for (int deg = 1; deg <= d / 2; ++deg) {
                std::vector<long long> c(deg, 0);
                while (true) {
                    std::vector<Term> terms;
                    Mono lead(rs.vars.size(), 0);
                    lead[var] = deg;
                    terms.push_back(Term{lead, Int(1)});
                    for (int i = 0; i < deg; ++i) {
                        if (c[i] != 0) {
                            Mono m(rs.vars.size(), 0);
                            m[var] = i;
                            terms.push_back(Term{m, Int(c[i])});
                        }
                    }
                    Poly cand = poly_from_terms(rs, std::move(terms));
                    if (poly_divmod_uni(rs, p, cand, var).rem.is_zero()) return false;
                    int i = 0;
                    while (i < deg && ++c[i] == q) c[i++] = 0;
                    if (i == deg) break;
                }
            }
            return d >= 1;
        }
    }
    throw Unsupported("primality undecided for this shape");
}

bool is_prime(const RingElem& p, const Rs& rs) {
    return is_prime_poly(require_in_ring(p, "p"), *unlocalized(rs));
}

Rs quotient_spec(const Valuation& v) {
    const RingSpec& rs = *v.rs;
    if (v.pi_var >= 0) {
        std::vector<std::string> vars;
        for (size_t i = 0; i < rs.vars.size(); ++i)
            if (static_cast<int>(i) != v.pi_var) vars.push_back(rs.vars[i]);
        return make_ring(rs.base, rs.prime_q, std::move(vars));
    }
    if (poly_is_constant(v.pi)) {
        Int p = poly_constant_value(v.pi);
        if (p < 0) p = -p;
        return make_ring(Base::Prime, static_cast<long long>(p), rs.vars);
    }
    // univariate pi over F_q: only the linear case has a residue ring we can
    // name (substitute the root); higher degree needs F_{q^d}
    auto used = poly_vars_used(v.pi);
    if (rs.base == Base::Prime && used.size() == 1 &&
        poly_degree_in(v.pi, used.front()) == 1) {
        std::vector<std::string> vars;
        for (size_t i = 0; i < rs.vars.size(); ++i)
            if (static_cast<int>(i) != used.front()) vars.push_back(rs.vars[i]);
        return make_ring(rs.base, rs.prime_q, std::move(vars));
    }
    throw UnsupportedRing("no representable residue ring for this pi");
}

RingElem reduce_mod_pi(const RingElem& e, const Valuation& v) {
    Rs qs = quotient_spec(v);
    if (e.is_zero()) return elem_zero(qs);
    ValExt ve = valuation(e, v);
    if (!val_ge(ve, 0)) throw NotIntegral("negative valuation");
    const RingSpec& rs = *v.rs;
    long long a = *valuation(e.num, v);
    long long b = *valuation(e.den, v);
    Poly num = e.num, den = e.den;
    Poly pik = poly_pow(rs, v.pi, static_cast<unsigned>(a));
    num = *poly_exact_div(rs, num, pik);
    pik = poly_pow(rs, v.pi, static_cast<unsigned>(b));
    den = *poly_exact_div(rs, den, pik);
    if (a > b) return elem_zero(qs);

    auto project = [&](const Poly& p) -> Poly {
        if (v.pi_var >= 0) {
            Poly s = poly_subst_zero(rs, p, v.pi_var);
            return poly_drop_var(rs, s, v.pi_var, *qs);
        }
        if (poly_is_constant(v.pi)) return poly_mod_prime(*qs, p);
        // linear univariate pi c1*u + c0 over F_q: substitute u := -c0/c1
        int var = poly_vars_used(v.pi).front();
        Poly c1 = poly_coeff_of(rs, v.pi, var, 1);
        Poly c0 = poly_coeff_of(rs, v.pi, var, 0);
        Int root = coeff_normalize(rs, -poly_constant_value(c0) *
                                           coeff_inverse(rs, poly_constant_value(c1)));
        Poly s = poly_subst_const(rs, p, var, root);
        return poly_drop_var(rs, s, var, *qs);
    };
    Poly qn = project(num);
    Poly qd = project(den);
    assert(!qd.is_zero());
    return make_elem(qs, std::move(qn), std::move(qd));
}

bool divides(const RingElem& a, const RingElem& b, const Rs& rs) {
    Poly pa = require_in_ring(a, "a");
    Poly pb = require_in_ring(b, "b");
    const RingSpec& spec = *unlocalized(rs);
    if (pa.is_zero()) return pb.is_zero();
    return poly_exact_div(spec, pb, pa).has_value();
}

BezoutTriple bezout_gcd(const RingElem& u, const RingElem& v, const Rs& rs) {
    Poly pu = require_in_ring(u, "u");
    Poly pv = require_in_ring(v, "v");
    const Rs base = unlocalized(rs);
    const RingSpec& spec = *base;
    if (spec.base == Base::Integers) {
        if (!poly_is_constant(pu) || !poly_is_constant(pv))
            throw UnsupportedRing("extended gcd needs a Euclidean base");
        ExtGcd g = ext_gcd(poly_constant_value(pu), poly_constant_value(pv));
        return {elem_int(base, g.d), elem_int(base, g.x), elem_int(base, g.y)};
    }
    // F_q[u]: univariate extended Euclid, gcd normalized monic
    std::vector<int> used = poly_vars_used(pu);
    for (int w : poly_vars_used(pv))
        if (std::find(used.begin(), used.end(), w) == used.end()) used.push_back(w);
    if (used.size() > 1) throw UnsupportedRing("extended gcd needs univariate operands");
    int var = used.empty() ? -1 : used.front();
    Poly r0 = pu, r1 = pv;
    Poly s0 = poly_one(spec), s1 = poly_zero();
    Poly t0 = poly_zero(), t1 = poly_one(spec);
    while (!r1.is_zero()) {
        PolyDivMod dm = var < 0 ? PolyDivMod{poly_mul_int(spec, r0, coeff_inverse(spec, poly_lead_coeff(r1))), Poly{}}
                                : poly_divmod_uni(spec, r0, r1, var);
        Poly r2 = dm.rem;
        Poly s2 = poly_sub(spec, s0, poly_mul(spec, dm.quot, s1));
        Poly t2 = poly_sub(spec, t0, poly_mul(spec, dm.quot, t1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        Int inv = coeff_inverse(spec, poly_lead_coeff(r0));
        r0 = poly_mul_int(spec, r0, inv);
        s0 = poly_mul_int(spec, s0, inv);
        t0 = poly_mul_int(spec, t0, inv);
    }
    return {elem_poly(base, r0), elem_poly(base, s0), elem_poly(base, t0)};
}

PairVerdict pair_principal(const RingElem& x, const RingElem& y, const Rs& quotient) {
    const Rs base = unlocalized(quotient);
    const RingSpec& spec = *base;
    Poly px = require_in_ring(x, "x");
    Poly py = require_in_ring(y, "y");
    auto principal = [&](RingElem g, RingElem a, RingElem b, std::string why) {
        return PairVerdict{PairVerdict::Principal, std::move(g), std::move(a), std::move(b),
                           std::move(why)};
    };
    if (px.is_zero() && py.is_zero())
        return principal(elem_zero(base), elem_zero(base), elem_zero(base), "zero ideal");
    // field: any nonzero element generates
    if (spec.vars.empty() && spec.base == Base::Prime) {
        if (!px.is_zero())
            return principal(elem_poly(base, px), elem_one(base), elem_zero(base), "field");
        return principal(elem_poly(base, py), elem_zero(base), elem_one(base), "field");
    }
    // Euclidean shapes
    bool euclid = (spec.base == Base::Integers && spec.vars.empty()) ||
                  (spec.base == Base::Prime && spec.vars.size() == 1);
    if (euclid) {
        BezoutTriple bz = bezout_gcd(elem_poly(base, px), elem_poly(base, py), base);
        return principal(bz.d, bz.r, bz.s, "euclidean gcd");
    }
    if (spec.base == Base::Integers && spec.vars.size() == 1) {
        // Z[u]: decide the pair (prime integer c, q)
        Poly c = px, q = py;
        bool swapped = false;
        if (!poly_is_constant(c)) {
            std::swap(c, q);
            swapped = true;
        }
        if (poly_is_constant(c) && poly_is_constant(q)) {
            ExtGcd g = ext_gcd(poly_constant_value(c), poly_constant_value(q));
            RingElem a = elem_int(base, swapped ? g.y : g.x);
            RingElem b = elem_int(base, swapped ? g.x : g.y);
            return principal(elem_int(base, g.d), a, b, "integer gcd");
        }
        if (poly_is_constant(c) && is_prime_integer(poly_constant_value(c))) {
            Int cval = poly_constant_value(c);
            Int cv = cval < 0 ? Int(-cval) : cval;
            // c divides every coefficient of q?
            if (poly_content(q) % cv == 0) {
                RingElem a = elem_int(base, cval < 0 ? -1 : 1);
                RingElem b = elem_zero(base);
                if (swapped) std::swap(a, b);
                return principal(elem_int(base, cv), a, b,
                                 "prime divides all coefficients");
            }
            // q mod c: nonzero constant residue makes the pair the unit ideal
            Rs fp = make_ring(Base::Prime, static_cast<long long>(cv), spec.vars);
            Poly qbar = poly_mod_prime(*fp, q);
            if (poly_is_constant(qbar) && !qbar.is_zero()) {
                Int q0 = 0; // constant term of q
                for (const auto& t : q.terms) {
                    bool constant = true;
                    for (auto e : t.mono) constant = constant && e == 0;
                    if (constant) q0 = t.coeff;
                }
                Int r0 = q0 % cv;
                ExtGcd g = ext_gcd(cval, r0);
                // 1 = g.x*c + g.y*r0 and r0 = q - c*k
                Poly k = poly_div_int(spec, poly_sub(spec, q, poly_int(spec, r0)), cval);
                Poly A = poly_sub(spec, poly_int(spec, g.x), poly_mul_int(spec, k, g.y));
                RingElem ea = elem_poly(base, A), eb = elem_int(base, g.y);
                if (swapped) std::swap(ea, eb);
                return principal(elem_int(base, g.d), ea, eb, "unit residue mod prime");
            }
            return PairVerdict{PairVerdict::NonPrincipal, elem_zero(base), elem_zero(base),
                               elem_zero(base),
                               "any generator divides the prime c, hence is a unit or c; "
                               "neither generates since q mod c is neither 0 nor a unit"};
        }
    }
    return PairVerdict{PairVerdict::Undecided, elem_zero(base), elem_zero(base),
                       elem_zero(base), "shape outside the decidable classes"};
}

TransferResult principal_transfer(const RingElem& u, const RingElem& v,
                                  const RingElem& x, const RingElem& y,
                                  const BezoutTriple& bez, const Rs& rs) {
    if ((y * u).is_zero()) throw HypothesisViolated("yu = 0");
    if (u * x != v * y) throw HypothesisViolated("ux != vy");
    if (bez.r * u + bez.s * v != bez.d) throw HypothesisViolated("bezout identity fails");
    if (bez.d.is_zero()) throw HypothesisViolated("gcd is zero");
    if (!divides(bez.d, u, rs) || !divides(bez.d, v, rs))
        throw HypothesisViolated("d does not divide u, v");
    RingElem w = bez.s * x + bez.r * y;
    RingElem u1 = u / bez.d;
    RingElem v1 = v / bez.d;
    // x = v1*w and y = u1*w certify x, y in (w)
    if (x != v1 * w || y != u1 * w)
        throw HypothesisViolated("cofactor identities fail");
    return {w, u1, v1};
}

} // namespace sl2a
