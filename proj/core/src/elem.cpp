#include "sl2a/elem.hpp"

#include <algorithm>
#include <cassert>

namespace sl2a {

namespace {

void check_compatible(const RingElem& a, const RingElem& b) {
    if (!same_coefficient_ring(*a.rs, *b.rs))
        throw UnsupportedRing("mixed-ring arithmetic");
}

bool cancellable_univariate(const Poly& num, const Poly& den) {
    auto vn = poly_vars_used(num);
    auto vd = poly_vars_used(den);
    std::vector<int> all = vn;
    for (int v : vd)
        if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    return all.size() <= 1;
}

} // namespace

RingElem make_elem(Rs rs, Poly num, Poly den) {
    if (den.is_zero()) throw ZeroDenominator("zero denominator");
    if (num.is_zero()) {
        Poly one = poly_one(*rs);
        return RingElem{std::move(rs), Poly{}, std::move(one)};
    }
    const RingSpec& spec = *rs;
    // single-term denominator: cancel the common monomial directly
    if (den.terms.size() == 1) {
        Mono common = num.terms.front().mono;
        for (const auto& t : num.terms)
            for (size_t v = 0; v < common.size(); ++v)
                common[v] = std::min(common[v], t.mono[v]);
        for (size_t v = 0; v < common.size(); ++v)
            common[v] = std::min(common[v], den.terms.front().mono[v]);
        bool any = false;
        for (auto e : common) any = any || e > 0;
        if (any) {
            for (auto& t : num.terms) t.mono = mono_div(t.mono, common);
            den.terms.front().mono = mono_div(den.terms.front().mono, common);
        }
        if (spec.base == Base::Integers) {
            Int c = int_gcd(poly_content(num), den.terms.front().coeff);
            if (c > 1) {
                num = poly_div_int(spec, num, c);
                den.terms.front().coeff /= c;
            }
            if (den.terms.front().coeff < 0) {
                num = poly_neg(spec, num);
                den.terms.front().coeff = -den.terms.front().coeff;
            }
        } else if (den.terms.front().coeff != 1) {
            Int inv = coeff_inverse(spec, den.terms.front().coeff);
            num = poly_mul_int(spec, num, inv);
            den.terms.front().coeff = 1;
        }
        return RingElem{std::move(rs), std::move(num), std::move(den)};
    }
    if (cancellable_univariate(num, den)) {
        Poly g = poly_gcd_uni(spec, num, den);
        if (!poly_is_constant(g) || poly_constant_value(g) != 1) {
            num = *poly_exact_div(spec, num, g);
            den = *poly_exact_div(spec, den, g);
        }
    }
    if (spec.base == Base::Integers) {
        Int c = int_gcd(poly_content(num), poly_content(den));
        if (c > 1) {
            num = poly_div_int(spec, num, c);
            den = poly_div_int(spec, den, c);
        }
        if (poly_lead_coeff(den) < 0) {
            num = poly_neg(spec, num);
            den = poly_neg(spec, den);
        }
    } else {
        Int lc = poly_lead_coeff(den);
        if (lc != 1) {
            Int inv = coeff_inverse(spec, lc);
            num = poly_mul_int(spec, num, inv);
            den = poly_mul_int(spec, den, inv);
        }
    }
    return RingElem{std::move(rs), std::move(num), std::move(den)};
}

RingElem elem_int(const Rs& rs, const Int& n) {
    return RingElem{rs, poly_int(*rs, n), poly_one(*rs)};
}

RingElem elem_zero(const Rs& rs) { return elem_int(rs, 0); }
RingElem elem_one(const Rs& rs) { return elem_int(rs, 1); }

RingElem elem_var(const Rs& rs, int var) {
    return RingElem{rs, poly_var(*rs, var), poly_one(*rs)};
}

RingElem elem_poly(const Rs& rs, Poly p) {
    return RingElem{rs, std::move(p), poly_one(*rs)};
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const RingSpec& rs = *a.rs;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (poly_eq(a.den, b.den))
        return make_elem(a.rs, poly_add(rs, a.num, b.num), a.den);
    Poly num = poly_add(rs, poly_mul(rs, a.num, b.den), poly_mul(rs, b.num, a.den));
    return make_elem(a.rs, std::move(num), poly_mul(rs, a.den, b.den));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const RingSpec& rs = *a.rs;
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    if (poly_eq(a.den, b.den))
        return make_elem(a.rs, poly_sub(rs, a.num, b.num), a.den);
    Poly num = poly_sub(rs, poly_mul(rs, a.num, b.den), poly_mul(rs, b.num, a.den));
    return make_elem(a.rs, std::move(num), poly_mul(rs, a.den, b.den));
}

RingElem operator-(const RingElem& a) {
    return RingElem{a.rs, poly_neg(*a.rs, a.num), a.den};
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    const RingSpec& rs = *a.rs;
    return make_elem(a.rs, poly_mul(rs, a.num, b.num), poly_mul(rs, a.den, b.den));
}

RingElem operator/(const RingElem& a, const RingElem& b) {
    check_compatible(a, b);
    if (b.is_zero()) throw ZeroDenominator("division by zero");
    const RingSpec& rs = *a.rs;
    return make_elem(a.rs, poly_mul(rs, a.num, b.den), poly_mul(rs, a.den, b.num));
}

bool operator==(const RingElem& a, const RingElem& b) {
    if (!same_coefficient_ring(*a.rs, *b.rs)) return false;
    const RingSpec& rs = *a.rs;
    return poly_eq(poly_mul(rs, a.num, b.den), poly_mul(rs, b.num, a.den));
}

bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

RingElem elem_inv(const RingElem& a) {
    if (a.is_zero()) throw ZeroDenominator("inverse of zero");
    return make_elem(a.rs, a.den, a.num);
}

RingElem elem_pow(const RingElem& a, long long e) {
    if (e < 0) return elem_pow(elem_inv(a), -e);
    RingElem r = elem_one(a.rs);
    RingElem base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::optional<Poly> in_unlocalized(const RingElem& e) {
    return poly_exact_div(*e.rs, e.num, e.den);
}

bool in_localized(const RingElem& e, const RingSpec& rs) {
    if (rs.inverted.empty()) return in_unlocalized(e).has_value();
    Poly prod = poly_one(rs);
    for (const auto& d : rs.inverted) prod = poly_mul(rs, d, prod);
    // den | num * prod^m must hold for some m; the exponent needed per
    // irreducible factor of den is bounded by deg(den) plus the bit length
    // of its integer content.
    int bound = std::max(0, poly_total_degree(e.den)) + 2;
    Int c = poly_content(e.den);
    while (c > 1) {
        c /= 2;
        ++bound;
    }
    Poly num = e.num;
    for (int m = 0; m <= bound; ++m) {
        if (poly_exact_div(rs, num, e.den)) return true;
        num = poly_mul(rs, num, prod);
    }
    return false;
}

bool in_localized(const RingElem& e) { return in_localized(e, *e.rs); }

} // namespace sl2a
