#include "sl2a/ring.hpp"

#include <algorithm>
#include <cassert>

namespace sl2a {

Rs make_ring(Base base, long long q, std::vector<std::string> vars,
             std::vector<Poly> inverted) {
    auto rs = std::make_shared<RingSpec>();
    rs->base = base;
    rs->prime_q = q;
    rs->vars = std::move(vars);
    rs->inverted = std::move(inverted);
    if (base == Base::Prime && !is_prime_integer(Int(q)))
        throw UnsupportedBase("F_q base requires q prime, got q=" + std::to_string(q));
    return rs;
}

Rs ring_z() { return make_ring(Base::Integers, 0, {}); }

Rs ring_z_vars(std::vector<std::string> vars) {
    return make_ring(Base::Integers, 0, std::move(vars));
}

bool same_coefficient_ring(const RingSpec& a, const RingSpec& b) {
    return a.base == b.base && a.prime_q == b.prime_q && a.vars == b.vars;
}

Rs unlocalized(const Rs& rs) {
    if (rs->inverted.empty()) return rs;
    return make_ring(rs->base, rs->prime_q, rs->vars);
}

int var_index(const RingSpec& rs, const std::string& name) {
    for (size_t i = 0; i < rs.vars.size(); ++i)
        if (rs.vars[i] == name) return static_cast<int>(i);
    return -1;
}

// --- monomials ------------------------------------------------------------

int mono_cmp(const Mono& a, const Mono& b) {
    assert(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
    Mono r = b;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
    return r;
}

// --- coefficients ----------------------------------------------------------

Int coeff_normalize(const RingSpec& rs, Int c) {
    if (rs.base == Base::Prime) {
        c %= rs.prime_q;
        if (c < 0) c += rs.prime_q;
    }
    return c;
}

Int coeff_inverse(const RingSpec& rs, const Int& c) {
    assert(rs.base == Base::Prime);
    ExtGcd g = ext_gcd(coeff_normalize(rs, c), Int(rs.prime_q));
    if (g.d != 1) throw ZeroDenominator("inverse of zero residue");
    return coeff_normalize(rs, g.x);
}

// --- construction ----------------------------------------------------------

Poly poly_zero() { return Poly{}; }

Poly poly_int(const RingSpec& rs, const Int& n) {
    Int c = coeff_normalize(rs, n);
    if (c == 0) return Poly{};
    return Poly{{Term{Mono(rs.vars.size(), 0), c}}};
}

Poly poly_one(const RingSpec& rs) { return poly_int(rs, 1); }

Poly poly_var(const RingSpec& rs, int var) {
    assert(var >= 0 && var < static_cast<int>(rs.vars.size()));
    Mono m(rs.vars.size(), 0);
    m[var] = 1;
    return Poly{{Term{std::move(m), Int(1)}}};
}

Poly poly_term(const RingSpec& rs, Mono m, Int c) {
    c = coeff_normalize(rs, c);
    if (c == 0) return Poly{};
    assert(m.size() == rs.vars.size());
    return Poly{{Term{std::move(m), std::move(c)}}};
}

Poly poly_from_terms(const RingSpec& rs, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.mono, b.mono) > 0; });
    Poly r;
    for (auto& t : terms) {
        Int c = coeff_normalize(rs, t.coeff);
        if (!r.terms.empty() && mono_cmp(r.terms.back().mono, t.mono) == 0) {
            r.terms.back().coeff = coeff_normalize(rs, r.terms.back().coeff + c);
        } else {
            r.terms.push_back(Term{t.mono, c});
        }
        if (!r.terms.empty() && r.terms.back().coeff == 0) r.terms.pop_back();
    }
    // a cancelled middle coefficient can leave a zero entry behind
    r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                                 [](const Term& t) { return t.coeff == 0; }),
                  r.terms.end());
    return r;
}

// --- arithmetic -------------------------------------------------------------

Poly poly_add(const RingSpec& rs, const Poly& a, const Poly& b) {
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mono_cmp(a.terms[i].mono, b.terms[j].mono);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Int s = coeff_normalize(rs, a.terms[i].coeff + b.terms[j].coeff);
            if (s != 0) r.terms.push_back(Term{a.terms[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

Poly poly_neg(const RingSpec& rs, const Poly& a) {
    Poly r = a;
    for (auto& t : r.terms) t.coeff = coeff_normalize(rs, -t.coeff);
    return r;
}

Poly poly_sub(const RingSpec& rs, const Poly& a, const Poly& b) {
    return poly_add(rs, a, poly_neg(rs, b));
}

Poly poly_mul(const RingSpec& rs, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    // multiplying by a single term preserves the term order
    if (a.terms.size() == 1 || b.terms.size() == 1) {
        const Term& t = a.terms.size() == 1 ? a.terms.front() : b.terms.front();
        const Poly& other = a.terms.size() == 1 ? b : a;
        Poly r;
        r.terms.reserve(other.terms.size());
        for (const auto& u : other.terms) {
            Int c = coeff_normalize(rs, u.coeff * t.coeff);
            if (c != 0) r.terms.push_back(Term{mono_mul(u.mono, t.mono), std::move(c)});
        }
        return r;
    }
    std::vector<Term> acc;
    acc.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            acc.push_back(Term{mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    return poly_from_terms(rs, std::move(acc));
}

Poly poly_mul_int(const RingSpec& rs, const Poly& a, const Int& c) {
    Int cn = coeff_normalize(rs, c);
    if (cn == 0) return Poly{};
    Poly r = a;
    for (auto& t : r.terms) t.coeff = coeff_normalize(rs, t.coeff * cn);
    r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                                 [](const Term& t) { return t.coeff == 0; }),
                  r.terms.end());
    return r;
}

Poly poly_pow(const RingSpec& rs, const Poly& a, unsigned e) {
    Poly r = poly_one(rs);
    Poly base = a;
    while (e > 0) {
        if (e & 1u) r = poly_mul(rs, r, base);
        e >>= 1u;
        if (e) base = poly_mul(rs, base, base);
    }
    return r;
}

bool poly_eq(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].coeff != b.terms[i].coeff) return false;
        if (mono_cmp(a.terms[i].mono, b.terms[i].mono) != 0) return false;
    }
    return true;
}

int poly_cmp(const Poly& a, const Poly& b) {
    size_t n = std::min(a.terms.size(), b.terms.size());
    for (size_t i = 0; i < n; ++i) {
        int c = mono_cmp(a.terms[i].mono, b.terms[i].mono);
        if (c != 0) return c;
        if (a.terms[i].coeff != b.terms[i].coeff)
            return a.terms[i].coeff < b.terms[i].coeff ? -1 : 1;
    }
    if (a.terms.size() != b.terms.size())
        return a.terms.size() < b.terms.size() ? -1 : 1;
    return 0;
}

// --- division ----------------------------------------------------------------

std::optional<Poly> poly_exact_div(const RingSpec& rs, const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly{};
    Poly rem = a;
    std::vector<Term> quot;
    const Term& lead = b.terms.front();
    while (!rem.is_zero()) {
        const Term& lr = rem.terms.front();
        if (!mono_divides(lead.mono, lr.mono)) return std::nullopt;
        Int c;
        if (rs.base == Base::Prime) {
            c = coeff_normalize(rs, lr.coeff * coeff_inverse(rs, lead.coeff));
        } else {
            if (lr.coeff % lead.coeff != 0) return std::nullopt;
            c = lr.coeff / lead.coeff;
        }
        Term q{mono_div(lr.mono, lead.mono), c};
        quot.push_back(q);
        Poly shifted = poly_mul(rs, b, poly_term(rs, q.mono, q.coeff));
        rem = poly_sub(rs, rem, shifted);
    }
    return poly_from_terms(rs, std::move(quot));
}

Int poly_content(const Poly& a) {
    Int g = 0;
    for (const auto& t : a.terms) g = int_gcd(g, t.coeff);
    return g;
}

Poly poly_div_int(const RingSpec& rs, const Poly& a, const Int& c) {
    assert(c != 0);
    Poly r = a;
    for (auto& t : r.terms) {
        assert(t.coeff % c == 0);
        t.coeff = coeff_normalize(rs, t.coeff / c);
    }
    return r;
}

Int poly_lead_coeff(const Poly& a) {
    return a.is_zero() ? Int(0) : a.terms.front().coeff;
}

int poly_total_degree(const Poly& a) {
    int d = -1;
    for (const auto& t : a.terms) {
        int s = 0;
        for (auto e : t.mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

int poly_degree_in(const Poly& a, int var) {
    int d = a.is_zero() ? -1 : 0;
    for (const auto& t : a.terms) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
}

bool poly_is_constant(const Poly& a) {
    if (a.is_zero()) return true;
    if (a.terms.size() != 1) return false;
    for (auto e : a.terms.front().mono)
        if (e != 0) return false;
    return true;
}

Int poly_constant_value(const Poly& a) {
    assert(poly_is_constant(a));
    return a.is_zero() ? Int(0) : a.terms.front().coeff;
}

std::vector<int> poly_vars_used(const Poly& a) {
    std::vector<int> used;
    if (a.is_zero()) return used;
    size_t n = a.terms.front().mono.size();
    for (size_t v = 0; v < n; ++v) {
        for (const auto& t : a.terms) {
            if (t.mono[v] != 0) {
                used.push_back(static_cast<int>(v));
                break;
            }
        }
    }
    return used;
}

Poly poly_coeff_of(const RingSpec& rs, const Poly& a, int var, int k) {
    std::vector<Term> out;
    for (const auto& t : a.terms) {
        if (t.mono[var] == k) {
            Term u = t;
            u.mono[var] = 0;
            out.push_back(std::move(u));
        }
    }
    return poly_from_terms(rs, std::move(out));
}

Poly poly_subst_zero(const RingSpec& rs, const Poly& a, int var) {
    return poly_coeff_of(rs, a, var, 0);
}

Poly poly_subst_const(const RingSpec& rs, const Poly& a, int var, const Int& c) {
    std::vector<Term> out;
    for (const auto& t : a.terms) {
        Term u = t;
        int e = u.mono[var];
        u.mono[var] = 0;
        Int scale = 1;
        for (int i = 0; i < e; ++i) scale *= c;
        u.coeff = t.coeff * scale;
        out.push_back(std::move(u));
    }
    return poly_from_terms(rs, std::move(out));
}

Poly poly_drop_var(const RingSpec& from, const Poly& a, int var, const RingSpec& to) {
    std::vector<Term> out;
    for (const auto& t : a.terms) {
        assert(var < 0 || t.mono[var] == 0);
        Term u;
        u.coeff = t.coeff;
        u.mono.reserve(to.vars.size());
        for (size_t i = 0; i < from.vars.size(); ++i) {
            if (static_cast<int>(i) == var) continue;
            u.mono.push_back(t.mono[i]);
        }
        assert(u.mono.size() == to.vars.size());
        out.push_back(std::move(u));
    }
    return poly_from_terms(to, std::move(out));
}

Poly poly_mod_prime(const RingSpec& to, const Poly& a) {
    std::vector<Term> out;
    for (const auto& t : a.terms) out.push_back(Term{t.mono, t.coeff});
    return poly_from_terms(to, std::move(out));
}

// --- univariate gcd ----------------------------------------------------------

namespace {

// index of the single variable used by a and b together; -1 when both constant
int common_uni_var(const Poly& a, const Poly& b) {
    auto va = poly_vars_used(a);
    auto vb = poly_vars_used(b);
    std::vector<int> all = va;
    for (int v : vb)
        if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    if (all.empty()) return -1;
    if (all.size() > 1) throw UnsupportedRing("gcd supported for univariate operands only");
    return all.front();
}

Poly primitive_part(const RingSpec& rs, const Poly& a) {
    if (a.is_zero()) return a;
    Int c = poly_content(a);
    Poly p = poly_div_int(rs, a, c);
    if (poly_lead_coeff(p) < 0) p = poly_neg(rs, p);
    return p;
}

// pseudo-remainder of a by b in one variable over Z
Poly pseudo_rem(const RingSpec& rs, Poly a, const Poly& b, int var) {
    int db = poly_degree_in(b, var);
    Int lb = poly_lead_coeff(b);
    while (!a.is_zero() && poly_degree_in(a, var) >= db) {
        int da = poly_degree_in(a, var);
        Poly la = poly_coeff_of(rs, a, var, da);
        Mono shift(rs.vars.size(), 0);
        shift[var] = da - db;
        // lb*a - la*x^(da-db)*b kills the leading term
        a = poly_sub(rs, poly_mul_int(rs, a, lb),
                     poly_mul(rs, poly_mul(rs, la, poly_term(rs, shift, Int(1))), b));
    }
    return a;
}

} // namespace

PolyDivMod poly_divmod_uni(const RingSpec& rs, const Poly& a, const Poly& b, int var) {
    assert(rs.base == Base::Prime);
    assert(!b.is_zero());
    Poly rem = a;
    Poly quot;
    int db = var < 0 ? 0 : poly_degree_in(b, var);
    Int inv_lb = coeff_inverse(rs, poly_lead_coeff(b));
    while (!rem.is_zero() && (var < 0 || poly_degree_in(rem, var) >= db)) {
        int dr = var < 0 ? 0 : poly_degree_in(rem, var);
        Poly lr = var < 0 ? rem : poly_coeff_of(rs, rem, var, dr);
        Mono shift(rs.vars.size(), 0);
        if (var >= 0) shift[var] = dr - db;
        Poly qterm = poly_mul(rs, poly_mul_int(rs, lr, inv_lb),
                              poly_term(rs, shift, Int(1)));
        quot = poly_add(rs, quot, qterm);
        rem = poly_sub(rs, rem, poly_mul(rs, qterm, b));
        if (var < 0) break;
    }
    return {quot, rem};
}

Poly poly_gcd_uni(const RingSpec& rs, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly{};
    int var = common_uni_var(a, b);
    if (rs.base == Base::Prime) {
        Poly x = a, y = b;
        while (!y.is_zero()) {
            Poly r = var < 0 ? Poly{} : poly_divmod_uni(rs, x, y, var).rem;
            if (var < 0) r = Poly{}; // nonzero constants divide each other
            x = y;
            y = r;
        }
        if (!x.is_zero()) x = poly_mul_int(rs, x, coeff_inverse(rs, poly_lead_coeff(x)));
        return x;
    }
    // integer base: primitive polynomial remainder sequence
    Int cont = int_gcd(poly_content(a), poly_content(b));
    if (var < 0) return poly_int(rs, cont);
    Poly x = primitive_part(rs, a);
    Poly y = primitive_part(rs, b);
    if (x.is_zero()) return poly_mul_int(rs, y, cont);
    if (y.is_zero()) return poly_mul_int(rs, x, cont);
    if (poly_degree_in(x, var) < poly_degree_in(y, var)) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = pseudo_rem(rs, x, y, var);
        x = y;
        y = primitive_part(rs, r);
    }
    return poly_mul_int(rs, primitive_part(rs, x), cont);
}

} // namespace sl2a
