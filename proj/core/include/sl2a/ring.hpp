#pragma once

#include "sl2a/errors.hpp"
#include "sl2a/ints.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sl2a {

enum class Base { Integers, Prime };

// Exponent vector, one entry per ring variable, all entries >= 0.
using Mono = std::vector<std::int32_t>;

struct Term {
    Mono mono;
    Int coeff;
};

// Multivariate polynomial.  Terms are kept sorted in descending
// lexicographic order (variable significance = declaration order in the
// ring spec) and never carry zero coefficients.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
};

// Symbolic description of a supported coefficient ring
//   Z, F_q (q prime), Z[x1..xn], F_q[x1..xn]
// and localizations at finitely many nonzero elements.  The `inverted`
// list holds polynomials of the un-localized ring.
struct RingSpec {
    Base base = Base::Integers;
    long long prime_q = 0; // modulus when base == Prime
    std::vector<std::string> vars;
    std::vector<Poly> inverted;
};

using Rs = std::shared_ptr<const RingSpec>;

Rs make_ring(Base base, long long q, std::vector<std::string> vars,
             std::vector<Poly> inverted = {});
Rs ring_z();
Rs ring_z_vars(std::vector<std::string> vars);

// Same base, modulus and variable list; localizations may differ.
bool same_coefficient_ring(const RingSpec& a, const RingSpec& b);

// Spec with the localization stripped.
Rs unlocalized(const Rs& rs);

int var_index(const RingSpec& rs, const std::string& name); // -1 if absent

// --- monomials ------------------------------------------------------------

int mono_cmp(const Mono& a, const Mono& b); // lex
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b); // a | b componentwise
Mono mono_div(const Mono& b, const Mono& a);

// --- polynomial arithmetic -------------------------------------------------

Int coeff_normalize(const RingSpec& rs, Int c);
Int coeff_inverse(const RingSpec& rs, const Int& c); // prime base only

Poly poly_zero();
Poly poly_int(const RingSpec& rs, const Int& n);
Poly poly_one(const RingSpec& rs);
Poly poly_var(const RingSpec& rs, int var);
Poly poly_term(const RingSpec& rs, Mono m, Int c);
Poly poly_from_terms(const RingSpec& rs, std::vector<Term> terms);

Poly poly_add(const RingSpec& rs, const Poly& a, const Poly& b);
Poly poly_sub(const RingSpec& rs, const Poly& a, const Poly& b);
Poly poly_neg(const RingSpec& rs, const Poly& a);
Poly poly_mul(const RingSpec& rs, const Poly& a, const Poly& b);
Poly poly_mul_int(const RingSpec& rs, const Poly& a, const Int& c);
Poly poly_pow(const RingSpec& rs, const Poly& a, unsigned e);

bool poly_eq(const Poly& a, const Poly& b);
int poly_cmp(const Poly& a, const Poly& b); // total order for sorting

// Exact division; nullopt when b does not divide a.
std::optional<Poly> poly_exact_div(const RingSpec& rs, const Poly& a, const Poly& b);

Int poly_content(const Poly& a);              // gcd of coefficients, >= 0
Poly poly_div_int(const RingSpec& rs, const Poly& a, const Int& c);
Int poly_lead_coeff(const Poly& a);           // lex-leading, 0 for zero poly
int poly_total_degree(const Poly& a);         // -1 for zero poly
int poly_degree_in(const Poly& a, int var);
bool poly_is_constant(const Poly& a);
Int poly_constant_value(const Poly& a);       // requires constant
std::vector<int> poly_vars_used(const Poly& a);

// Coefficient of var^k, as a polynomial with var's exponent cleared.
Poly poly_coeff_of(const RingSpec& rs, const Poly& a, int var, int k);
// Substitute var := 0.
Poly poly_subst_zero(const RingSpec& rs, const Poly& a, int var);
// Substitute var := c (constant in the base).
Poly poly_subst_const(const RingSpec& rs, const Poly& a, int var, const Int& c);
// Transport between specs that differ only by dropping `var` (to) or by a
// changed base; `var` < 0 keeps all variables.
Poly poly_drop_var(const RingSpec& from, const Poly& a, int var, const RingSpec& to);
Poly poly_mod_prime(const RingSpec& to, const Poly& a);

// gcd for polynomials that are constant or univariate in a common variable.
// Over Z the result is primitive with positive leading coefficient; over a
// prime field it is monic.  Throws UnsupportedRing otherwise.
Poly poly_gcd_uni(const RingSpec& rs, const Poly& a, const Poly& b);

// Euclidean division in F_q[u] (field base, both operands constant or
// univariate in `var`): a = q*b + r with deg r < deg b.
struct PolyDivMod {
    Poly quot, rem;
};
PolyDivMod poly_divmod_uni(const RingSpec& rs, const Poly& a, const Poly& b, int var);

} // namespace sl2a
