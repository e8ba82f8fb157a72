#pragma once

#include "sl2a/amalgam.hpp"
#include "sl2a/search.hpp"

#include <optional>

namespace sl2a {

enum class WitnessKind { Mainstep, Laurent, MoreExamples };

// TheoremBacked: every hypothesis machine-verified.  SearchVerifiedAtBound:
// some hypothesis only asserted; the bounded search is corroboration, never
// the proof.
enum class ClaimTier { TheoremBacked, SearchVerifiedAtBound };

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SearchBound {
    int depth = 0; // 0 = no search run
    long long coeff_height_cap = 0;
    int degree_cap = 0;
    Int words_enumerated = 0;
    bool found = false;
    std::string menu_shape;
};

// Machine-checkable record of a claimed h in SL_2(R0[s,t]) (or R0[t])
// outside E_2(S), together with every verified hypothesis and the bound of
// the corroborating search.
struct WitnessCertificate {
    WitnessKind kind = WitnessKind::Mainstep;
    Rs base_ring;      // R0
    Rs ambient_ring;   // R0[s,t] or R0[t]
    Rs localized_ring; // S
    RingElem pi;
    std::optional<RingElem> f, f0, g, p; // mainstep / more-examples
    std::optional<RingElem> x, y;        // laurent
    std::optional<Mat2> b_prime;         // more-examples
    Mat2 a, b, h;
    std::string assumption_a = "automatic (noetherian)";
    std::vector<CheckResult> checks;
    SearchBound search;
    ClaimTier tier = ClaimTier::SearchVerifiedAtBound;
};

struct WitnessOptions {
    bool assert_prime = false; // accept p without a primality proof
    int search_depth = 4;      // 0 skips the corroboration search
    long long search_height = 16;
    int search_degree = 8;
};

// Ambient polynomial rings; variable names s, t are fixed by the grammar.
Rs mainstep_ambient(const Rs& base); // base vars + s, t
Rs laurent_ambient(const Rs& base);  // base vars + t

// h = a b a^-1 with a = [[1,0],[g/p,1]], b = [[1,p^2/t],[0,1]] for
// f = f0(s) + f1(s) t + ... in base[s,t] with t not dividing f and a prime
// p of the base not dividing f0; S = base[s,t, 1/s,1/t,1/f0,1/f].
WitnessCertificate mainstep_witness(const Rs& base, const RingElem& f, const RingElem& p,
                                    const WitnessOptions& opts = {});

// h = a b a^-1 with a = [[1,0],[x/y,1]], b = [[1,y^2/t],[0,1]] over
// base[t, 1/t], for a pair (x, y) whose residue ideal is not principal.
WitnessCertificate laurent_witness(const Rs& base, const RingElem& x, const RingElem& y,
                                   const WitnessOptions& opts = {});

// b' = [[alpha,beta],[gamma,delta]] in SL_2(base[s]) with alpha = delta
// mod p, p^2 | beta, beta != 0; b = [[alpha, beta/t],[gamma*t, delta]].
WitnessCertificate more_examples_witness(const Rs& base, const RingElem& f,
                                         const RingElem& p, const Mat2& b_prime,
                                         const WitnessOptions& opts = {});

struct VerifyReport {
    std::vector<CheckResult> checks;
    ClaimTier tier = ClaimTier::SearchVerifiedAtBound;
    bool ok = false;
};

// Recompute every stored hypothesis from the certificate data; optionally
// re-run the bounded search at the recorded bound.
VerifyReport verify_certificate(const WitnessCertificate& cert, bool rerun_search = false);

bool cert_equal(const WitnessCertificate& a, const WitnessCertificate& b);

std::string witness_kind_name(WitnessKind k);
std::string claim_tier_name(ClaimTier t);

} // namespace sl2a
