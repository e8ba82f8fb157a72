#include "sl2a/words.hpp"

#include <algorithm>

namespace sl2a {

GenToken tok_e12(const RingElem& r) {
    return GenToken{TokKind::E12, r, r, r, -1};
}

GenToken tok_e21(const RingElem& r) {
    return GenToken{TokKind::E21, r, r, r, -1};
}

GenToken tok_diag(const RingElem& alpha, const RingElem& beta) {
    return GenToken{TokKind::Diag, alpha, alpha, beta, -1};
}

GenToken tok_named(int index) {
    return GenToken{TokKind::Named, RingElem{}, RingElem{}, RingElem{}, index};
}

Mat2 token_matrix(const GenToken& t, const Rs& rs, const std::vector<Mat2>* table) {
    (void)rs;
    switch (t.kind) {
    case TokKind::E12: return elem12(t.r);
    case TokKind::E21: return elem21(t.r);
    case TokKind::Diag: return diag(t.alpha, t.beta);
    case TokKind::Named:
        if (!table || t.named < 0 || t.named >= static_cast<int>(table->size()))
            throw UnknownGenerator("generator index " + std::to_string(t.named));
        return (*table)[t.named];
    }
    throw UnknownGenerator("bad token");
}

Mat2 eval_word(const GenWord& w, const Rs& rs, const std::vector<Mat2>* table) {
    Mat2 acc = mat_identity(rs);
    for (const auto& t : w) acc = acc * token_matrix(t, rs, table);
    return acc;
}

GenWord reduce_word(const GenWord& w, const Rs& rs) {
    GenWord out;
    for (const auto& t : w) {
        if (!out.empty() && out.back().kind == t.kind && t.kind != TokKind::Named) {
            GenToken& prev = out.back();
            if (t.kind == TokKind::Diag) {
                prev.alpha = prev.alpha * t.alpha;
                prev.beta = prev.beta * t.beta;
                if (prev.alpha == elem_one(rs) && prev.beta == elem_one(rs)) out.pop_back();
            } else {
                prev.r = prev.r + t.r;
                if (prev.r.is_zero()) out.pop_back();
            }
            continue;
        }
        if (t.kind == TokKind::E12 || t.kind == TokKind::E21) {
            if (t.r.is_zero()) continue;
        } else if (t.kind == TokKind::Diag) {
            if (t.alpha == elem_one(rs) && t.beta == elem_one(rs)) continue;
        }
        out.push_back(t);
    }
    return out;
}

GenWord diag_word(const RingElem& r) {
    if (r.is_zero()) throw ZeroElement("diag_word needs r != 0");
    const Rs& rs = r.rs;
    RingElem one = elem_one(rs);
    RingElem rinv = elem_inv(r);
    return GenWord{tok_e12(rinv),  tok_e21(-r), tok_e12(rinv),
                   tok_e12(-one), tok_e21(one), tok_e12(-one)};
}

std::vector<Mat2> e2_generating_set(const Rs& rs) {
    const size_t m = rs->vars.size();
    if (rs->inverted.size() != m)
        throw NotFullyLocalized("every generator must be inverted, nothing else");
    std::vector<bool> seen(m, false);
    for (const auto& p : rs->inverted) {
        auto used = poly_vars_used(p);
        bool ok = used.size() == 1 && p.terms.size() == 1 &&
                  p.terms.front().mono[used.front()] == 1 &&
                  p.terms.front().coeff == 1;
        if (!ok) throw NotFullyLocalized("inverted elements must be the variables");
        if (seen[used.front()]) throw NotFullyLocalized("duplicate inverted variable");
        seen[used.front()] = true;
    }
    std::vector<Mat2> gens;
    for (size_t i = 0; i < m; ++i) {
        RingElem y = elem_var(rs, static_cast<int>(i));
        gens.push_back(diag(y, elem_inv(y)));
    }
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        RingElem z = elem_one(rs);
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t(1) << i)) z = z * elem_var(rs, static_cast<int>(i));
        gens.push_back(elem12(z));
        gens.push_back(elem21(z));
    }
    return gens;
}

} // namespace sl2a
