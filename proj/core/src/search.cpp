#include "sl2a/search.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstring>

namespace sl2a {

namespace {

// ---- canonical byte keys ---------------------------------------------------
//
// Search values live in the Laurent subring generated by the variables and
// the inverses of the inverted variables, so every entry can be written
// uniquely as  P * prod v^{E_v}  with P a polynomial whose per-variable
// minimum exponent is zero.  The byte serialization of (E, P) is the
// dedup/lookup key; any fixed total order works, memcmp is used.

void put_i32(std::string& out, std::int32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void append_entry_key(std::string& out, const RingElem& e) {
    const RingSpec& rs = *e.rs;
    const size_t nv = rs.vars.size();
    if (e.is_zero()) {
        put_i32(out, -1);
        return;
    }
    // denominator must be a unit monomial
    if (e.den.terms.size() != 1)
        throw UnsupportedRing("search value outside the Laurent subring");
    const Term& dt = e.den.terms.front();
    if (dt.coeff != 1)
        throw UnsupportedRing("search value outside the Laurent subring");
    std::vector<std::int32_t> shift(nv, 0);
    for (size_t v = 0; v < nv; ++v) {
        std::int32_t m = e.num.terms.front().mono[v];
        for (const auto& t : e.num.terms) m = std::min(m, t.mono[v]);
        shift[v] = m;
    }
    put_i32(out, static_cast<std::int32_t>(e.num.terms.size()));
    for (size_t v = 0; v < nv; ++v) put_i32(out, shift[v] - dt.mono[v]);
    for (const auto& t : e.num.terms) {
        for (size_t v = 0; v < nv; ++v) put_i32(out, t.mono[v] - shift[v]);
        std::string c = t.coeff.str();
        put_i32(out, static_cast<std::int32_t>(c.size()));
        out += c;
    }
}

std::string matrix_key(const Mat2& m) {
    std::string k;
    k.reserve(160);
    append_entry_key(k, m.a11);
    append_entry_key(k, m.a12);
    append_entry_key(k, m.a21);
    append_entry_key(k, m.a22);
    return k;
}

// ---- layer tables -----------------------------------------------------------

constexpr int kMaxHalf = 3;

struct LayerEntry {
    std::uint64_t key_off;
    std::uint32_t key_len;
    std::array<std::int32_t, kMaxHalf> toks; // menu indices, -1 padded
};

struct Layer {
    int depth = 0;
    std::vector<char> arena;
    std::vector<LayerEntry> entries; // sorted by key bytes

    std::string_view key(const LayerEntry& e) const {
        return {arena.data() + e.key_off, e.key_len};
    }
};

int key_cmp(std::string_view a, std::string_view b) {
    int c = std::memcmp(a.data(), b.data(), std::min(a.size(), b.size()));
    if (c != 0) return c;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

Mat2 adjugate(const Mat2& m) { return Mat2{m.a22, -m.a12, -m.a21, m.a11}; }

Mat2 entry_value(const Layer& layer, const LayerEntry& e, const std::vector<Mat2>& tokval,
                 const Rs& rs) {
    (void)rs;
    Mat2 acc = tokval[static_cast<size_t>(e.toks[0])];
    for (int i = 1; i < layer.depth; ++i) acc = acc * tokval[static_cast<size_t>(e.toks[i])];
    return acc;
}

void sort_dedup(Layer& layer, Int& dedup_hits) {
    std::sort(layer.entries.begin(), layer.entries.end(),
              [&](const LayerEntry& a, const LayerEntry& b) {
                  return key_cmp(layer.key(a), layer.key(b)) < 0;
              });
    std::vector<LayerEntry> out;
    out.reserve(layer.entries.size());
    for (const auto& e : layer.entries) {
        if (!out.empty() && key_cmp(layer.key(out.back()), layer.key(e)) == 0) {
            dedup_hits += 1;
            continue;
        }
        out.push_back(e);
    }
    layer.entries = std::move(out);
}

// all entries of `layer` whose key equals k
std::pair<size_t, size_t> equal_range(const Layer& layer, std::string_view k) {
    size_t lo = 0, hi = layer.entries.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (key_cmp(layer.key(layer.entries[mid]), k) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    size_t begin = lo;
    hi = layer.entries.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (key_cmp(layer.key(layer.entries[mid]), k) <= 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return {begin, lo};
}

SearchResult run_search(const Mat2& target, const Rs& rs, const SearchBudget& budget) {
    if (!is_unimodular(target)) throw NotUnimodular("search target must have det = 1");
    SearchResult res;
    res.stats.menu_size = static_cast<long long>(budget.menu.size());
    res.stats.menu_shape = budget.menu_shape;
    if (budget.menu.empty()) throw BudgetTooLarge("empty generator menu");

    std::vector<Mat2> tokval;
    tokval.reserve(budget.menu.size());
    for (const auto& t : budget.menu) {
        Mat2 m = token_matrix(t, rs, &budget.table);
        if (!is_unimodular(m)) throw NotUnimodular("menu token with det != 1");
        tokval.push_back(m);
    }
    const Mat2 id = mat_identity(rs);
    const std::string target_key = matrix_key(target);

    auto finish = [&](int depth, bool found, GenWord word) {
        res.stats.depth = depth;
        res.found = found;
        res.stats.verdict = found ? "Found" : "NotFoundAtBound";
        if (found) {
            res.word = reduce_word(word, rs);
            if (eval_word(res.word, rs, &budget.table) != target)
                throw Error("internal: found word fails re-evaluation");
        }
        return res;
    };

    // depth 0
    if (target == id) return finish(0, true, {});
    if (budget.max_depth == 0) return finish(0, false, {});

    Int formed = 0;
    auto charge = [&](long long n) {
        formed += n;
        if (formed > budget.enum_ceiling)
            throw BudgetTooLarge("enumeration ceiling exceeded; " + formed.str() +
                                 " products formed");
    };

    std::vector<Layer> layers(static_cast<size_t>(kMaxHalf) + 1);
    // layer 1 straight from the menu
    {
        Layer& l1 = layers[1];
        l1.depth = 1;
        charge(static_cast<long long>(tokval.size()));
        for (size_t i = 0; i < tokval.size(); ++i) {
            std::string k = matrix_key(tokval[i]);
            LayerEntry e{l1.arena.size(), static_cast<std::uint32_t>(k.size()),
                         {static_cast<std::int32_t>(i), -1, -1}};
            l1.arena.insert(l1.arena.end(), k.begin(), k.end());
            l1.entries.push_back(e);
        }
        sort_dedup(l1, res.stats.dedup_hits);
    }

    auto build_layer = [&](int k) {
        const Layer& prev = layers[static_cast<size_t>(k - 1)];
        long long projected =
            static_cast<long long>(prev.entries.size()) * static_cast<long long>(tokval.size());
        if (projected > budget.layer_cap)
            throw BudgetTooLarge("layer " + std::to_string(k) + " needs " +
                                 std::to_string(projected) + " entries (cap " +
                                 std::to_string(budget.layer_cap) + ")");
        charge(projected);
        Layer& lk = layers[static_cast<size_t>(k)];
        lk.depth = k;
        lk.entries.reserve(static_cast<size_t>(projected));
        for (const auto& pe : prev.entries) {
            Mat2 pv = entry_value(prev, pe, tokval, rs);
            for (size_t i = 0; i < tokval.size(); ++i) {
                Mat2 v = pv * tokval[i];
                std::string key = matrix_key(v);
                LayerEntry e{lk.arena.size(), static_cast<std::uint32_t>(key.size()), pe.toks};
                e.toks[static_cast<size_t>(k - 1)] = static_cast<std::int32_t>(i);
                lk.arena.insert(lk.arena.end(), key.begin(), key.end());
                lk.entries.push_back(e);
            }
        }
        sort_dedup(lk, res.stats.dedup_hits);
    };

    GenWord found_word;
    for (int d = 1; d <= budget.max_depth; ++d) {
        int a = (d + 1) / 2; // lookup side
        int b = d / 2;       // probe side (smaller)
        if (a > kMaxHalf)
            throw BudgetTooLarge("depth " + std::to_string(d) + " exceeds the engine's " +
                                 std::to_string(2 * kMaxHalf) + "-token limit");
        if (layers[static_cast<size_t>(a)].depth != a) build_layer(a);
        const Layer& la = layers[static_cast<size_t>(a)];
        bool hit = false;
        if (b == 0) {
            auto [lo, hi] = equal_range(la, target_key);
            if (lo < hi) {
                const LayerEntry& e = la.entries[lo];
                for (int i = 0; i < a; ++i)
                    found_word.push_back(budget.menu[static_cast<size_t>(e.toks[i])]);
                hit = true;
            }
        } else {
            const Layer& lb = layers[static_cast<size_t>(b)];
            charge(static_cast<long long>(lb.entries.size()));
            for (const auto& we : lb.entries) {
                // u * w = target  =>  u = target * w^-1; menu tokens all
                // have det 1, so the inverse is the adjugate
                Mat2 wv = entry_value(lb, we, tokval, rs);
                Mat2 u = target * adjugate(wv);
                std::string k = matrix_key(u);
                auto [lo, hi] = equal_range(la, k);
                if (lo < hi) {
                    const LayerEntry& ue = la.entries[lo];
                    for (int i = 0; i < a; ++i)
                        found_word.push_back(budget.menu[static_cast<size_t>(ue.toks[i])]);
                    for (int i = 0; i < b; ++i)
                        found_word.push_back(budget.menu[static_cast<size_t>(we.toks[i])]);
                    hit = true;
                    break;
                }
            }
        }
        res.stats.words_enumerated = formed;
        if (hit) return finish(d, true, found_word);
    }
    res.stats.words_enumerated = formed;
    return finish(budget.max_depth, false, {});
}

bool laurent_variable(const RingSpec& rs, int var) {
    for (const auto& p : rs.inverted) {
        if (p.terms.size() != 1) continue;
        const Term& t = p.terms.front();
        if (t.coeff != 1) continue;
        bool match = true;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            int want = static_cast<int>(i) == var ? 1 : 0;
            if (t.mono[i] != want) match = false;
        }
        if (match) return true;
    }
    return false;
}

std::vector<RingElem> capped_parameters(const Rs& rs, long long height, int degree,
                                        bool with_negative) {
    std::vector<RingElem> out;
    long long hmax = rs->base == Base::Prime ? std::min<long long>(height, rs->prime_q - 1)
                                             : height;
    for (long long c = 1; c <= hmax; ++c) {
        out.push_back(elem_int(rs, c));
        if (rs->base == Base::Integers) out.push_back(elem_int(rs, -c));
        for (size_t v = 0; v < rs->vars.size(); ++v) {
            for (int e = 1; e <= degree; ++e) {
                RingElem p = elem_int(rs, c) * elem_pow(elem_var(rs, static_cast<int>(v)), e);
                out.push_back(p);
                if (rs->base == Base::Integers) out.push_back(-p);
                if (with_negative && laurent_variable(*rs, static_cast<int>(v))) {
                    RingElem q =
                        elem_int(rs, c) * elem_pow(elem_var(rs, static_cast<int>(v)), -e);
                    out.push_back(q);
                    if (rs->base == Base::Integers) out.push_back(-q);
                }
            }
        }
    }
    return out;
}

} // namespace

SearchBudget default_e2_budget(const Rs& rs, int depth, long long height, int degree) {
    SearchBudget b;
    b.max_depth = depth;
    b.coeff_height_cap = height;
    b.degree_cap = degree;
    for (const auto& p : capped_parameters(rs, height, degree, true)) {
        b.menu.push_back(tok_e12(p));
        b.menu.push_back(tok_e21(p));
    }
    for (size_t v = 0; v < rs->vars.size(); ++v) {
        if (!laurent_variable(*rs, static_cast<int>(v))) continue;
        for (int e = 1; e <= degree; ++e) {
            RingElem y = elem_pow(elem_var(rs, static_cast<int>(v)), e);
            b.menu.push_back(tok_diag(y, elem_inv(y)));
        }
    }
    b.menu_shape = "E12/E21(+-c*v^e), c<=" + std::to_string(height) + ", |e|<=" +
                   std::to_string(degree) +
                   " (negative e on inverted variables); D(v^e, v^-e)";
    return b;
}

SearchBudget default_h0_budget(const AmalgamContext& ctx, int depth, long long height,
                               int degree) {
    SearchBudget b;
    b.max_depth = depth;
    b.coeff_height_cap = height;
    b.degree_cap = degree;
    const Rs& R = ctx.ring;
    RingElem pi = elem_poly(R, ctx.val.pi);
    Mat2 rot = mat(elem_zero(R), -elem_one(R), elem_one(R), elem_zero(R));
    Mat2 dpi_inv = diag_pi(ctx, true);
    Mat2 dpi = diag_pi(ctx, false);
    b.table.push_back(rot);
    b.table.push_back(dpi_inv * rot * dpi);
    b.menu.push_back(tok_named(0));
    b.menu.push_back(tok_named(1));
    for (const auto& p : capped_parameters(R, height, degree, false)) {
        b.menu.push_back(tok_e12(p));
        b.menu.push_back(tok_e21(p));
        // conjugates D(1/pi,1) E12(p) D(pi,1) = E12(p/pi) and
        // D(1/pi,1) E21(p) D(pi,1) = E21(p*pi)
        b.menu.push_back(tok_e12(p / pi));
        b.menu.push_back(tok_e21(p * pi));
    }
    b.menu_shape = "SL2(R) letters E12/E21(+-c*v^e), rotation, and their "
                   "D(1/pi,1)-conjugates; c<=" +
                   std::to_string(height) + ", e<=" + std::to_string(degree);
    return b;
}

SearchResult bounded_e2_search(const Mat2& target, const Rs& rs, const SearchBudget& budget) {
    return run_search(target, rs, budget);
}

SearchResult bounded_h0_search(const Mat2& target, const AmalgamContext& ctx,
                               const SearchBudget& budget) {
    SearchResult r = run_search(target, ctx.ring, budget);
    // the equal-depth implication for the e2 menu applies when every e2
    // token of the same caps is a single A- or B-side letter
    bool covers = true;
    Rs localized = make_ring(ctx.ring->base, ctx.ring->prime_q, ctx.ring->vars,
                             {ctx.val.pi});
    SearchBudget e2 = default_e2_budget(localized, budget.max_depth,
                                        budget.coeff_height_cap, budget.degree_cap);
    for (const auto& t : e2.menu) {
        Mat2 m = token_matrix(t, ctx.ring, nullptr);
        SidePattern sp = classify_side(m, ctx.val);
        if (sp.cls == SideClass::Neither) {
            covers = false;
            break;
        }
    }
    r.stats.h0_covers_e2 = covers;
    return r;
}

} // namespace sl2a
