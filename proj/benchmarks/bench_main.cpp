#include "sl2a/amalgam.hpp"
#include "sl2a/search.hpp"
#include "sl2a/text.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sl2a;

namespace {

Rs ring_zst() {
    static Rs rs = parse_ring_spec("Z[s,t]");
    return rs;
}

RingElem random_elem(std::mt19937_64& rng, const Rs& rs) {
    std::vector<Term> nt, dt;
    for (int i = 0; i < 3; ++i) {
        Mono m(rs->vars.size(), 0);
        for (auto& e : m) e = static_cast<int>(rng() % 4);
        nt.push_back(Term{m, Int(static_cast<long long>(rng() % 17) - 8)});
    }
    Mono dm(rs->vars.size(), 0);
    dm[1] = static_cast<int>(rng() % 3);
    dt.push_back(Term{dm, Int(1)});
    Poly num = poly_from_terms(*rs, std::move(nt));
    if (num.is_zero()) num = poly_one(*rs);
    return make_elem(rs, num, poly_from_terms(*rs, std::move(dt)));
}

void bm_elem_mul(benchmark::State& state) {
    Rs rs = ring_zst();
    std::mt19937_64 rng(1);
    RingElem a = random_elem(rng, rs), b = random_elem(rng, rs);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_elem_mul);

void bm_mat_mul(benchmark::State& state) {
    Rs rs = ring_zst();
    std::mt19937_64 rng(2);
    Mat2 a{random_elem(rng, rs), random_elem(rng, rs), random_elem(rng, rs),
           random_elem(rng, rs)};
    Mat2 b = a;
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_mat_mul);

void bm_tree_act(benchmark::State& state) {
    Rs rs = parse_ring_spec("Z");
    Valuation v = make_valuation(rs, elem_int(rs, 2));
    Mat2 g = elem12(parse_elem("3/2", rs)) * elem21(elem_int(rs, 5));
    TreeVertex w{2, parse_elem("7/2", rs)};
    for (auto _ : state) benchmark::DoNotOptimize(act(g, w, v));
}
BENCHMARK(bm_tree_act);

void bm_amalgam_reduce(benchmark::State& state) {
    Rs rs = parse_ring_spec("Z");
    AmalgamContext ctx = make_amalgam_context(rs, elem_int(rs, 2));
    RingElem half = parse_elem("1/2", rs);
    Mat2 h = elem21(half) * elem12(elem_int(rs, 3) * half) * elem21(half * half);
    for (auto _ : state) benchmark::DoNotOptimize(amalgam_reduce(h, ctx));
}
BENCHMARK(bm_amalgam_reduce);

void bm_search_depth2(benchmark::State& state) {
    Rs rs = parse_ring_spec("Z[t] loc(t)");
    Mat2 target = parse_matrix("[[1 - 2/t, 1/t], [-4/t, 1 + 2/t]]", rs);
    SearchBudget b = default_e2_budget(rs, 2, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(bounded_e2_search(target, rs, b));
}
BENCHMARK(bm_search_depth2);

} // namespace

BENCHMARK_MAIN();
