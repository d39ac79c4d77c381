#include <benchmark/benchmark.h>

#include "msym/bijections.hpp"
#include "msym/lset.hpp"
#include "msym/multisym.hpp"
#include "msym/transport.hpp"

using namespace msym;

namespace {

void BM_EnumerateL(benchmark::State& state) {
    const Int n = state.range(0);
    const Margin alpha{2, 2, 2};
    const Margin beta{2, 2, 2};
    for (auto _ : state) {
        auto members = enumerate_L(alpha, beta, n);
        benchmark::DoNotOptimize(members.data());
    }
}
BENCHMARK(BM_EnumerateL)->Arg(6)->Arg(8)->Arg(10);

void BM_ElementaryMultisym(benchmark::State& state) {
    const Int n = state.range(0);
    const FunctionTuple f({y(1), y(2) * y(2), y(1) * y(2)}, 2);
    const Margin alpha{2, 1, 1};
    for (auto _ : state) {
        auto e = elementary_multisym(f, alpha, n);
        benchmark::DoNotOptimize(&e);
    }
}
BENCHMARK(BM_ElementaryMultisym)->Arg(4)->Arg(6)->Arg(8);

void BM_ProductIdentity(benchmark::State& state) {
    const Int n = state.range(0);
    const FunctionTuple f({y(1), y(2)}, 2);
    const FunctionTuple g({y(1) * y(2), y(2)}, 2);
    for (auto _ : state) {
        auto res = verify_product_identity(f, g, {1, 1}, {1, 1}, n);
        benchmark::DoNotOptimize(&res);
    }
}
BENCHMARK(BM_ProductIdentity)->Arg(3)->Arg(4)->Arg(5);

void BM_NorthwestCorner(benchmark::State& state) {
    const Int m = state.range(0);
    std::vector<Rational> u;
    Rational total = 0;
    for (Int i = 0; i < m; ++i) {
        u.push_back(make_rational(i + 1, 2));
        total += u.back();
    }
    const std::vector<Rational> v(static_cast<std::size_t>(m),
                                  total / Rational(m));
    const MarginPair margins(u, v);
    for (auto _ : state) {
        auto x = northwest_corner(margins);
        benchmark::DoNotOptimize(x.data());
    }
}
BENCHMARK(BM_NorthwestCorner)->Arg(8)->Arg(32)->Arg(128);

void BM_RSKRoundtrip(benchmark::State& state) {
    const Int n = state.range(0);
    const auto members = enumerate_L({2, 2, 2}, {2, 2, 2}, n);
    for (auto _ : state) {
        for (const auto& g : members) {
            const BiWord w = matrix_to_biword(g);
            const auto pq = rsk(w);
            const BiWord back = rsk_inverse(pq);
            benchmark::DoNotOptimize(&back);
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(members.size()));
}
BENCHMARK(BM_RSKRoundtrip)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
