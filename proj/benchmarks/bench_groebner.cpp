#include <benchmark/benchmark.h>

#include "wn/parse.hpp"
#include "wn/groebner.hpp"

using namespace wn;

static void BM_GBOverZZ(benchmark::State& state) {
    auto ctx = make_context(CoeffRing::ZZ(), {"X", "Y"});
    Ideal I(ctx, parse_poly_list("2, Y^2 - 4*X", ctx));
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(I));
}
BENCHMARK(BM_GBOverZZ);

static void BM_GBCyclic3QQ(benchmark::State& state) {
    auto ctx = make_context(CoeffRing::QQ(), {"x", "y", "z"});
    Ideal I(ctx, parse_poly_list("x + y + z, x*y + y*z + z*x, x*y*z - 1", ctx));
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(I));
}
BENCHMARK(BM_GBCyclic3QQ);

static void BM_NormalForm(benchmark::State& state) {
    auto ctx = make_context(CoeffRing::ZZ(), {"X", "Y"});
    GroebnerBasis G = buchberger(Ideal(ctx, parse_poly_list("2, Y^2 - 4*X", ctx)));
    Poly f = parse_poly("(X + Y)^6 + 7*X*Y", ctx);
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, G));
}
BENCHMARK(BM_NormalForm);

static void BM_Saturation(benchmark::State& state) {
    auto ctx = make_context(CoeffRing::QQ(), {"x", "y", "z"});
    Ideal I(ctx, parse_poly_list("x^2, x*z, z^2, x*y - z^2", ctx));
    Poly y = parse_poly("y", ctx);
    for (auto _ : state) benchmark::DoNotOptimize(ideal_saturate(I, y));
}
BENCHMARK(BM_Saturation);

BENCHMARK_MAIN();
