// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "surreal/deriv.hpp"
#include "surreal/suites.hpp"
#include "surreal/textio.hpp"

using namespace surreal;

namespace {

// Many paths: a wide exponent plus a tail expanded to `tail` members.
Transseries wide_value(int tail)
{
    Transseries x = parse("exp(w^3 + 2*w^2*log(w) - w*log2(w) + exp(w/log(w)) + 3*k(-1)) + w^2*log(w)");
    return x + Transseries::tail(0, 1) + Transseries::tail(1, 2, -1);
}

DerivationConfig config(int tail)
{
    DerivationConfig cfg;
    cfg.precision.tail_expand = tail;
    return cfg;
}

void BM_derive(benchmark::State& state)
{
    const int tail = static_cast<int>(state.range(0));
    const Transseries x = wide_value(tail);
    const DerivationConfig cfg = config(tail);
    for (auto _ : state)
        benchmark::DoNotOptimize(derive(x, cfg));
}

void BM_derive_serial(benchmark::State& state)
{
    const int tail = static_cast<int>(state.range(0));
    const Transseries x = wide_value(tail);
    const DerivationConfig cfg = config(tail);
    for (auto _ : state)
        benchmark::DoNotOptimize(derive_serial(x, cfg));
}

void BM_suite(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite("leibniz", state.range(0)));
}

void BM_suite_serial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite_serial("leibniz", state.range(0)));
}

} // namespace

BENCHMARK(BM_derive)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_derive_serial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_serial)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
