// Microbenchmarks for the arithmetic kernel.  Higher-level benchmarks are
// added alongside the modules they measure.
#include <benchmark/benchmark.h>

#include "recipdim/factor.hpp"
#include "recipdim/field.hpp"
#include "recipdim/unipoly.hpp"

#include <random>

using namespace recipdim;

namespace {

UniPoly random_poly(const Field& F, int deg, std::mt19937_64& rng) {
  auto q = field_size(F);
  UniPoly f(static_cast<size_t>(deg) + 1);
  for (auto& c : f)
    c = q ? fq_element_by_index(F, bi_mod(BigInt(rng()), *q))
          : Value::integer(F, static_cast<long long>(rng() % 19) - 9);
  if (f.back().is_zero()) f.back() = Value::one(F);
  return f;
}

void bench_unipoly_mul_q(benchmark::State& state) {
  Field Q = make_rationals();
  std::mt19937_64 rng(1);
  UniPoly a = random_poly(Q, static_cast<int>(state.range(0)), rng);
  UniPoly b = random_poly(Q, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(up_mul(a, b));
}
BENCHMARK(bench_unipoly_mul_q)->Arg(8)->Arg(32);

void bench_gcd_fp(benchmark::State& state) {
  Field F = make_prime_field(10007);
  std::mt19937_64 rng(2);
  UniPoly h = random_poly(F, 6, rng);
  UniPoly a = up_mul(random_poly(F, static_cast<int>(state.range(0)), rng), h);
  UniPoly b = up_mul(random_poly(F, static_cast<int>(state.range(0)), rng), h);
  for (auto _ : state) benchmark::DoNotOptimize(up_gcd(a, b));
}
BENCHMARK(bench_gcd_fp)->Arg(8)->Arg(24);

void bench_factor_q(benchmark::State& state) {
  Field Q = make_rationals();
  // (x^4 - 10x^2 + 1)(x^3 - 2)(x^2 + 1): recombination plus lifting
  UniPoly f{Value::one(Q)};
  auto mk = [&](std::initializer_list<long long> asc) {
    UniPoly g;
    for (long long c : asc) g.push_back(Value::integer(Q, c));
    return g;
  };
  f = up_mul(mk({1, 0, -10, 0, 1}), up_mul(mk({-2, 0, 0, 1}), mk({1, 0, 1})));
  for (auto _ : state) benchmark::DoNotOptimize(up_factor(f));
}
BENCHMARK(bench_factor_q);

void bench_factor_fp_split(benchmark::State& state) {
  Field F = make_prime_field(101);
  UniPoly f{Value::zero(F), Value::integer(F, -1)};
  f.resize(102, Value::zero(F));
  f[101] = Value::one(F);  // x^101 - x
  for (auto _ : state) benchmark::DoNotOptimize(up_factor(f));
}
BENCHMARK(bench_factor_fp_split);

}  // namespace

BENCHMARK_MAIN();
