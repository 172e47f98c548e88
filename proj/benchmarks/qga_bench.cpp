#include "qga/camina.hpp"
#include "qga/char_table.hpp"
#include "qga/cyclotomic.hpp"
#include "qga/families.hpp"
#include "qga/group_algebra.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace qga;

namespace {

Group group_of(const char* spec) { return build_family(parse_family_spec(spec)); }

// dense element with small varied coefficients
AlgebraElement dense_element(const Group& g, int shift) {
  AlgebraElement a(g);
  for (int x = 0; x < g.order(); ++x)
    a.at(x) = make_rational((x + shift) % 7 - 3, (x % 4) + 1);
  return a;
}

void BM_character_table(benchmark::State& state, const char* spec) {
  Group g = group_of(spec);
  for (auto _ : state) {
    CharacterTable t = dixon_character_table(g);
    benchmark::DoNotOptimize(t);
  }
}

void BM_class_mult_table(benchmark::State& state, const char* spec) {
  Group g = group_of(spec);
  for (auto _ : state) {
    auto a = class_mult_table(g);
    benchmark::DoNotOptimize(a);
  }
}

void BM_algebra_product(benchmark::State& state, const char* spec) {
  Group g = group_of(spec);
  AlgebraElement a = dense_element(g, 1);
  AlgebraElement b = dense_element(g, 4);
  for (auto _ : state) {
    AlgebraElement c = a * b;
    benchmark::DoNotOptimize(c);
  }
}

void BM_rational_idempotent(benchmark::State& state, const char* spec) {
  Group g = group_of(spec);
  CharacterTable t = dixon_character_table(g);
  int last = static_cast<int>(t.chars.size()) - 1;  // highest degree after sorting
  for (auto _ : state) {
    AlgebraElement e = rational_idempotent(t, last);
    benchmark::DoNotOptimize(e);
  }
}

void BM_component_dimension(benchmark::State& state, const char* spec) {
  Group g = group_of(spec);
  CharacterTable t = dixon_character_table(g);
  AlgebraElement e = rational_idempotent(t, static_cast<int>(t.chars.size()) - 1);
  for (auto _ : state) {
    long d = component_dimension(e);
    benchmark::DoNotOptimize(d);
  }
}

void BM_complete_set(benchmark::State& state, const char* spec) {
  Group g = group_of(spec);
  CharacterTable t = dixon_character_table(g);
  CaminaProfile prof = camina_profile(g);
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CompleteSetReport rep = verify_complete_set(t, prof, threads);
    benchmark::DoNotOptimize(rep);
  }
}

void BM_cyclotomic_product(benchmark::State& state, long n) {
  std::map<long, Rational> ta, tb;
  for (long k = 0; k < n; k += 2) ta[k] = make_rational(k + 1, k % 5 + 1);
  for (long k = 1; k < n; k += 3) tb[k] = make_rational(k - 7, k % 3 + 2);
  Cyclotomic a = Cyclotomic::reduce(n, ta);
  Cyclotomic b = Cyclotomic::reduce(n, tb);
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c);
  }
}

void BM_cyclotomic_polynomial(benchmark::State& state, long n) {
  for (auto _ : state) {
    auto coeffs = cyclotomic_polynomial(n);
    benchmark::DoNotOptimize(coeffs);
  }
}

BENCHMARK_CAPTURE(BM_character_table, heisenberg_27, "extraspecial:p=3,n=1,exp=p")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_character_table, extraspecial_32, "extraspecial:p=2,n=2,type=-")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_character_table, extraspecial_125, "extraspecial:p=5,n=1,exp=p")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_character_table, extraspecial_243, "extraspecial:p=3,n=2,exp=p")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_class_mult_table, extraspecial_243, "extraspecial:p=3,n=2,exp=p")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_algebra_product, heisenberg_27, "extraspecial:p=3,n=1,exp=p");
BENCHMARK_CAPTURE(BM_algebra_product, extraspecial_128, "extraspecial:p=2,n=3,type=+")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_rational_idempotent, heisenberg_27, "extraspecial:p=3,n=1,exp=p");

BENCHMARK_CAPTURE(BM_component_dimension, quaternion_8, "quaternion:8");
BENCHMARK_CAPTURE(BM_component_dimension, heisenberg_27, "extraspecial:p=3,n=1,exp=p")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_complete_set, extraspecial_32, "extraspecial:p=2,n=2,type=+")
    ->Arg(1)
    ->Arg(4)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_cyclotomic_product, conductor_105, 105);
BENCHMARK_CAPTURE(BM_cyclotomic_product, conductor_243, 243);

BENCHMARK_CAPTURE(BM_cyclotomic_polynomial, n_105, 105);
BENCHMARK_CAPTURE(BM_cyclotomic_polynomial, n_3125, 3125);

}  // namespace

BENCHMARK_MAIN();
