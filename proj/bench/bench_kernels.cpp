// OpenMP kernels against their serial references on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "glnq/class_table.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/flags.hpp"
#include "glnq/kernels.hpp"
#include "glnq/matrix_io.hpp"

using namespace glnq;

namespace {

const std::vector<Matrix>& a7() {
  static const auto ys = load_matrix_set(std::string(GLNQ_FIXTURE_DIR) + "/a7_gl42.glnq").elements;
  return ys;
}

std::vector<Matrix> random_set(unsigned n, unsigned q, std::size_t count) {
  std::mt19937_64 rng(17);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_invertible(field_of_order(q), n, rng));
  return out;
}

template <auto Fn>
void quotient_tally(benchmark::State& state) {
  const ClassTable& t = class_table(field_of_order(2), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(t, a7()));
  state.SetItemsProcessed(state.iterations() * a7().size() * a7().size());
}

template <auto Fn>
void rank_tally(benchmark::State& state) {
  const auto ys = random_set(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)), 1500);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(ys));
  state.SetItemsProcessed(state.iterations() * ys.size() * ys.size());
}

template <auto Fn>
void gl_classes(benchmark::State& state) {
  const ClassTable& t = class_table(field_of_order(static_cast<unsigned>(state.range(1))),
                                    static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(t));
}

template <auto Fn>
void fixed_dims(benchmark::State& state) {
  const Field& f = field_of_order(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, static_cast<unsigned>(state.range(0))));
}

template <auto Fn>
void transitivity(benchmark::State& state) {
  const Field& f2 = field_of_order(2);
  const FlagSpec spec = parse_flag_spec("rho=3,1 I=1,2");
  const auto flags = enumerate_flags(f2, spec);
  const FlagIndex index = index_flags(flags);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a7(), spec, flags, index, 1));
}

template <auto Fn>
void coefficients(benchmark::State& state) {
  const ClassTable& t = class_table(field_of_order(2), 4);
  const auto codes = t.class_codes(t.size() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(t, codes));
}

}  // namespace

BENCHMARK(quotient_tally<kernels::quotient_class_tally>)->Name("quotient_class_tally/kernel");
BENCHMARK(quotient_tally<reference::quotient_class_tally>)->Name("quotient_class_tally/reference");
BENCHMARK(rank_tally<kernels::rank_distance_tally>)->Name("rank_distance_tally/kernel")->Args({4, 2})->Args({6, 2})->Args({3, 3});
BENCHMARK(rank_tally<reference::rank_distance_tally>)->Name("rank_distance_tally/reference")->Args({4, 2})->Args({6, 2})->Args({3, 3});
BENCHMARK(gl_classes<kernels::gl_class_tally>)->Name("gl_class_tally/kernel")->Args({4, 2})->Args({3, 3});
BENCHMARK(gl_classes<reference::gl_class_tally>)->Name("gl_class_tally/reference")->Args({4, 2})->Args({3, 3});
BENCHMARK(fixed_dims<kernels::gl_fixed_dim_tally>)->Name("gl_fixed_dim_tally/kernel")->Args({4, 2})->Args({3, 3});
BENCHMARK(fixed_dims<reference::gl_fixed_dim_tally>)->Name("gl_fixed_dim_tally/reference")->Args({4, 2})->Args({3, 3});
BENCHMARK(transitivity<kernels::transitivity_rows_constant>)->Name("transitivity_rows_constant/kernel");
BENCHMARK(transitivity<reference::transitivity_rows_constant>)->Name("transitivity_rows_constant/reference");
BENCHMARK(coefficients<kernels::class_coefficients>)->Name("class_coefficients/kernel");
BENCHMARK(coefficients<reference::class_coefficients>)->Name("class_coefficients/reference");

BENCHMARK_MAIN();
