#include <doctest.h>

#include <algorithm>
#include <omp.h>
#include <random>

#include "glnq/constructions.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/kernels.hpp"

using namespace glnq;

namespace {

const std::pair<unsigned, unsigned> kGroups[] = {{2, 2}, {3, 2}, {2, 3}, {2, 4}, {4, 2}, {3, 3}};

std::vector<Matrix> sample(const Field& f, unsigned n, std::size_t count, std::mt19937_64& rng) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_invertible(f, n, rng));
  return out;
}

}  // namespace

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937_64 rng(211);
  // Exercise real partitioning even on a single core.
  omp_set_num_threads(4);
  for (auto [n, q] : kGroups) {
    CAPTURE(n);
    CAPTURE(q);
    const Field& f = field_of_order(q);
    const ClassTable& t = class_table(f, n);
    const auto ys = sample(f, n, 150, rng);

    CHECK(kernels::class_tally(t, ys) == reference::class_tally(t, ys));
    CHECK(kernels::quotient_class_tally(t, ys) == reference::quotient_class_tally(t, ys));
    CHECK(kernels::rank_distance_tally(ys) == reference::rank_distance_tally(ys));
    if (n * n <= 9 || (n == 4 && q == 2)) {
      CHECK(kernels::gl_class_tally(t) == reference::gl_class_tally(t));
      CHECK(kernels::gl_fixed_dim_tally(f, n) == reference::gl_fixed_dim_tally(f, n));
    }

    // Class coefficients for a few classes.
    if (t.has_lookup()) {
      for (std::size_t c = 0; c < t.size(); c += 3) {
        const auto codes = t.class_codes(c);
        CHECK(kernels::class_coefficients(t, codes) == reference::class_coefficients(t, codes));
      }
    }
  }
  // Rank distances over F_2 with more than four rows use a wider packing.
  const Field& f2 = field_of_order(2);
  for (unsigned n : {5u, 6u, 8u}) {
    const auto ys = sample(f2, n, 60, rng);
    CHECK(kernels::rank_distance_tally(ys) == reference::rank_distance_tally(ys));
  }
}

TEST_CASE("transitivity kernels agree") {
  const Field& f2 = field_of_order(2);
  std::mt19937_64 rng(223);
  const auto gl3 = enumerate_gl(f2, 3);
  for (const char* text : {"rho=1,2 I=1", "rho=1,1,1 I=1,2,3", "rho=2,1 I=1,2", "rho=3 I=1"}) {
    const FlagSpec spec = parse_flag_spec(text);
    const auto flags = enumerate_flags(f2, spec);
    const FlagIndex index = index_flags(flags);
    std::vector<std::vector<Matrix>> sets{gl3, singer_cycle(f2, 3), gamma_l1(f2, 3)};
    for (int rep = 0; rep < 5; ++rep) sets.push_back(sample(f2, 3, 21 * (1 + rep), rng));
    for (const auto& ys : sets) {
      if (ys.size() % flags.size()) continue;
      const std::uint64_t r = ys.size() / flags.size();
      CHECK(kernels::transitivity_rows_constant(ys, spec, flags, index, r) ==
            reference::transitivity_rows_constant(ys, spec, flags, index, r));
    }
  }
}
