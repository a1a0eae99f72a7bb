#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scg/errors.hpp"
#include "scg/kernels.hpp"

using namespace scg;
using namespace scg::kernels;

TEST_CASE("outcome decoding") {
  CHECK(decode_outcome(5, 3, 2).actions == std::vector<int>{1, 0, 1});
  CHECK(decode_outcome(0, 2, 3).actions == std::vector<int>{0, 0});
}

TEST_CASE("outcome scans: serial and parallel agree") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& f : scg::testing::standard_costs(n)) {
        const Game g(n, m, f);
        const auto s = scan_outcomes_serial(g);
        CHECK(s == scan_outcomes_parallel(g));
        const auto best = optimal_costs(g);
        CHECK(s.min_total == best.total);
        CHECK(s.min_max == best.max);
        CHECK(s.total_optimal_uneven == 0);
        CHECK(s.even_not_total_optimal == 0);
        CHECK(s.total_optimal == s.even);
      }
    }
  }
}

TEST_CASE("outcome scan of seven players on three resources") {
  const Game g(7, 3, CostFunction::identity(7));
  const auto s = scan_outcomes_parallel(g);
  CHECK(s.outcomes == 2187);
  // 3 placements of the (3,2,2) class, 7!/(3!2!2!) = 210 outcomes each.
  CHECK(s.even == 630);
  REQUIRE(s.max_optimal_uneven_witness);
  const auto lv = loads(decode_outcome(*s.max_optimal_uneven_witness, 7, 3), 3);
  CHECK(lv.canonical().counts == std::vector<int>{3, 3, 1});
  CHECK_THROWS_AS(scan_outcomes_serial(g, 1000), CapExceeded);
}

TEST_CASE("agreement sweeps: serial and parallel agree") {
  for (int m = 2; m <= 3; ++m)
    for (int size = 1; size <= 5; ++size)
      for (const auto& f : scg::testing::standard_costs(size)) {
        const EffectiveCost g(f);
        CHECK(sweep_agreements_serial(size, m, g) == sweep_agreements_parallel(size, m, g));
      }
}

TEST_CASE("MNP scans: serial and parallel agree") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> wdist(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> w(1 + trial % 9);
    for (int& x : w) x = wdist(rng);
    const int m = 1 + trial % 4;
    for (auto obj : {MnpObjective::minimax, MnpObjective::maximin, MnpObjective::min_gap, MnpObjective::min_var})
      CHECK(scan_mnp_serial(w, m, obj) == scan_mnp_parallel(w, m, obj));
  }
}
