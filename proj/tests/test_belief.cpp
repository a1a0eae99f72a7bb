#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "scg/belief.hpp"
#include "scg/errors.hpp"

using namespace scg;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("count distributions") {
  CHECK_THROWS_AS(CountPmf(rats({Rational(1, 2)})), ValidationError);
  CHECK_THROWS_AS(CountPmf(rats({Rational(3, 2), Rational(-1, 2)})), ValidationError);
  const CountPmf trimmed(rats({Rational(1), Rational(0)}));
  CHECK(trimmed.max_count() == 0);
  CHECK(CountPmf::point_mass(2)(2) == 1);
  CHECK(CountPmf::point_mass(2)(5) == 0);
}

TEST_CASE("coalition marginals") {
  CHECK(coalition_marginal(6, 3) == CountPmf::point_mass(2));
  CHECK(coalition_marginal(1, 1) == CountPmf::point_mass(1));
  CHECK(coalition_marginal(2, 3) == CountPmf(rats({Rational(1, 3), Rational(2, 3)})));
  CHECK_THROWS_AS(coalition_marginal(4, 3), NoQualifiedAgreement);
}

TEST_CASE("remainder marginal matches permutation enumeration") {
  for (int m = 1; m <= 5; ++m) {
    for (int r = 1; r < m; ++r) {
      std::vector<int> v(m, 0);
      std::fill(v.begin(), v.begin() + r, 1);
      std::vector<int> perm(m);
      for (int i = 0; i < m; ++i) perm[i] = i;
      long total = 0, occupied = 0;
      do {
        ++total;
        // Resource 0 receives whatever the permutation maps onto it.
        occupied += v[perm[0]];
      } while (std::next_permutation(perm.begin(), perm.end()));
      Rational p(occupied, total);
      p.canonicalize();
      CHECK(coalition_marginal(r, m) == CountPmf(rats({1 - p, p})));
    }
  }
}

TEST_CASE("outsider distributions") {
  const Game g7(7, 3, CostFunction::identity(7));
  const auto p61 = Partition::from_sizes({6, 1});
  CHECK(outside_count_pmf(p61, 1, g7) == CountPmf::point_mass(2));
  const auto p322 = Partition::from_sizes({3, 2, 2});
  CHECK(outside_count_pmf(p322, 1, g7) == CountPmf(rats({0, Rational(1, 3), Rational(2, 3)})));
  CHECK_THROWS_AS(outside_count_pmf(p322, 3, g7), ValidationError);
}

TEST_CASE("outsider expectation and order independence") {
  std::mt19937 rng(3);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& sizes : integer_partitions(n)) {
        if (std::any_of(sizes.begin(), sizes.end(),
                        [&](int s) { return classify(s, m) == CoalitionClass::infeasible; }))
          continue;
        const Game g(n, m, CostFunction::identity(n));
        const auto p = Partition::from_sizes(sizes);
        for (std::size_t c = 0; c < p.size(); ++c) {
          const CountPmf mu = outside_count_pmf(p, c, g);
          CHECK(mu.expectation() == scg::testing::frac(n - static_cast<int>(p[c].size()), m));

          std::vector<int> others;
          for (std::size_t d = 0; d < p.size(); ++d)
            if (d != c) others.push_back(static_cast<int>(p[d].size()));
          std::shuffle(others.begin(), others.end(), rng);
          CountPmf acc = CountPmf::point_mass(0);
          for (int s : others) acc = coalition_marginal(s, m).convolve(acc);
          CHECK(acc == mu);
        }
      }
    }
  }
}

TEST_CASE("effective costs") {
  const CountPmf half(rats({Rational(1, 2), Rational(1, 2)}));
  const auto g = effective_cost(CostFunction::identity(5), half);
  CHECK(g.max_load() == 4);
  for (int v = 1; v <= 4; ++v) CHECK(g(v) == v + Rational(1, 2));

  const CountPmf two_thirds(rats({Rational(1, 3), Rational(2, 3)}));
  const auto q = effective_cost(CostFunction::polynomial({0, 0, 1}, 6), two_thirds);
  for (int v = 1; v <= 5; ++v) CHECK(q(v) == Rational(v * v) + scg::testing::frac(4 * v + 2, 3));

  CHECK_THROWS_AS(effective_cost(CostFunction::identity(2), CountPmf::point_mass(2)), ValidationError);
  CHECK_THROWS_AS(effective_cost(CostFunction::identity(3), half, 3), ValidationError);
}

TEST_CASE("subgames") {
  const Game g7(7, 3, CostFunction::identity(7));
  const auto s1 = subgame(g7, Partition::from_sizes({6, 1}), 1);
  CHECK(s1.size == 1);
  CHECK(s1.m == 3);
  CHECK(s1.g(1) == 3);

  const auto s2 = subgame(g7, Partition::from_sizes({3, 2, 2}), 1);
  CHECK(s2.size == 2);
  for (int v = 1; v <= 2; ++v) CHECK(s2.g(v) == v + Rational(5, 3));
}

TEST_CASE("outsider-averaged costs stay increasing and convex") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> len(1, 6), raw(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int support = len(rng);
    std::vector<Rational> mu(support);
    int total = 0;
    for (auto& x : mu) total += (x = raw(rng)).get_num().get_si();
    if (total == 0) {
      mu[0] = 1;
      total = 1;
    }
    for (auto& x : mu) x /= total;
    const int max_v = len(rng);
    const auto f = CostFunction::table(scg::testing::random_convex_table(rng, support - 1 + max_v));
    const auto g = effective_cost(f, CountPmf(mu), max_v);
    CHECK(g.max_load() == max_v);
    for (int v = 1; v < max_v; ++v) CHECK(g(v + 1) > g(v));
    for (int v = 1; v + 1 < max_v; ++v) CHECK(g(v + 2) + g(v) >= 2 * g(v + 1));
  }
}
