#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scg/errors.hpp"
#include "scg/game.hpp"

using namespace scg;
using scg::testing::all_outcomes;

namespace {

std::vector<Rational> table_of(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(parse_rational("1.1") == Rational(11, 10));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("cost validation") {
  CHECK_FALSE(validate_cost_function(CostFunction::identity(10)));
  CHECK_FALSE(validate_cost_values(table_of({1, 2, 4, 8})));

  auto v = validate_cost_values(table_of({1, 3, 4}));
  REQUIRE(v);
  CHECK(v->kind == CostViolation::Kind::convexity);
  CHECK(v->index == 1);

  v = validate_cost_values(table_of({2, 2, 3}));
  REQUIRE(v);
  CHECK(v->kind == CostViolation::Kind::monotonicity);
  CHECK(v->index == 1);

  CHECK_THROWS_AS(validate_cost_values(std::vector<Rational>{}), ValidationError);
  CHECK_THROWS_AS(CostFunction::table(table_of({1, 3, 4})), ValidationError);
  CHECK_THROWS_AS(CostFunction::linear(0, 1, 4), ValidationError);
  CHECK_NOTHROW(CostFunction::table(table_of({5})));
}

TEST_CASE("cost kinds evaluate their formulas") {
  const auto lin = CostFunction::linear(2, 1, 5);
  CHECK(lin(3) == 7);
  const auto quad = CostFunction::polynomial({0, 0, 1}, 5);
  CHECK(quad(4) == 16);
  const auto ex = CostFunction::exponential(2, 1, 8);
  CHECK(ex(1) == 1);
  CHECK(ex(8) == 128);
  CHECK_THROWS_AS(lin(0), ValidationError);
  CHECK_THROWS_AS(lin(6), ValidationError);

  CHECK(quad.with_max_load(9)(9) == 81);
  const auto tab = CostFunction::table(table_of({1, 2, 4}));
  CHECK(tab.with_max_load(2).max_load() == 2);
  CHECK_THROWS_AS(tab.with_max_load(4), ValidationError);
}

TEST_CASE("loads and per-player cost") {
  const Game g(3, 2, CostFunction::identity(3));
  CHECK(loads(Outcome{{0, 0, 1}}, 2).counts == std::vector<int>{2, 1});
  CHECK(loads(Outcome{{0, 0, 0}}, 2).counts == std::vector<int>{3, 0});
  CHECK(loads(Outcome{{0, 0, 0, 0}}, 3).counts == std::vector<int>{4, 0, 0});
  CHECK_THROWS_AS(loads(Outcome{{0, 2}}, 2), ValidationError);

  CHECK(player_cost(g, Outcome{{0, 0, 1}}, 0) == 2);
  CHECK(player_cost(g, Outcome{{0, 0, 0}}, 2) == 3);
  const Game t(3, 2, CostFunction::table(table_of({1, 2, 4})));
  CHECK(player_cost(t, Outcome{{0, 0, 1}}, 2) == 1);
  CHECK_THROWS_AS(player_cost(g, Outcome{{0, 0, 1}}, 3), ValidationError);
}

TEST_CASE("total and max cost") {
  const auto f = CostFunction::identity(7);
  CHECK(total_cost(f, LoadVector{{3, 2, 2}}) == 17);
  CHECK(total_cost(f, LoadVector{{3, 3, 1}}) == 19);
  CHECK(max_cost(f, LoadVector{{3, 2, 2}}) == 3);
  CHECK(max_cost(f, LoadVector{{3, 3, 1}}) == 3);
  const auto q = CostFunction::polynomial({1, 0, 1}, 4);
  CHECK(total_cost(q, LoadVector{{1, 1, 1, 1}}) == 4 * q(1));
  CHECK(max_cost(q, LoadVector{{1, 1, 1}}) == q(1));
}

TEST_CASE("even distribution") {
  CHECK(is_evenly_distributed(LoadVector{{3, 2, 2}}));
  CHECK_FALSE(is_evenly_distributed(LoadVector{{3, 3, 1}}));
  CHECK(is_evenly_distributed(LoadVector{{2, 2, 2}}));
  CHECK(even_loads(7, 3).counts == std::vector<int>{3, 2, 2});
  CHECK(even_loads(2, 4).counts == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("optimal costs match frozen brute-force values") {
  // Frozen from scg::testing brute force over all outcomes (see next case).
  auto oc = optimal_costs(Game(7, 3, CostFunction::identity(7)));
  CHECK(oc.total == 17);
  CHECK(oc.max == 3);
  oc = optimal_costs(Game(6, 3, CostFunction::identity(6)));
  CHECK(oc.total == 12);
  CHECK(oc.max == 2);
  oc = optimal_costs(Game(3, 2, CostFunction::identity(3)));
  CHECK(oc.total == 5);
  CHECK(oc.max == 2);
}

TEST_CASE("the two forms of total cost agree, and optima are even") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& f : scg::testing::standard_costs(n)) {
        const Game g(n, m, f);
        const auto best = optimal_costs(g);
        Rational min_total, min_max;
        bool first = true;
        for (const auto& a : all_outcomes(n, m)) {
          const Outcome o{a};
          const Rational t = scg::testing::per_player_total(f, a, m);
          const Rational mx = scg::testing::per_player_max(f, a, m);
          REQUIRE(t == total_cost(g, o));
          REQUIRE(mx == max_cost(g, o));
          if (first || t < min_total) min_total = t;
          if (first || mx < min_max) min_max = mx;
          first = false;
        }
        CHECK(min_total == best.total);
        CHECK(min_max == best.max);
        for (const auto& a : all_outcomes(n, m)) {
          const Outcome o{a};
          CHECK((total_cost(g, o) == best.total) == is_evenly_distributed(loads(o, m)));
        }
      }
    }
  }
}

TEST_CASE("game validation") {
  CHECK_THROWS_AS(Game(0, 2, CostFunction::identity(3)), ValidationError);
  CHECK_THROWS_AS(Game(3, 0, CostFunction::identity(3)), ValidationError);
  CHECK_THROWS_AS(Game(4, 2, CostFunction::identity(3)), ValidationError);
}

TEST_CASE("mixtures") {
  const auto id = CostFunction::identity(6);
  const auto steeper = CostFunction::linear(Rational(11, 10), 0, 6);
  const std::vector<MixtureComponent> two{{Rational(1, 2), id}, {Rational(1, 2), steeper}};
  const auto g = mixture_cost_function(two);
  for (int k = 1; k <= 6; ++k) CHECK(g(k) == scg::testing::frac(21 * k, 20));
  CHECK_FALSE(validate_cost_function(g));

  const std::vector<MixtureComponent> one{{Rational(1), id}};
  CHECK(mixture_cost_function(one).values().size() == 6);
  for (int k = 1; k <= 6; ++k) CHECK(mixture_cost_function(one)(k) == id(k));

  const std::vector<MixtureComponent> tabs{{Rational(1, 2), CostFunction::table(table_of({1, 2, 4}))},
                                           {Rational(1, 2), CostFunction::table(table_of({1, 3, 9}))}};
  const auto mt = mixture_cost_function(tabs);
  CHECK(mt(1) == 1);
  CHECK(mt(2) == Rational(5, 2));
  CHECK(mt(3) == Rational(13, 2));

  const std::vector<MixtureComponent> bad{{Rational(1, 3), id}, {Rational(1, 3), steeper}};
  CHECK_THROWS_AS(mixture_cost_function(bad), ValidationError);
}

TEST_CASE("random mixtures of valid costs stay valid") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> parts(1, 4), weight(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 2 + trial % 7;
    const int k = parts(rng);
    std::vector<int> ws(k);
    int sum = 0;
    for (int& w : ws) sum += (w = weight(rng));
    std::vector<MixtureComponent> comps;
    for (int j = 0; j < k; ++j)
      comps.push_back({Rational(ws[j], sum), CostFunction::table(scg::testing::random_convex_table(rng, len))});
    for (auto& c : comps) c.probability.canonicalize();
    CHECK_FALSE(validate_cost_function(mixture_cost_function(comps)));
  }
}
