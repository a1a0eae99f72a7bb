#pragma once

#include <compare>
#include <span>
#include <vector>

#include "scg/cost_function.hpp"

namespace scg {

/// Number of players (or total weight) on each resource.
struct LoadVector {
  std::vector<int> counts;

  int resources() const noexcept { return static_cast<int>(counts.size()); }
  int total() const noexcept;
  int max() const noexcept;
  int min() const noexcept;

  /// Descending sort: the representative of the vector's permutation class.
  LoadVector canonical() const;

  LoadVector& operator+=(const LoadVector& other);

  auto operator<=>(const LoadVector&) const = default;
  bool operator==(const LoadVector&) const = default;
};

/// A pure strategy profile: the resource chosen by each player.
struct Outcome {
  std::vector<int> actions;

  bool operator==(const Outcome&) const = default;
};

/// Singleton congestion game with n players on m identical resources.
class Game {
 public:
  /// Throws ValidationError unless n >= 1, m >= 1 and f covers loads up to n.
  Game(int n, int m, CostFunction f);

  int players() const noexcept { return n_; }
  int resources() const noexcept { return m_; }
  const CostFunction& cost() const noexcept { return f_; }

 private:
  int n_;
  int m_;
  CostFunction f_;
};

/// Throws ValidationError if an action is outside 0..m-1.
LoadVector loads(const Outcome& o, int m);

Rational player_cost(const Game& g, const Outcome& o, int player);

/// Total cost over all players, computed per resource as sum_x n_x f(n_x).
Rational total_cost(const CostFunction& f, const LoadVector& lv);
Rational total_cost(const Game& g, const Outcome& o);

/// Cost on the most loaded resource.
Rational max_cost(const CostFunction& f, const LoadVector& lv);
Rational max_cost(const Game& g, const Outcome& o);

bool is_evenly_distributed(const LoadVector& lv);

/// Load vector with n mod m resources at floor(n/m)+1 and the rest at floor(n/m).
LoadVector even_loads(int n, int m);

struct OptimalCosts {
  Rational total;
  Rational max;
};

/// Social optima, evaluated on the even load vector.
OptimalCosts optimal_costs(const Game& g);

}  // namespace scg
