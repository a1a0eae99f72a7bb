#include "scg/game.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include "scg/errors.hpp"

namespace scg {

int LoadVector::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

int LoadVector::max() const noexcept { return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()); }

int LoadVector::min() const noexcept { return counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end()); }

LoadVector LoadVector::canonical() const {
  LoadVector out = *this;
  std::sort(out.counts.begin(), out.counts.end(), std::greater<>());
  return out;
}

LoadVector& LoadVector::operator+=(const LoadVector& other) {
  if (other.counts.size() != counts.size()) throw ValidationError("adding load vectors of different lengths");
  for (std::size_t x = 0; x < counts.size(); ++x) counts[x] += other.counts[x];
  return *this;
}

Game::Game(int n, int m, CostFunction f) : n_(n), m_(m), f_(std::move(f)) {
  if (n < 1) throw ValidationError("game needs at least one player");
  if (m < 1) throw ValidationError("game needs at least one resource");
  if (f_.max_load() < n)
    throw ValidationError("cost function covers loads up to " + std::to_string(f_.max_load()) + ", game has " +
                          std::to_string(n) + " players");
}

LoadVector loads(const Outcome& o, int m) {
  LoadVector lv{std::vector<int>(m, 0)};
  for (int a : o.actions) {
    if (a < 0 || a >= m) throw ValidationError("action " + std::to_string(a) + " outside 0.." + std::to_string(m - 1));
    ++lv.counts[a];
  }
  return lv;
}

namespace {

void check_outcome(const Game& g, const Outcome& o) {
  if (static_cast<int>(o.actions.size()) != g.players())
    throw ValidationError("outcome has " + std::to_string(o.actions.size()) + " actions for " +
                          std::to_string(g.players()) + " players");
}

}  // namespace

Rational player_cost(const Game& g, const Outcome& o, int player) {
  check_outcome(g, o);
  if (player < 0 || player >= g.players()) throw ValidationError("player index " + std::to_string(player) + " out of range");
  const LoadVector lv = loads(o, g.resources());
  return g.cost()(lv.counts[o.actions[player]]);
}

Rational total_cost(const CostFunction& f, const LoadVector& lv) {
  Rational sum = 0;
  for (int c : lv.counts)
    if (c > 0) sum += c * f(c);
  return sum;
}

Rational total_cost(const Game& g, const Outcome& o) {
  check_outcome(g, o);
  return total_cost(g.cost(), loads(o, g.resources()));
}

Rational max_cost(const CostFunction& f, const LoadVector& lv) {
  const int top = lv.max();
  if (top < 1) throw ValidationError("max cost of an empty load vector");
  return f(top);
}

Rational max_cost(const Game& g, const Outcome& o) {
  check_outcome(g, o);
  return max_cost(g.cost(), loads(o, g.resources()));
}

bool is_evenly_distributed(const LoadVector& lv) { return lv.max() - lv.min() <= 1; }

LoadVector even_loads(int n, int m) {
  LoadVector lv{std::vector<int>(m, n / m)};
  for (int x = 0; x < n % m; ++x) ++lv.counts[x];
  return lv;
}

OptimalCosts optimal_costs(const Game& g) {
  const LoadVector even = even_loads(g.players(), g.resources());
  return {total_cost(g.cost(), even), max_cost(g.cost(), even)};
}

}  // namespace scg
