#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scg/agreement.hpp"
#include "scg/game.hpp"
#include "scg/partition.hpp"

namespace scg {

/// Distribution of the number of outsiders (or outsider weight) landing on a
/// given resource. Identical for every resource under the symmetric prior.
class CountPmf {
 public:
  /// probabilities[u] = Pr(u). Must be non-negative and sum to 1.
  explicit CountPmf(std::vector<Rational> probabilities);

  static CountPmf point_mass(int u);

  int max_count() const noexcept { return static_cast<int>(p_.size()) - 1; }
  std::span<const Rational> probabilities() const noexcept { return p_; }
  Rational operator()(int u) const;
  Rational expectation() const;

  /// Distribution of the sum of two independent counts.
  CountPmf convolve(const CountPmf& other) const;

  bool operator==(const CountPmf&) const = default;

 private:
  std::vector<Rational> p_;
};

/// Per-resource load contributed by a coalition of `size` playing its
/// qualified agreement under a uniform resource relabelling. Throws
/// NoQualifiedAgreement for infeasible sizes.
CountPmf coalition_marginal(int size, int m);

/// Outsider load on one resource as seen from coalition `coalition_index`:
/// the independent sum of every other coalition's marginal.
CountPmf outside_count_pmf(const Partition& p, std::size_t coalition_index, const Game& g);

/// g(v) = sum_u mu(u) f(u+v) for v = 1..max_v. Defaults max_v to the largest
/// load f can absorb on top of mu's support. Throws ValidationError when f
/// does not cover u+v.
EffectiveCost effective_cost(const CostFunction& f, const CountPmf& mu, int max_v = -1);

/// A coalition viewed as a stand-alone game with an effective cost.
struct Subgame {
  int size;
  int m;
  EffectiveCost g;
};

Subgame subgame(const Game& g, const Partition& p, std::size_t coalition_index);

}  // namespace scg
