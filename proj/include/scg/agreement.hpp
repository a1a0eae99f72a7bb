#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scg/cost_function.hpp"
#include "scg/game.hpp"
#include "scg/partition.hpp"

namespace scg {

/// A coalition's pure joint action. actions[k] is the resource of members[k].
struct Agreement {
  Coalition members;
  std::vector<int> actions;
  int m = 0;

  int size() const noexcept { return static_cast<int>(actions.size()); }
  /// Loads counting coalition members only.
  LoadVector loads() const;

  /// Members 0..size-1 with actions decoded from `index` in base m
  /// (actions[0] is the least significant digit).
  static Agreement from_index(std::uint64_t index, int size, int m);
};

/// Expected cost to a coalition member as a function of how many coalition
/// members share their resource (v >= 1), outsiders marginalized. Strictly
/// increasing and weakly convex; validated on construction.
class EffectiveCost {
 public:
  explicit EffectiveCost(std::vector<Rational> values);
  explicit EffectiveCost(const CostFunction& f);

  int max_load() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const Rational> values() const noexcept { return values_; }
  const Rational& operator()(int v) const;

  bool operator==(const EffectiveCost&) const = default;

 private:
  std::vector<Rational> values_;
};

/// Uses every resource when the coalition can, otherwise never shares one.
bool is_covering(const Agreement& a);

/// Every member faces the same expected cost.
bool is_envy_free(const Agreement& a, const EffectiveCost& g);

/// No member lowers their expected cost by moving alone to another resource.
bool is_credible(const Agreement& a, const EffectiveCost& g);

enum class ParetoMode {
  fast,    // covering test
  oracle,  // enumerate all m^|C| alternative joint actions
};

/// In oracle mode throws CapExceeded when m^|C| > cap.
bool is_pareto_optimal(const Agreement& a, const EffectiveCost& g, ParetoMode mode = ParetoMode::fast,
                       std::uint64_t cap = 1u << 16);

/// The only load vector (up to resource permutation) realized by qualified
/// agreements of a coalition of this size, or nullopt if none exists.
std::optional<LoadVector> qualified_canonical_loads(int size, int m);

/// m^k, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_power(int m, int k, std::uint64_t limit);

}  // namespace scg
