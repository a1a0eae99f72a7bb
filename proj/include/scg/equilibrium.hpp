#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scg/game.hpp"
#include "scg/partition.hpp"

namespace scg {

struct SupportPoint {
  LoadVector loads;
  Rational probability;

  bool operator==(const SupportPoint&) const = default;
};

/// A coalition's qualified agreement mixed uniformly over resource
/// relabellings, at load-vector granularity.
struct CoalitionBehaviour {
  LoadVector canonical_loads;
  std::vector<SupportPoint> support;  // sorted by loads

  bool operator==(const CoalitionBehaviour&) const = default;
};

/// Throws NoQualifiedAgreement for infeasible sizes.
CoalitionBehaviour coalition_behaviour(int size, int m);

/// Product of independent coalition behaviours.
struct InducedProfile {
  std::vector<CoalitionBehaviour> behaviours;  // one per coalition, partition order
  std::vector<SupportPoint> support;           // combined loads, sorted

  bool operator==(const InducedProfile&) const = default;
};

/// Some coalition has no envy-free, credible, Pareto-optimal agreement.
struct NoEquilibrium {
  std::size_t coalition_index;
  Coalition players;

  std::string describe() const;
  bool operator==(const NoEquilibrium&) const = default;
};

using InduceResult = std::variant<InducedProfile, NoEquilibrium>;

/// Joint distribution of combined loads from independent coalition supports.
std::vector<SupportPoint> combine_supports(const std::vector<CoalitionBehaviour>& behaviours, int m);

InduceResult induce(const Game& g, const Partition& p);

/// Every outcome in the support minimizes total cost.
bool is_profile_bar_c_optimal(const InducedProfile& pr, const Game& g);
/// Every outcome in the support minimizes the cost of the most loaded resource.
bool is_profile_hat_c_optimal(const InducedProfile& pr, const Game& g);

/// Independent route to induce(): enumerates every pure agreement of every
/// coalition, derives outsider beliefs from the other coalitions' qualified
/// agreements, filters by the predicates (Pareto by enumeration), and mixes
/// uniformly over the qualified set. Iterates beliefs to a fixed point.
/// Throws CapExceeded when m^n > cap.
InduceResult brute_force_profile_oracle(const Game& g, const Partition& p, std::uint64_t cap = 6561);

/// One row of a partition sweep.
struct PartitionRow {
  Partition partition;
  std::vector<int> sizes;
  bool balanced = false;
  bool equilibrium_exists = false;
  bool bar_c_optimal = false;
  bool hat_c_optimal = false;
  std::size_t support_size = 0;
  std::optional<Rational> min_support_total;
  std::optional<Rational> max_support_total;
  std::optional<NoEquilibrium> failure;
};

PartitionRow analyze_partition(const Game& g, const Partition& p);

enum class PartitionScope {
  by_sizes,  // one partition per size multiset
  all,       // every set partition
};

struct Theorem1Report {
  int n;
  int m;
  std::vector<PartitionRow> rows;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks, for every partition in scope, that (equilibrium exists and is
/// total-cost optimal) <=> balanced, and balanced => max-cost optimal.
/// Rows are evaluated in parallel and reported in enumeration order.
Theorem1Report verify_theorem_1(int n, int m, const CostFunction& f,
                                PartitionScope scope = PartitionScope::by_sizes, int bound = 10);

}  // namespace scg
