#pragma once

// Exhaustive enumeration kernels. Each comes as a serial reference and an
// OpenMP version; both must return identical results (witnesses are the
// smallest enumeration index in their class, so merging is deterministic).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scg/agreement.hpp"
#include "scg/game.hpp"
#include "scg/weighted.hpp"

namespace scg::kernels {

/// Summary of all m^n outcomes of a game.
struct OutcomeScan {
  std::uint64_t outcomes = 0;
  Rational min_total;
  Rational min_max;
  std::uint64_t total_optimal = 0;         // outcomes attaining min_total
  std::uint64_t total_optimal_uneven = 0;  // ... that are not evenly distributed
  std::uint64_t even = 0;
  std::uint64_t even_not_total_optimal = 0;
  std::uint64_t max_optimal = 0;
  std::uint64_t max_optimal_uneven = 0;
  std::optional<std::uint64_t> max_optimal_uneven_witness;  // outcome index

  bool operator==(const OutcomeScan&) const = default;
};

/// Outcome index i decodes to actions[k] = (i / m^k) mod m.
Outcome decode_outcome(std::uint64_t index, int n, int m);

/// Throws CapExceeded when m^n > cap.
OutcomeScan scan_outcomes_serial(const Game& g, std::uint64_t cap = 1u << 20);
OutcomeScan scan_outcomes_parallel(const Game& g, std::uint64_t cap = 1u << 20);

/// Region of an agreement by (covering, envy-free, credible).
constexpr std::size_t region_index(bool covering, bool envy_free, bool credible) {
  return (covering ? 4u : 0u) | (envy_free ? 2u : 0u) | (credible ? 1u : 0u);
}

/// All m^size agreements of a coalition under effective cost g.
struct AgreementSweep {
  std::uint64_t agreements = 0;
  std::array<std::uint64_t, 8> region_counts{};
  std::array<std::optional<std::uint64_t>, 8> region_witness{};  // agreement index
  std::uint64_t covering_pareto_mismatch = 0;  // covering != Pareto (oracle)
  std::optional<std::uint64_t> first_mismatch;

  bool operator==(const AgreementSweep&) const = default;
};

AgreementSweep sweep_agreements_serial(int size, int m, const EffectiveCost& g, std::uint64_t cap = 1u << 16);
AgreementSweep sweep_agreements_parallel(int size, int m, const EffectiveCost& g, std::uint64_t cap = 1u << 16);

/// All m^k bin assignments of the weights.
struct MnpScan {
  long long best_score = 0;
  std::uint64_t best_index = 0;  // smallest index attaining best_score
  std::vector<LoadVector> optimal_loads;  // canonical, sorted, unique

  bool operator==(const MnpScan&) const = default;
};

MnpScan scan_mnp_serial(std::span<const int> weights, int m, MnpObjective obj, std::uint64_t cap = 1u << 20);
MnpScan scan_mnp_parallel(std::span<const int> weights, int m, MnpObjective obj, std::uint64_t cap = 1u << 20);

}  // namespace scg::kernels
