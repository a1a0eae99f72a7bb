#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scg/agreement.hpp"
#include "scg/game.hpp"
#include "scg/partition.hpp"

namespace scg {

/// Players with positive integer weights; loads are total weight per resource.
class WeightedGame {
 public:
  /// Throws ValidationError unless weights are >= 1, m >= 1 and f covers
  /// loads up to the total weight.
  WeightedGame(std::vector<int> weights, int m, CostFunction f);

  int players() const noexcept { return static_cast<int>(weights_.size()); }
  int resources() const noexcept { return m_; }
  int total_weight() const noexcept { return total_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  const CostFunction& cost() const noexcept { return f_; }

 private:
  std::vector<int> weights_;
  int m_;
  int total_;
  CostFunction f_;
};

LoadVector weighted_loads(std::span<const int> weights, const Outcome& o, int m);

/// sum_x n_x f(n_x) over weight loads.
Rational weighted_total_cost(const WeightedGame& g, const Outcome& o);
/// Unit cost of the most loaded resource (not the largest player cost).
Rational weighted_max_cost(const WeightedGame& g, const Outcome& o);

/// A weighted coalition's pure joint action.
struct WeightedAgreement {
  std::vector<int> weights;
  std::vector<int> actions;
  int m = 0;

  int size() const noexcept { return static_cast<int>(actions.size()); }
  LoadVector loads() const;
  /// Load on each member's resource minus their own weight.
  std::vector<int> base_weights() const;
};

bool weighted_is_covering(const WeightedAgreement& a);

/// Moving member i alone to resource k costs g(n_k + w_i); the agreement is
/// credible if that is never cheaper than g(n_{a_i}).
bool weighted_is_credible(const WeightedAgreement& a, const EffectiveCost& g);

/// No member prefers to take over another member's slot: for members on
/// different resources, g(n_{a_i}) <= g(n_{a_j} - w_j + w_i) both ways, i.e.
/// equal base weights.
bool weighted_is_envy_free(const WeightedAgreement& a, const EffectiveCost& g);

/// Dominance over all m^|C| alternatives (member cost w_i g(n), compared
/// per member). Throws CapExceeded when m^|C| > cap.
bool weighted_is_pareto_optimal(const WeightedAgreement& a, const EffectiveCost& g,
                                std::uint64_t cap = 1u << 16);

/// `groups` resources each shared by `group_size` players of weight `weight`.
struct WeightGroup {
  int weight;
  int group_size;
  int groups;

  bool operator==(const WeightGroup&) const = default;
};

/// Shape of a qualified weighted agreement. With |C| <= m every member sits
/// alone (`all_distinct`); otherwise every resource carries players of one
/// weight w, b/w + 1 of them, so every member sees base weight b. A single
/// resource is the exception: envy needs two occupied resources.
struct QualifiedStructure {
  bool all_distinct = false;
  /// m = 1 and |C| > 1: everyone shares the only resource, no pair to envy.
  bool single_resource = false;
  int base_weight = 0;
  std::vector<WeightGroup> groups;  // ascending weight; empty when all_distinct

  /// Canonical per-resource loads (descending).
  LoadVector loads(int m, std::span<const int> weights) const;
  bool operator==(const QualifiedStructure&) const = default;
};

std::optional<QualifiedStructure> weighted_qualified_conditions(std::span<const int> weights, int m);

enum class MnpObjective { minimax, maximin, min_gap, min_var };

std::string to_string(MnpObjective obj);
/// Accepts "minimax", "maximin", "min_gap"/"min-gap", "min_var"/"min-var".
MnpObjective parse_objective(std::string_view text);

/// Objective score; lower is better for every objective (maximin is negated).
long long mnp_score(const LoadVector& lv, MnpObjective obj);
/// Objective value as reported: max, min, max - min, or sum of squares.
long long mnp_value(const LoadVector& lv, MnpObjective obj);

enum class MnpMethod {
  automatic,         // exhaustive within cap, branch-and-bound beyond
  exhaustive,        // parallel enumeration of all m^k assignments
  branch_and_bound,  // serial depth-first search
};

struct MnpSolution {
  std::vector<int> assignment;            // bin per weight, input order
  LoadVector loads;                       // loads of `assignment`
  long long value = 0;                    // mnp_value of the optimum
  std::vector<LoadVector> optimal_loads;  // every optimal load multiset, canonical, sorted
};

/// Exact optimum. Throws CapExceeded for exhaustive mode beyond the cap.
MnpSolution mnp_solve(std::span<const int> weights, int m, MnpObjective obj,
                      MnpMethod method = MnpMethod::automatic, std::uint64_t cap = 1u << 20);

struct CBarEquivalenceReport {
  /// Canonical load multisets minimizing sum_x n_x f(n_x) with f(x) = x.
  std::vector<LoadVector> linear_argmin;
  std::vector<LoadVector> min_var_argmin;
  /// Same under f(x) = 2^x.
  std::vector<LoadVector> exponential_argmin;
  std::vector<LoadVector> minimax_argmin;

  bool linear_matches_min_var = false;
  bool exponential_within_minimax = false;
  bool passed() const noexcept { return linear_matches_min_var && exponential_within_minimax; }
};

CBarEquivalenceReport weighted_c_bar_equivalence_check(std::span<const int> weights, int m,
                                                       std::uint64_t cap = 1u << 20);

/// Qualified agreements of one weighted coalition (members' indices into the
/// game's players), found by enumerating all m^|C| joint actions.
std::vector<WeightedAgreement> weighted_qualified_agreements(std::span<const int> weights, int m,
                                                             const EffectiveCost& g,
                                                             std::uint64_t cap = 1u << 20);

/// A minimax-optimal agreement of the grand coalition and the predicates it
/// satisfies; explains why the grand coalition does or does not qualify.
struct GrandCoalitionDiagnostic {
  std::vector<int> actions;  // resources relabelled in order of first use
  LoadVector loads;
  std::vector<int> base_weights;
  bool covering = false;
  bool envy_free = false;
  bool credible = false;
};

struct HatCSearchResult {
  std::optional<Partition> partition;
  long long minimax_optimum = 0;
  std::size_t partitions_examined = 0;
  std::size_t partitions_qualifying = 0;
  std::vector<GrandCoalitionDiagnostic> grand_coalition;
};

/// Searches every set partition (coalition count ascending) for one whose
/// induced profile puts the max load at the minimax optimum with certainty.
/// Throws CapExceeded when the player count exceeds `bound`.
HatCSearchResult find_hat_c_optimal_partition(const WeightedGame& g, int bound = 8);

}  // namespace scg
