#include "scg/equilibrium.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "scg/agreement.hpp"
#include "scg/belief.hpp"
#include "scg/errors.hpp"

namespace scg {

namespace {

using LoadDistribution = std::map<LoadVector, Rational>;

std::vector<SupportPoint> to_support(const LoadDistribution& dist) {
  std::vector<SupportPoint> out;
  out.reserve(dist.size());
  for (const auto& [lv, p] : dist) out.push_back({lv, p});
  return out;
}

// 0/1 vectors of length m with exactly r ones, in lexicographic order.
std::vector<LoadVector> indicator_vectors(int m, int r) {
  std::vector<int> bits(m, 0);
  std::fill(bits.end() - r, bits.end(), 1);
  std::vector<LoadVector> out;
  do {
    out.push_back(LoadVector{bits});
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

LoadDistribution convolve(const LoadDistribution& a, const LoadDistribution& b) {
  LoadDistribution out;
  for (const auto& [la, pa] : a) {
    for (const auto& [lb, pb] : b) {
      LoadVector sum = la;
      sum += lb;
      out[sum] += pa * pb;
    }
  }
  return out;
}

}  // namespace

CoalitionBehaviour coalition_behaviour(int size, int m) {
  auto canonical = qualified_canonical_loads(size, m);
  if (!canonical) throw NoQualifiedAgreement(size, m);
  CoalitionBehaviour b{*canonical, {}};
  if (classify(size, m) == CoalitionClass::divisible) {
    b.support.push_back({*canonical, Rational(1)});
    return b;
  }
  const auto vectors = indicator_vectors(m, size);
  Rational each(1, static_cast<long>(vectors.size()));
  for (const auto& lv : vectors) b.support.push_back({lv, each});
  return b;
}

std::vector<SupportPoint> combine_supports(const std::vector<CoalitionBehaviour>& behaviours, int m) {
  LoadDistribution joint{{LoadVector{std::vector<int>(m, 0)}, Rational(1)}};
  for (const auto& b : behaviours) {
    LoadDistribution one;
    for (const auto& sp : b.support) one[sp.loads] += sp.probability;
    joint = convolve(joint, one);
  }
  return to_support(joint);
}

std::string NoEquilibrium::describe() const {
  std::string s = "coalition " + std::to_string(coalition_index) + " {";
  for (std::size_t k = 0; k < players.size(); ++k) s += (k ? "," : "") + std::to_string(players[k]);
  s += "} of size " + std::to_string(players.size()) + " has no envy-free, credible, Pareto-optimal agreement";
  return s;
}

InduceResult induce(const Game& g, const Partition& p) {
  if (p.players() != g.players()) throw ValidationError("partition and game disagree on the player count");
  InducedProfile profile;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int size = static_cast<int>(p[i].size());
    if (classify(size, g.resources()) == CoalitionClass::infeasible) return NoEquilibrium{i, p[i]};
    profile.behaviours.push_back(coalition_behaviour(size, g.resources()));
  }
  profile.support = combine_supports(profile.behaviours, g.resources());
  return profile;
}

bool is_profile_bar_c_optimal(const InducedProfile& pr, const Game& g) {
  const Rational best = optimal_costs(g).total;
  return std::all_of(pr.support.begin(), pr.support.end(),
                     [&](const SupportPoint& sp) { return total_cost(g.cost(), sp.loads) == best; });
}

bool is_profile_hat_c_optimal(const InducedProfile& pr, const Game& g) {
  const Rational best = optimal_costs(g).max;
  return std::all_of(pr.support.begin(), pr.support.end(),
                     [&](const SupportPoint& sp) { return max_cost(g.cost(), sp.loads) == best; });
}

InduceResult brute_force_profile_oracle(const Game& g, const Partition& p, std::uint64_t cap) {
  const int n = g.players();
  const int m = g.resources();
  if (p.players() != n) throw ValidationError("partition and game disagree on the player count");
  if (!checked_power(m, n, cap)) throw CapExceeded("brute-force oracle needs m^n <= " + std::to_string(cap));

  const std::size_t k = p.size();
  auto aggregate = [](const std::vector<Agreement>& agreements) {
    LoadDistribution dist;
    Rational each(1, static_cast<long>(agreements.size()));
    for (const auto& a : agreements) dist[a.loads()] += each;
    return dist;
  };

  // Before any reasoning about a coalition, every joint action is equally likely.
  std::vector<LoadDistribution> belief(k);
  for (std::size_t c = 0; c < k; ++c) {
    const int size = static_cast<int>(p[c].size());
    const std::uint64_t count = *checked_power(m, size, cap);
    std::vector<Agreement> all;
    for (std::uint64_t idx = 0; idx < count; ++idx) all.push_back(Agreement::from_index(idx, size, m));
    belief[c] = aggregate(all);
  }

  constexpr int max_rounds = 16;
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<LoadDistribution> next(k);
    for (std::size_t c = 0; c < k; ++c) {
      const int size = static_cast<int>(p[c].size());

      LoadDistribution outsiders{{LoadVector{std::vector<int>(m, 0)}, Rational(1)}};
      for (std::size_t d = 0; d < k; ++d)
        if (d != c) outsiders = convolve(outsiders, belief[d]);

      const int outside = n - size;
      std::vector<std::vector<Rational>> marginal(m, std::vector<Rational>(outside + 1, Rational(0)));
      for (const auto& [lv, prob] : outsiders)
        for (int x = 0; x < m; ++x) marginal[x][lv.counts[x]] += prob;
      for (int x = 1; x < m; ++x)
        if (marginal[x] != marginal[0]) throw std::logic_error("outsider beliefs are not resource-symmetric");
      const EffectiveCost cost = effective_cost(g.cost(), CountPmf(marginal[0]), size);

      const std::uint64_t count = *checked_power(m, size, cap);
      std::vector<Agreement> qualified;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Agreement a = Agreement::from_index(idx, size, m);
        a.members = p[c];
        if (is_envy_free(a, cost) && is_credible(a, cost) && is_pareto_optimal(a, cost, ParetoMode::oracle, cap))
          qualified.push_back(std::move(a));
      }
      if (qualified.empty()) return NoEquilibrium{c, p[c]};
      next[c] = aggregate(qualified);
    }
    const bool stable = next == belief;
    belief = std::move(next);
    if (stable) break;
    if (round + 1 == max_rounds) throw std::logic_error("oracle beliefs did not reach a fixed point");
  }

  InducedProfile profile;
  for (const auto& dist : belief) {
    CoalitionBehaviour b{dist.begin()->first.canonical(), to_support(dist)};
    profile.behaviours.push_back(std::move(b));
  }
  profile.support = combine_supports(profile.behaviours, m);
  return profile;
}

PartitionRow analyze_partition(const Game& g, const Partition& p) {
  PartitionRow row{p, p.size_multiset(), is_balanced(p, g.resources()), false, false, false, 0, {}, {}, {}};
  const InduceResult result = induce(g, p);
  if (const auto* failure = std::get_if<NoEquilibrium>(&result)) {
    row.failure = *failure;
    return row;
  }
  const auto& profile = std::get<InducedProfile>(result);
  row.equilibrium_exists = true;
  row.bar_c_optimal = is_profile_bar_c_optimal(profile, g);
  row.hat_c_optimal = is_profile_hat_c_optimal(profile, g);
  row.support_size = profile.support.size();
  for (const auto& sp : profile.support) {
    const Rational c = total_cost(g.cost(), sp.loads);
    if (!row.min_support_total || c < *row.min_support_total) row.min_support_total = c;
    if (!row.max_support_total || c > *row.max_support_total) row.max_support_total = c;
  }
  return row;
}

Theorem1Report verify_theorem_1(int n, int m, const CostFunction& f, PartitionScope scope, int bound) {
  const Game game(n, m, f.max_load() >= n ? f : f.with_max_load(n));
  const std::vector<Partition> partitions =
      scope == PartitionScope::by_sizes ? enumerate_partitions_by_sizes(n, bound) : enumerate_set_partitions(n, bound);

  Theorem1Report report{n, m, {}, {}};
  std::vector<std::optional<PartitionRow>> rows(partitions.size());
  std::vector<std::string> errors(partitions.size());
  const long count = static_cast<long>(partitions.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      rows[i] = analyze_partition(game, partitions[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!errors[i].empty()) throw Error("theorem sweep failed on " + partitions[i].to_string() + ": " + errors[i]);
    const PartitionRow& row = *rows[i];
    const bool optimal_equilibrium = row.equilibrium_exists && row.bar_c_optimal;
    if (optimal_equilibrium != row.balanced)
      report.violations.push_back(row.partition.to_string() + ": balanced=" + (row.balanced ? "true" : "false") +
                                  " but optimal equilibrium=" + (optimal_equilibrium ? "true" : "false"));
    if (row.balanced && !row.hat_c_optimal)
      report.violations.push_back(row.partition.to_string() + ": balanced but not max-cost optimal");
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace scg
