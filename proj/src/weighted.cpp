#include "scg/weighted.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "scg/belief.hpp"
#include "scg/errors.hpp"
#include "scg/kernels.hpp"

namespace scg {

WeightedGame::WeightedGame(std::vector<int> weights, int m, CostFunction f)
    : weights_(std::move(weights)), m_(m), total_(0), f_(std::move(f)) {
  if (weights_.empty()) throw ValidationError("weighted game needs at least one player");
  if (m_ < 1) throw ValidationError("weighted game needs at least one resource");
  for (int w : weights_) {
    if (w < 1) throw ValidationError("player weights must be positive integers");
    total_ += w;
  }
  if (f_.max_load() < total_)
    throw ValidationError("cost function covers loads up to " + std::to_string(f_.max_load()) + ", total weight is " +
                          std::to_string(total_));
}

LoadVector weighted_loads(std::span<const int> weights, const Outcome& o, int m) {
  if (o.actions.size() != weights.size()) throw ValidationError("outcome and weights differ in length");
  LoadVector lv{std::vector<int>(m, 0)};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int a = o.actions[i];
    if (a < 0 || a >= m) throw ValidationError("action " + std::to_string(a) + " out of range");
    lv.counts[a] += weights[i];
  }
  return lv;
}

Rational weighted_total_cost(const WeightedGame& g, const Outcome& o) {
  return total_cost(g.cost(), weighted_loads(g.weights(), o, g.resources()));
}

Rational weighted_max_cost(const WeightedGame& g, const Outcome& o) {
  return max_cost(g.cost(), weighted_loads(g.weights(), o, g.resources()));
}

LoadVector WeightedAgreement::loads() const {
  return weighted_loads(weights, Outcome{actions}, m);
}

std::vector<int> WeightedAgreement::base_weights() const {
  const LoadVector lv = loads();
  std::vector<int> out(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) out[i] = lv.counts[actions[i]] - weights[i];
  return out;
}

bool weighted_is_covering(const WeightedAgreement& a) {
  std::vector<int> players(a.m, 0);
  for (int r : a.actions) ++players.at(r);
  if (a.size() >= a.m) return std::all_of(players.begin(), players.end(), [](int c) { return c >= 1; });
  return std::all_of(players.begin(), players.end(), [](int c) { return c <= 1; });
}

bool weighted_is_credible(const WeightedAgreement& a, const EffectiveCost& g) {
  const LoadVector lv = a.loads();
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    const Rational& stay = g(lv.counts[a.actions[i]]);
    for (int k = 0; k < a.m; ++k) {
      if (k == a.actions[i]) continue;
      if (stay > g(lv.counts[k] + a.weights[i])) return false;
    }
  }
  return true;
}

bool weighted_is_envy_free(const WeightedAgreement& a, const EffectiveCost& g) {
  const LoadVector lv = a.loads();
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    const Rational& own = g(lv.counts[a.actions[i]]);
    for (std::size_t j = 0; j < a.actions.size(); ++j) {
      if (a.actions[i] == a.actions[j]) continue;
      // i takes j's slot: j's resource without j, plus i.
      if (own > g(lv.counts[a.actions[j]] - a.weights[j] + a.weights[i])) return false;
    }
  }
  return true;
}

bool weighted_is_pareto_optimal(const WeightedAgreement& a, const EffectiveCost& g, std::uint64_t cap) {
  const int size = a.size();
  const auto count = checked_power(a.m, size, cap);
  if (!count) throw CapExceeded("weighted Pareto oracle needs m^|C| <= " + std::to_string(cap));
  const LoadVector base = a.loads();
  std::vector<Rational> current(size);
  for (int k = 0; k < size; ++k) current[k] = a.weights[k] * g(base.counts[a.actions[k]]);

  std::vector<int> alt(size);
  std::vector<int> alt_loads(a.m);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    std::fill(alt_loads.begin(), alt_loads.end(), 0);
    std::uint64_t rest = idx;
    for (int k = 0; k < size; ++k) {
      alt[k] = static_cast<int>(rest % static_cast<std::uint64_t>(a.m));
      rest /= static_cast<std::uint64_t>(a.m);
      alt_loads[alt[k]] += a.weights[k];
    }
    bool some_better = false;
    bool none_worse = true;
    for (int k = 0; k < size && none_worse; ++k) {
      const Rational cost = a.weights[k] * g(alt_loads[alt[k]]);
      if (cost > current[k]) none_worse = false;
      if (cost < current[k]) some_better = true;
    }
    if (none_worse && some_better) return false;
  }
  return true;
}

LoadVector QualifiedStructure::loads(int m, std::span<const int> weights) const {
  LoadVector lv{std::vector<int>(m, 0)};
  if (all_distinct) {
    std::vector<int> sorted(weights.begin(), weights.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (std::size_t x = 0; x < sorted.size() && static_cast<int>(x) < m; ++x) lv.counts[x] = sorted[x];
    return lv;
  }
  if (single_resource) {
    lv.counts[0] = std::accumulate(weights.begin(), weights.end(), 0);
    return lv;
  }
  std::size_t x = 0;
  for (const auto& grp : groups)
    for (int k = 0; k < grp.groups && static_cast<int>(x) < m; ++k) lv.counts[x++] = grp.weight * grp.group_size;
  return lv.canonical();
}

std::optional<QualifiedStructure> weighted_qualified_conditions(std::span<const int> weights, int m) {
  if (m < 1) throw ValidationError("need at least one resource");
  const int size = static_cast<int>(weights.size());
  if (size <= m) return QualifiedStructure{true, false, 0, {}};

  std::map<int, int> count_by_weight;
  int total = 0;
  for (int w : weights) {
    if (w < 1) throw ValidationError("player weights must be positive integers");
    ++count_by_weight[w];
    total += w;
  }
  if (m == 1) return QualifiedStructure{false, true, 0, {}};
  // A resource's load b + w never exceeds the coalition's total weight.
  for (int b = 1; b <= total; ++b) {
    QualifiedStructure s{false, false, b, {}};
    int resources = 0;
    bool ok = true;
    for (const auto& [w, count] : count_by_weight) {
      if (b % w != 0 || count % (b / w + 1) != 0) {
        ok = false;
        break;
      }
      const int group_size = b / w + 1;
      s.groups.push_back({w, group_size, count / group_size});
      resources += count / group_size;
    }
    if (ok && resources == m) return s;
  }
  return std::nullopt;
}

std::string to_string(MnpObjective obj) {
  switch (obj) {
    case MnpObjective::minimax: return "minimax";
    case MnpObjective::maximin: return "maximin";
    case MnpObjective::min_gap: return "min_gap";
    case MnpObjective::min_var: return "min_var";
  }
  return "?";
}

MnpObjective parse_objective(std::string_view text) {
  if (text == "minimax") return MnpObjective::minimax;
  if (text == "maximin") return MnpObjective::maximin;
  if (text == "min_gap" || text == "min-gap") return MnpObjective::min_gap;
  if (text == "min_var" || text == "min-var") return MnpObjective::min_var;
  throw ValidationError("unknown objective '" + std::string(text) + "'");
}

long long mnp_value(const LoadVector& lv, MnpObjective obj) {
  switch (obj) {
    case MnpObjective::minimax: return lv.max();
    case MnpObjective::maximin: return lv.min();
    case MnpObjective::min_gap: return lv.max() - lv.min();
    case MnpObjective::min_var: {
      long long s = 0;
      for (int c : lv.counts) s += static_cast<long long>(c) * c;
      return s;
    }
  }
  return 0;
}

long long mnp_score(const LoadVector& lv, MnpObjective obj) {
  const long long v = mnp_value(lv, obj);
  return obj == MnpObjective::maximin ? -v : v;
}

namespace {

std::vector<int> relabel_by_first_use(const std::vector<int>& actions, int m) {
  std::vector<int> label(m, -1);
  int next = 0;
  std::vector<int> out(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (label[actions[i]] < 0) label[actions[i]] = next++;
    out[i] = label[actions[i]];
  }
  return out;
}

void check_mnp_input(std::span<const int> weights, int m) {
  if (m < 1) throw ValidationError("need at least one bin");
  for (int w : weights)
    if (w < 1) throw ValidationError("weights must be positive integers");
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Depth-first search over items in descending weight order. Bins with equal
// current load are interchangeable, so only the first of them is tried.
class MnpBranchAndBound {
 public:
  MnpBranchAndBound(std::span<const int> weights, int m, MnpObjective obj)
      : m_(m), obj_(obj), order_(weights.size()), loads_(m, 0), assign_(weights.size(), 0) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
    for (std::size_t i : order_) items_.push_back(weights[i]);
    suffix_.assign(items_.size() + 1, 0);
    for (std::size_t i = items_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + items_[i];
    total_ = suffix_[0];
  }

  MnpSolution run() {
    best_ = std::numeric_limits<long long>::max();
    search(0);
    MnpSolution sol;
    sol.assignment.assign(order_.size(), 0);
    for (std::size_t k = 0; k < order_.size(); ++k) sol.assignment[order_[k]] = best_assign_[k];
    sol.loads = LoadVector{best_loads_};
    sol.value = mnp_value(sol.loads, obj_);
    sol.optimal_loads.assign(optima_.begin(), optima_.end());
    return sol;
  }

 private:
  long long lower_bound(std::size_t next) const {
    const long long rest = suffix_[next];
    const long long cur_max = *std::max_element(loads_.begin(), loads_.end());
    const long long cur_min = *std::min_element(loads_.begin(), loads_.end());
    const long long max_lb = std::max(cur_max, ceil_div(total_, m_));
    const long long min_ub = std::min(cur_min + rest, total_ / m_);
    switch (obj_) {
      case MnpObjective::minimax: return max_lb;
      case MnpObjective::maximin: return -min_ub;
      case MnpObjective::min_gap: return std::max(0LL, max_lb - min_ub);
      case MnpObjective::min_var: {
        // Integer water-filling of the remaining weight.
        std::vector<long long> level(loads_.begin(), loads_.end());
        std::sort(level.begin(), level.end());
        long long left = rest;
        while (left > 0) {
          auto it = std::min_element(level.begin(), level.end());
          ++*it;
          --left;
        }
        long long s = 0;
        for (long long v : level) s += v * v;
        return s;
      }
    }
    return 0;
  }

  void search(std::size_t next) {
    if (next == items_.size()) {
      const LoadVector lv{loads_};
      const long long score = mnp_score(lv, obj_);
      if (score < best_) {
        best_ = score;
        optima_.clear();
        best_assign_ = assign_;
        best_loads_ = loads_;
      }
      if (score == best_) optima_.insert(lv.canonical());
      return;
    }
    if (lower_bound(next) > best_) return;
    // Completions depend only on the load multiset; a revisit adds nothing.
    std::vector<int> key = loads_;
    std::sort(key.begin(), key.end());
    if (!visited_.emplace(next, std::move(key)).second) return;
    std::set<int> tried;
    for (int x = 0; x < m_; ++x) {
      if (!tried.insert(loads_[x]).second) continue;
      loads_[x] += items_[next];
      assign_[next] = x;
      search(next + 1);
      loads_[x] -= items_[next];
    }
  }

  int m_;
  MnpObjective obj_;
  std::vector<std::size_t> order_;
  std::vector<int> items_;
  std::vector<long long> suffix_;
  long long total_ = 0;
  std::vector<int> loads_;
  std::vector<int> assign_;
  long long best_ = 0;
  std::vector<int> best_assign_;
  std::vector<int> best_loads_;
  std::set<LoadVector> optima_;
  std::set<std::pair<std::size_t, std::vector<int>>> visited_;
};

}  // namespace

MnpSolution mnp_solve(std::span<const int> weights, int m, MnpObjective obj, MnpMethod method, std::uint64_t cap) {
  check_mnp_input(weights, m);
  const int k = static_cast<int>(weights.size());
  if (method == MnpMethod::automatic)
    method = checked_power(m, k, cap) ? MnpMethod::exhaustive : MnpMethod::branch_and_bound;

  MnpSolution sol;
  if (method == MnpMethod::branch_and_bound) {
    sol = MnpBranchAndBound(weights, m, obj).run();
  } else {
    const kernels::MnpScan scan = kernels::scan_mnp_parallel(weights, m, obj, cap);
    sol.assignment = kernels::decode_outcome(scan.best_index, k, m).actions;
    sol.loads = weighted_loads(weights, Outcome{sol.assignment}, m);
    sol.value = mnp_value(sol.loads, obj);
    sol.optimal_loads = scan.optimal_loads;
  }
  sol.assignment = relabel_by_first_use(sol.assignment, m);
  sol.loads = weighted_loads(weights, Outcome{sol.assignment}, m);

  // Standard lower bounds on the largest bin.
  if (obj == MnpObjective::minimax && k > 0) {
    const long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
    const long long heaviest = *std::max_element(weights.begin(), weights.end());
    if (sol.value < ceil_div(total, m) || sol.value < heaviest)
      throw std::logic_error("minimax value below a trivial lower bound");
  }
  return sol;
}

CBarEquivalenceReport weighted_c_bar_equivalence_check(std::span<const int> weights, int m, std::uint64_t cap) {
  check_mnp_input(weights, m);
  const int k = static_cast<int>(weights.size());
  const auto count = checked_power(m, k, cap);
  if (!count) throw CapExceeded("c-bar equivalence check needs m^k <= " + std::to_string(cap));
  const int total = std::accumulate(weights.begin(), weights.end(), 0);
  const CostFunction linear = CostFunction::identity(std::max(total, 1));
  const CostFunction exponential = CostFunction::exponential(2, 2, std::max(total, 1));

  std::optional<Rational> best_lin;
  std::optional<Rational> best_exp;
  std::set<LoadVector> lin_argmin;
  std::set<LoadVector> exp_argmin;
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    const LoadVector lv = weighted_loads(weights, kernels::decode_outcome(idx, k, m), m).canonical();
    const Rational cl = total_cost(linear, lv);
    const Rational ce = total_cost(exponential, lv);
    if (!best_lin || cl < *best_lin) {
      best_lin = cl;
      lin_argmin.clear();
    }
    if (cl == *best_lin) lin_argmin.insert(lv);
    if (!best_exp || ce < *best_exp) {
      best_exp = ce;
      exp_argmin.clear();
    }
    if (ce == *best_exp) exp_argmin.insert(lv);
  }

  CBarEquivalenceReport r;
  r.linear_argmin.assign(lin_argmin.begin(), lin_argmin.end());
  r.exponential_argmin.assign(exp_argmin.begin(), exp_argmin.end());
  r.min_var_argmin = mnp_solve(weights, m, MnpObjective::min_var, MnpMethod::exhaustive, cap).optimal_loads;
  r.minimax_argmin = mnp_solve(weights, m, MnpObjective::minimax, MnpMethod::exhaustive, cap).optimal_loads;
  r.linear_matches_min_var = r.linear_argmin == r.min_var_argmin;
  r.exponential_within_minimax =
      std::all_of(r.exponential_argmin.begin(), r.exponential_argmin.end(), [&](const LoadVector& lv) {
        return std::binary_search(r.minimax_argmin.begin(), r.minimax_argmin.end(), lv);
      });
  return r;
}

std::vector<WeightedAgreement> weighted_qualified_agreements(std::span<const int> weights, int m,
                                                             const EffectiveCost& g, std::uint64_t cap) {
  const int size = static_cast<int>(weights.size());
  const auto count = checked_power(m, size, cap);
  if (!count) throw CapExceeded("qualified agreement search needs m^|C| <= " + std::to_string(cap));
  std::vector<WeightedAgreement> out;
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    WeightedAgreement a{{weights.begin(), weights.end()}, kernels::decode_outcome(idx, size, m).actions, m};
    // Pareto optimality is tested through the covering characterization.
    if (weighted_is_covering(a) && weighted_is_envy_free(a, g) && weighted_is_credible(a, g)) out.push_back(std::move(a));
  }
  return out;
}

namespace {

using LoadDistribution = std::map<LoadVector, Rational>;

LoadDistribution uniform_loads(const std::vector<WeightedAgreement>& agreements) {
  LoadDistribution dist;
  const Rational each(1, static_cast<long>(agreements.size()));
  for (const auto& a : agreements) dist[a.loads()] += each;
  return dist;
}

LoadDistribution convolve(const LoadDistribution& a, const LoadDistribution& b) {
  LoadDistribution out;
  for (const auto& [la, pa] : a)
    for (const auto& [lb, pb] : b) {
      LoadVector s = la;
      s += lb;
      out[s] += pa * pb;
    }
  return out;
}

}  // namespace

HatCSearchResult find_hat_c_optimal_partition(const WeightedGame& g, int bound) {
  const int n = g.players();
  const int m = g.resources();
  if (n > bound) throw CapExceeded("weighted partition search limited to " + std::to_string(bound) + " players");
  const std::vector<int>& w = g.weights();

  HatCSearchResult result;
  result.minimax_optimum = mnp_solve(w, m, MnpObjective::minimax).value;

  // Why the grand coalition does or does not qualify.
  {
    const EffectiveCost grand_cost(g.cost());
    std::set<std::vector<int>> seen;
    const std::uint64_t count = *checked_power(m, n, std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      WeightedAgreement a{w, kernels::decode_outcome(idx, n, m).actions, m};
      const LoadVector lv = a.loads();
      if (lv.max() != result.minimax_optimum) continue;
      auto canon = relabel_by_first_use(a.actions, m);
      if (!seen.insert(canon).second) continue;
      a.actions = canon;
      result.grand_coalition.push_back({canon, a.loads(), a.base_weights(), weighted_is_covering(a),
                                        weighted_is_envy_free(a, grand_cost), weighted_is_credible(a, grand_cost)});
    }
  }

  auto coalition_weights = [&](const Coalition& c) {
    std::vector<int> ws;
    for (int p : c) ws.push_back(w[p]);
    return ws;
  };

  for (const Partition& p : enumerate_set_partitions(n, bound)) {
    ++result.partitions_examined;
    const std::size_t k = p.size();

    // Qualification under the outsider-free cost, then re-checked under the
    // symmetric prior built from the other coalitions' qualified agreements.
    std::vector<std::vector<WeightedAgreement>> qualified(k);
    bool feasible = true;
    for (std::size_t c = 0; c < k && feasible; ++c) {
      const auto ws = coalition_weights(p[c]);
      const int sum = std::accumulate(ws.begin(), ws.end(), 0);
      qualified[c] = weighted_qualified_agreements(ws, m, EffectiveCost(g.cost().with_max_load(sum)));
      feasible = !qualified[c].empty();
    }
    if (!feasible) continue;

    std::vector<LoadDistribution> behaviour(k);
    for (std::size_t c = 0; c < k; ++c) behaviour[c] = uniform_loads(qualified[c]);

    for (std::size_t c = 0; c < k; ++c) {
      const auto ws = coalition_weights(p[c]);
      const int sum = std::accumulate(ws.begin(), ws.end(), 0);
      LoadDistribution outsiders{{LoadVector{std::vector<int>(m, 0)}, Rational(1)}};
      for (std::size_t d = 0; d < k; ++d)
        if (d != c) outsiders = convolve(outsiders, behaviour[d]);
      std::vector<std::vector<Rational>> marginal(m, std::vector<Rational>(g.total_weight() - sum + 1, Rational(0)));
      for (const auto& [lv, prob] : outsiders)
        for (int x = 0; x < m; ++x) marginal[x][lv.counts[x]] += prob;
      for (int x = 1; x < m; ++x)
        if (marginal[x] != marginal[0]) throw std::logic_error("weighted outsider beliefs are not resource-symmetric");
      const EffectiveCost prior_cost = effective_cost(g.cost(), CountPmf(marginal[0]), sum);
      const auto again = weighted_qualified_agreements(ws, m, prior_cost);
      if (again.size() != qualified[c].size() ||
          !std::equal(again.begin(), again.end(), qualified[c].begin(),
                      [](const WeightedAgreement& a, const WeightedAgreement& b) { return a.actions == b.actions; }))
        throw std::logic_error("weighted qualification changed under the symmetric prior");
    }

    LoadDistribution joint{{LoadVector{std::vector<int>(m, 0)}, Rational(1)}};
    for (const auto& b : behaviour) joint = convolve(joint, b);
    const bool optimal = std::all_of(joint.begin(), joint.end(),
                                     [&](const auto& kv) { return kv.first.max() == result.minimax_optimum; });
    if (!optimal) continue;
    ++result.partitions_qualifying;
    if (!result.partition) result.partition = p;
  }
  return result;
}

}  // namespace scg
