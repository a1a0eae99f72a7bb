#include "scg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <set>

#include "scg/errors.hpp"

namespace scg::kernels {

Outcome decode_outcome(std::uint64_t index, int n, int m) {
  Outcome o{std::vector<int>(n)};
  for (int k = 0; k < n; ++k) {
    o.actions[k] = static_cast<int>(index % static_cast<std::uint64_t>(m));
    index /= static_cast<std::uint64_t>(m);
  }
  return o;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t outcome_count(const Game& g, std::uint64_t cap) {
  const auto count = checked_power(g.resources(), g.players(), cap);
  if (!count) throw CapExceeded("outcome scan needs m^n <= " + std::to_string(cap));
  return *count;
}

// Per-load contributions: total[c] = c f(c), top[c] = f(c); index 0 unused.
struct LoadCosts {
  std::vector<Rational> total;
  std::vector<Rational> top;

  explicit LoadCosts(const Game& g) : total(g.players() + 1, Rational(0)), top(g.players() + 1, Rational(0)) {
    for (int c = 1; c <= g.players(); ++c) {
      top[c] = g.cost()(c);
      total[c] = c * top[c];
    }
  }
};

void fill_loads(std::uint64_t index, int n, int m, std::vector<int>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  for (int k = 0; k < n; ++k) {
    ++counts[index % static_cast<std::uint64_t>(m)];
    index /= static_cast<std::uint64_t>(m);
  }
}

struct OutcomeEval {
  Rational total;
  int top_load;
  bool even;
};

void evaluate(const std::vector<int>& counts, const LoadCosts& costs, OutcomeEval& out) {
  out.total = 0;
  int hi = 0;
  int lo = std::numeric_limits<int>::max();
  for (int c : counts) {
    if (c > 0) out.total += costs.total[c];
    hi = std::max(hi, c);
    lo = std::min(lo, c);
  }
  out.top_load = hi;
  out.even = hi - lo <= 1;
}

struct Tally {
  std::uint64_t total_optimal = 0, total_optimal_uneven = 0, even = 0, even_not_total_optimal = 0,
                max_optimal = 0, max_optimal_uneven = 0, witness = kNone;

  void add(const OutcomeEval& e, std::uint64_t idx, const Rational& min_total, const Rational& min_max,
           const LoadCosts& costs) {
    const bool t_opt = e.total == min_total;
    const bool m_opt = costs.top[e.top_load] == min_max;
    total_optimal += t_opt;
    total_optimal_uneven += t_opt && !e.even;
    even += e.even;
    even_not_total_optimal += e.even && !t_opt;
    max_optimal += m_opt;
    if (m_opt && !e.even) {
      ++max_optimal_uneven;
      witness = std::min(witness, idx);
    }
  }
};

OutcomeScan finish(std::uint64_t count, const Rational& min_total, const Rational& min_max, const Tally& t) {
  OutcomeScan s;
  s.outcomes = count;
  s.min_total = min_total;
  s.min_max = min_max;
  s.total_optimal = t.total_optimal;
  s.total_optimal_uneven = t.total_optimal_uneven;
  s.even = t.even;
  s.even_not_total_optimal = t.even_not_total_optimal;
  s.max_optimal = t.max_optimal;
  s.max_optimal_uneven = t.max_optimal_uneven;
  if (t.witness != kNone) s.max_optimal_uneven_witness = t.witness;
  return s;
}

}  // namespace

OutcomeScan scan_outcomes_serial(const Game& g, std::uint64_t cap) {
  const std::uint64_t count = outcome_count(g, cap);
  const int n = g.players();
  const int m = g.resources();
  const LoadCosts costs(g);
  std::vector<int> counts(m);
  OutcomeEval e;

  Rational min_total;
  Rational min_max;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    fill_loads(idx, n, m, counts);
    evaluate(counts, costs, e);
    if (idx == 0 || e.total < min_total) min_total = e.total;
    if (idx == 0 || costs.top[e.top_load] < min_max) min_max = costs.top[e.top_load];
  }
  Tally t;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    fill_loads(idx, n, m, counts);
    evaluate(counts, costs, e);
    t.add(e, idx, min_total, min_max, costs);
  }
  return finish(count, min_total, min_max, t);
}

OutcomeScan scan_outcomes_parallel(const Game& g, std::uint64_t cap) {
  const std::uint64_t count = outcome_count(g, cap);
  const int n = g.players();
  const int m = g.resources();
  const LoadCosts costs(g);
  const long long total_count = static_cast<long long>(count);

  std::optional<Rational> min_total;
  std::optional<Rational> min_max;
#pragma omp parallel
  {
    std::vector<int> counts(m);
    OutcomeEval e;
    std::optional<Rational> local_total;
    std::optional<Rational> local_max;
#pragma omp for schedule(static)
    for (long long idx = 0; idx < total_count; ++idx) {
      fill_loads(static_cast<std::uint64_t>(idx), n, m, counts);
      evaluate(counts, costs, e);
      if (!local_total || e.total < *local_total) local_total = e.total;
      if (!local_max || costs.top[e.top_load] < *local_max) local_max = costs.top[e.top_load];
    }
#pragma omp critical(scg_scan_min)
    {
      if (local_total && (!min_total || *local_total < *min_total)) min_total = local_total;
      if (local_max && (!min_max || *local_max < *min_max)) min_max = local_max;
    }
  }

  Tally t;
#pragma omp parallel
  {
    std::vector<int> counts(m);
    OutcomeEval e;
    Tally local;
#pragma omp for schedule(static)
    for (long long idx = 0; idx < total_count; ++idx) {
      fill_loads(static_cast<std::uint64_t>(idx), n, m, counts);
      evaluate(counts, costs, e);
      local.add(e, static_cast<std::uint64_t>(idx), *min_total, *min_max, costs);
    }
#pragma omp critical(scg_scan_tally)
    {
      t.total_optimal += local.total_optimal;
      t.total_optimal_uneven += local.total_optimal_uneven;
      t.even += local.even;
      t.even_not_total_optimal += local.even_not_total_optimal;
      t.max_optimal += local.max_optimal;
      t.max_optimal_uneven += local.max_optimal_uneven;
      t.witness = std::min(t.witness, local.witness);
    }
  }
  return finish(count, *min_total, *min_max, t);
}

namespace {

std::uint64_t agreement_count(int size, int m, std::uint64_t cap) {
  const auto count = checked_power(m, size, cap);
  if (!count) throw CapExceeded("agreement sweep needs m^|C| <= " + std::to_string(cap));
  return *count;
}

void classify_agreement(std::uint64_t idx, int size, int m, const EffectiveCost& g, std::uint64_t cap,
                        AgreementSweep& into) {
  const Agreement a = Agreement::from_index(idx, size, m);
  const bool cov = is_covering(a);
  const bool ef = is_envy_free(a, g);
  const bool cr = is_credible(a, g);
  const bool par = is_pareto_optimal(a, g, ParetoMode::oracle, cap);
  const std::size_t r = region_index(cov, ef, cr);
  ++into.agreements;
  ++into.region_counts[r];
  if (!into.region_witness[r] || idx < *into.region_witness[r]) into.region_witness[r] = idx;
  if (cov != par) {
    ++into.covering_pareto_mismatch;
    if (!into.first_mismatch || idx < *into.first_mismatch) into.first_mismatch = idx;
  }
}

void merge(AgreementSweep& into, const AgreementSweep& from) {
  into.agreements += from.agreements;
  for (std::size_t r = 0; r < 8; ++r) {
    into.region_counts[r] += from.region_counts[r];
    if (from.region_witness[r] && (!into.region_witness[r] || *from.region_witness[r] < *into.region_witness[r]))
      into.region_witness[r] = from.region_witness[r];
  }
  into.covering_pareto_mismatch += from.covering_pareto_mismatch;
  if (from.first_mismatch && (!into.first_mismatch || *from.first_mismatch < *into.first_mismatch))
    into.first_mismatch = from.first_mismatch;
}

}  // namespace

AgreementSweep sweep_agreements_serial(int size, int m, const EffectiveCost& g, std::uint64_t cap) {
  const std::uint64_t count = agreement_count(size, m, cap);
  AgreementSweep s;
  for (std::uint64_t idx = 0; idx < count; ++idx) classify_agreement(idx, size, m, g, cap, s);
  return s;
}

AgreementSweep sweep_agreements_parallel(int size, int m, const EffectiveCost& g, std::uint64_t cap) {
  const long long count = static_cast<long long>(agreement_count(size, m, cap));
  AgreementSweep s;
#pragma omp parallel
  {
    AgreementSweep local;
#pragma omp for schedule(dynamic, 64)
    for (long long idx = 0; idx < count; ++idx)
      classify_agreement(static_cast<std::uint64_t>(idx), size, m, g, cap, local);
#pragma omp critical(scg_sweep_merge)
    merge(s, local);
  }
  return s;
}

namespace {

struct MnpLocal {
  long long best = std::numeric_limits<long long>::max();
  std::uint64_t index = kNone;
  std::set<LoadVector> optima;

  void visit(std::uint64_t idx, const LoadVector& lv, MnpObjective obj) {
    const long long score = mnp_score(lv, obj);
    if (score > best) return;
    if (score < best) {
      best = score;
      index = idx;
      optima.clear();
    }
    index = std::min(index, idx);
    optima.insert(lv.canonical());
  }

  void merge(const MnpLocal& other) {
    if (other.best > best) return;
    if (other.best < best) {
      *this = other;
      return;
    }
    index = std::min(index, other.index);
    optima.insert(other.optima.begin(), other.optima.end());
  }
};

void fill_weighted(std::uint64_t index, std::span<const int> weights, int m, LoadVector& lv) {
  std::fill(lv.counts.begin(), lv.counts.end(), 0);
  for (int w : weights) {
    lv.counts[index % static_cast<std::uint64_t>(m)] += w;
    index /= static_cast<std::uint64_t>(m);
  }
}

MnpScan to_scan(const MnpLocal& l) {
  return MnpScan{l.best, l.index, std::vector<LoadVector>(l.optima.begin(), l.optima.end())};
}

std::uint64_t assignment_count(std::span<const int> weights, int m, std::uint64_t cap) {
  const auto count = checked_power(m, static_cast<int>(weights.size()), cap);
  if (!count) throw CapExceeded("exhaustive MNP needs m^k <= " + std::to_string(cap));
  return *count;
}

}  // namespace

MnpScan scan_mnp_serial(std::span<const int> weights, int m, MnpObjective obj, std::uint64_t cap) {
  const std::uint64_t count = assignment_count(weights, m, cap);
  MnpLocal acc;
  LoadVector lv{std::vector<int>(m)};
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    fill_weighted(idx, weights, m, lv);
    acc.visit(idx, lv, obj);
  }
  return to_scan(acc);
}

MnpScan scan_mnp_parallel(std::span<const int> weights, int m, MnpObjective obj, std::uint64_t cap) {
  const long long count = static_cast<long long>(assignment_count(weights, m, cap));
  MnpLocal acc;
#pragma omp parallel
  {
    MnpLocal local;
    LoadVector lv{std::vector<int>(m)};
#pragma omp for schedule(static)
    for (long long idx = 0; idx < count; ++idx) {
      fill_weighted(static_cast<std::uint64_t>(idx), weights, m, lv);
      local.visit(static_cast<std::uint64_t>(idx), lv, obj);
    }
#pragma omp critical(scg_mnp_merge)
    acc.merge(local);
  }
  return to_scan(acc);
}

}  // namespace scg::kernels
