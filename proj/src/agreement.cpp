#include "scg/agreement.hpp"

#include <numeric>

#include "scg/errors.hpp"

namespace scg {

LoadVector Agreement::loads() const {
  LoadVector lv{std::vector<int>(m, 0)};
  for (int a : actions) {
    if (a < 0 || a >= m) throw ValidationError("agreement action " + std::to_string(a) + " out of range");
    ++lv.counts[a];
  }
  return lv;
}

Agreement Agreement::from_index(std::uint64_t index, int size, int m) {
  Agreement a;
  a.m = m;
  a.members.resize(size);
  std::iota(a.members.begin(), a.members.end(), 0);
  a.actions.resize(size);
  for (int k = 0; k < size; ++k) {
    a.actions[k] = static_cast<int>(index % static_cast<std::uint64_t>(m));
    index /= static_cast<std::uint64_t>(m);
  }
  return a;
}

EffectiveCost::EffectiveCost(std::vector<Rational> values) : values_(std::move(values)) {
  if (auto v = validate_cost_values(values_)) throw ValidationError("effective cost " + v->describe());
}

EffectiveCost::EffectiveCost(const CostFunction& f) : values_(f.values().begin(), f.values().end()) {}

const Rational& EffectiveCost::operator()(int v) const {
  if (v < 1 || v > max_load())
    throw ValidationError("effective cost undefined at load " + std::to_string(v) + " (max " +
                          std::to_string(max_load()) + ")");
  return values_[v - 1];
}

bool is_covering(const Agreement& a) {
  const LoadVector lv = a.loads();
  if (a.size() >= a.m) return lv.min() >= 1;
  return lv.max() <= 1;
}

bool is_envy_free(const Agreement& a, const EffectiveCost& g) {
  if (a.actions.empty()) return true;
  const LoadVector lv = a.loads();
  const Rational& first = g(lv.counts[a.actions.front()]);
  for (int r : a.actions)
    if (g(lv.counts[r]) != first) return false;
  return true;
}

bool is_credible(const Agreement& a, const EffectiveCost& g) {
  const LoadVector lv = a.loads();
  for (int r : a.actions) {
    const Rational& stay = g(lv.counts[r]);
    for (int x = 0; x < a.m; ++x) {
      if (x == r) continue;
      if (stay > g(lv.counts[x] + 1)) return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> checked_power(int m, int k, std::uint64_t limit) {
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) {
    if (p > limit / static_cast<std::uint64_t>(m)) return std::nullopt;
    p *= static_cast<std::uint64_t>(m);
  }
  if (p > limit) return std::nullopt;
  return p;
}

namespace {

// cmp[u][v] = sign(g(u) - g(v)), loads 1..max.
std::vector<std::vector<int>> comparison_table(const EffectiveCost& g, int max_load) {
  std::vector<std::vector<int>> cmp(max_load + 1, std::vector<int>(max_load + 1, 0));
  for (int u = 1; u <= max_load; ++u)
    for (int v = 1; v <= max_load; ++v) cmp[u][v] = sgn(g(u) - g(v));
  return cmp;
}

bool pareto_by_enumeration(const Agreement& a, const EffectiveCost& g, std::uint64_t cap) {
  const int size = a.size();
  const auto count = checked_power(a.m, size, cap);
  if (!count) throw CapExceeded("Pareto oracle needs m^|C| <= " + std::to_string(cap));
  const auto cmp = comparison_table(g, size);
  const LoadVector base = a.loads();
  std::vector<int> current(size);
  for (int k = 0; k < size; ++k) current[k] = base.counts[a.actions[k]];

  std::vector<int> alt(size);
  std::vector<int> alt_loads(a.m);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    std::fill(alt_loads.begin(), alt_loads.end(), 0);
    std::uint64_t rest = idx;
    for (int k = 0; k < size; ++k) {
      alt[k] = static_cast<int>(rest % static_cast<std::uint64_t>(a.m));
      rest /= static_cast<std::uint64_t>(a.m);
      ++alt_loads[alt[k]];
    }
    bool some_better = false;
    bool none_worse = true;
    for (int k = 0; k < size && none_worse; ++k) {
      const int c = cmp[alt_loads[alt[k]]][current[k]];
      if (c > 0) none_worse = false;
      if (c < 0) some_better = true;
    }
    if (none_worse && some_better) return false;
  }
  return true;
}

}  // namespace

bool is_pareto_optimal(const Agreement& a, const EffectiveCost& g, ParetoMode mode, std::uint64_t cap) {
  if (mode == ParetoMode::fast) return is_covering(a);
  return pareto_by_enumeration(a, g, cap);
}

std::optional<LoadVector> qualified_canonical_loads(int size, int m) {
  switch (classify(size, m)) {
    case CoalitionClass::divisible:
      return LoadVector{std::vector<int>(m, size / m)};
    case CoalitionClass::remainder: {
      LoadVector lv{std::vector<int>(m, 0)};
      for (int x = 0; x < size; ++x) lv.counts[x] = 1;
      return lv;
    }
    case CoalitionClass::infeasible:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace scg
