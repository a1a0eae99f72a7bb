#include "scg/belief.hpp"

#include "scg/errors.hpp"

namespace scg {

CountPmf::CountPmf(std::vector<Rational> probabilities) : p_(std::move(probabilities)) {
  if (p_.empty()) throw ValidationError("empty count distribution");
  Rational sum = 0;
  for (const auto& q : p_) {
    if (q < 0) throw ValidationError("negative probability in count distribution");
    sum += q;
  }
  if (sum != 1) throw ValidationError("count distribution sums to " + to_string(sum));
  while (p_.size() > 1 && p_.back() == 0) p_.pop_back();
}

CountPmf CountPmf::point_mass(int u) {
  if (u < 0) throw ValidationError("negative count");
  std::vector<Rational> p(u + 1, Rational(0));
  p[u] = 1;
  return CountPmf(std::move(p));
}

Rational CountPmf::operator()(int u) const {
  if (u < 0 || u > max_count()) return 0;
  return p_[u];
}

Rational CountPmf::expectation() const {
  Rational e = 0;
  for (int u = 0; u <= max_count(); ++u) e += u * p_[u];
  return e;
}

CountPmf CountPmf::convolve(const CountPmf& other) const {
  std::vector<Rational> out(p_.size() + other.p_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] == 0) continue;
    for (std::size_t j = 0; j < other.p_.size(); ++j) out[i + j] += p_[i] * other.p_[j];
  }
  return CountPmf(std::move(out));
}

CountPmf coalition_marginal(int size, int m) {
  switch (classify(size, m)) {
    case CoalitionClass::divisible:
      return CountPmf::point_mass(size / m);
    case CoalitionClass::remainder: {
      // One player on each of `size` resources, uniformly placed.
      Rational occupied(size, m);
      occupied.canonicalize();
      return CountPmf({1 - occupied, occupied});
    }
    case CoalitionClass::infeasible:
      break;
  }
  throw NoQualifiedAgreement(size, m);
}

CountPmf outside_count_pmf(const Partition& p, std::size_t coalition_index, const Game& g) {
  if (coalition_index >= p.size()) throw ValidationError("coalition index out of range");
  CountPmf acc = CountPmf::point_mass(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == coalition_index) continue;
    acc = acc.convolve(coalition_marginal(static_cast<int>(p[i].size()), g.resources()));
  }
  return acc;
}

EffectiveCost effective_cost(const CostFunction& f, const CountPmf& mu, int max_v) {
  if (max_v < 0) max_v = f.max_load() - mu.max_count();
  if (max_v < 1) throw ValidationError("cost function too short for the outsider distribution");
  if (max_v + mu.max_count() > f.max_load())
    throw ValidationError("cost function covers loads up to " + std::to_string(f.max_load()) + ", need " +
                          std::to_string(max_v + mu.max_count()));
  std::vector<Rational> g(max_v, Rational(0));
  const auto probs = mu.probabilities();
  for (int v = 1; v <= max_v; ++v)
    for (int u = 0; u <= mu.max_count(); ++u)
      if (probs[u] != 0) g[v - 1] += probs[u] * f(u + v);
  return EffectiveCost(std::move(g));
}

Subgame subgame(const Game& g, const Partition& p, std::size_t coalition_index) {
  const int size = static_cast<int>(p[coalition_index].size());
  const CountPmf mu = outside_count_pmf(p, coalition_index, g);
  return Subgame{size, g.resources(), effective_cost(g.cost(), mu, size)};
}

}  // namespace scg
