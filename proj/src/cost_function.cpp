#include "scg/cost_function.hpp"

#include <utility>

#include "scg/errors.hpp"

namespace scg {

std::string to_string(CostKind kind) {
  switch (kind) {
    case CostKind::linear: return "linear";
    case CostKind::polynomial: return "poly";
    case CostKind::exponential: return "exp";
    case CostKind::table: return "table";
  }
  return "?";
}

std::string CostViolation::describe() const {
  if (kind == Kind::monotonicity)
    return "not strictly increasing at k=" + std::to_string(index) + " (f(k+1) <= f(k))";
  return "not convex at k=" + std::to_string(index) + " (f(k+2) + f(k) < 2 f(k+1))";
}

std::optional<CostViolation> validate_cost_values(std::span<const Rational> values) {
  if (values.empty()) throw ValidationError("empty cost table");
  const int n = static_cast<int>(values.size());
  for (int k = 1; k < n; ++k) {
    const Rational& a = values[k - 1];
    const Rational& b = values[k];
    if (!(b > a)) return CostViolation{CostViolation::Kind::monotonicity, k};
    if (k + 1 <= n - 1 && values[k + 1] + a < 2 * b) return CostViolation{CostViolation::Kind::convexity, k};
  }
  return std::nullopt;
}

namespace {

std::vector<Rational> materialize(CostKind kind, const std::vector<Rational>& params, int max_load) {
  if (max_load < 1) throw ValidationError("cost function needs max_load >= 1");
  std::vector<Rational> values;
  values.reserve(max_load);
  for (int k = 1; k <= max_load; ++k) {
    switch (kind) {
      case CostKind::linear:
        values.emplace_back(params[0] * k + params[1]);
        break;
      case CostKind::polynomial: {
        // Horner.
        Rational acc = 0;
        for (auto it = params.rbegin(); it != params.rend(); ++it) acc = acc * k + *it;
        values.push_back(acc);
        break;
      }
      case CostKind::exponential:
        values.emplace_back(params[1] * pow(params[0], static_cast<unsigned>(k - 1)));
        break;
      case CostKind::table:
        if (k > static_cast<int>(params.size()))
          throw ValidationError("cost table has " + std::to_string(params.size()) + " entries, load " +
                                std::to_string(max_load) + " required");
        values.push_back(params[k - 1]);
        break;
    }
  }
  return values;
}

}  // namespace

CostFunction::CostFunction(CostKind kind, std::vector<Rational> params, std::vector<Rational> values)
    : kind_(kind), params_(std::move(params)), values_(std::move(values)) {
  if (auto v = validate_cost_values(values_)) throw ValidationError("invalid cost function: " + v->describe());
}

CostFunction CostFunction::linear(const Rational& slope, const Rational& intercept, int max_load) {
  std::vector<Rational> params{slope, intercept};
  auto values = materialize(CostKind::linear, params, max_load);
  return CostFunction(CostKind::linear, std::move(params), std::move(values));
}

CostFunction CostFunction::polynomial(std::vector<Rational> coeffs, int max_load) {
  if (coeffs.empty()) throw ValidationError("polynomial cost needs at least one coefficient");
  auto values = materialize(CostKind::polynomial, coeffs, max_load);
  return CostFunction(CostKind::polynomial, std::move(coeffs), std::move(values));
}

CostFunction CostFunction::exponential(const Rational& base, const Rational& scale, int max_load) {
  std::vector<Rational> params{base, scale};
  auto values = materialize(CostKind::exponential, params, max_load);
  return CostFunction(CostKind::exponential, std::move(params), std::move(values));
}

CostFunction CostFunction::table(std::vector<Rational> values) {
  if (values.empty()) throw ValidationError("empty cost table");
  auto copy = values;
  return CostFunction(CostKind::table, std::move(values), std::move(copy));
}

const Rational& CostFunction::operator()(int load) const {
  if (load < 1 || load > max_load())
    throw ValidationError("load " + std::to_string(load) + " outside cost range 1.." + std::to_string(max_load()));
  return values_[load - 1];
}

CostFunction CostFunction::with_max_load(int max_load) const {
  return CostFunction(kind_, params_, materialize(kind_, params_, max_load));
}

CostFunction mixture_cost_function(std::span<const MixtureComponent> components) {
  if (components.empty()) throw ValidationError("empty mixture");
  const int max_load = components.front().cost.max_load();
  Rational total = 0;
  std::vector<Rational> values(max_load, Rational(0));
  for (const auto& c : components) {
    if (c.probability < 0) throw ValidationError("negative mixture probability");
    if (c.cost.max_load() != max_load) throw ValidationError("mixture components differ in max_load");
    total += c.probability;
    for (int k = 1; k <= max_load; ++k) values[k - 1] += c.probability * c.cost(k);
  }
  if (total != 1) throw ValidationError("mixture probabilities sum to " + to_string(total) + ", not 1");
  return CostFunction::table(std::move(values));
}

}  // namespace scg
