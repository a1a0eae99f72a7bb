#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scg/rational.hpp"

namespace scg {

enum class CostKind { linear, polynomial, exponential, table };

std::string to_string(CostKind kind);

/// First index at which a load-cost table breaks the increasing/convex
/// requirement. `index` is the load k at which the failing inequality starts:
/// f(k+1) > f(k) for monotonicity, f(k+2) + f(k) >= 2 f(k+1) for convexity.
struct CostViolation {
  enum class Kind { monotonicity, convexity };
  Kind kind;
  int index;

  std::string describe() const;
  bool operator==(const CostViolation&) const = default;
};

/// Checks a table of costs for loads 1..values.size(). Throws ValidationError
/// on an empty table.
std::optional<CostViolation> validate_cost_values(std::span<const Rational> values);

/// Strictly increasing, weakly convex map from load count to exact cost,
/// materialized for loads 1..max_load. Construction validates eagerly.
///
///   linear:      f(k) = slope * k + intercept          params {slope, intercept}
///   polynomial:  f(k) = sum_j c_j k^j                  params {c_0, c_1, ...}
///   exponential: f(k) = scale * base^(k-1)             params {base, scale}
///   table:       f(k) = values[k-1]                    params = values
class CostFunction {
 public:
  static CostFunction linear(const Rational& slope, const Rational& intercept, int max_load);
  static CostFunction polynomial(std::vector<Rational> coeffs, int max_load);
  static CostFunction exponential(const Rational& base, const Rational& scale, int max_load);
  static CostFunction table(std::vector<Rational> values);

  /// f(k) = k.
  static CostFunction identity(int max_load) { return linear(1, 0, max_load); }

  CostKind kind() const noexcept { return kind_; }
  const std::vector<Rational>& params() const noexcept { return params_; }
  int max_load() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const Rational> values() const noexcept { return values_; }

  /// Cost at load k, 1 <= k <= max_load.
  const Rational& operator()(int load) const;

  /// Same function materialized on 1..max_load. Analytic kinds extend freely;
  /// a table can only be truncated.
  CostFunction with_max_load(int max_load) const;

  bool operator==(const CostFunction& other) const {
    return kind_ == other.kind_ && params_ == other.params_ && values_ == other.values_;
  }

 private:
  CostFunction(CostKind kind, std::vector<Rational> params, std::vector<Rational> values);

  CostKind kind_;
  std::vector<Rational> params_;
  std::vector<Rational> values_;
};

inline std::optional<CostViolation> validate_cost_function(const CostFunction& f) {
  return validate_cost_values(f.values());
}

struct MixtureComponent {
  Rational probability;
  CostFunction cost;
};

/// Pointwise convex combination of cost functions sharing a max_load, as a
/// table. Models resources whose cost functions are known only in
/// distribution. Throws ValidationError if probabilities do not sum to 1.
CostFunction mixture_cost_function(std::span<const MixtureComponent> components);

}  // namespace scg
