#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fht/chebyshev.hpp"

namespace fht {

/// Default exclusion band around +-1 for sample grids and evaluation points.
inline constexpr double kDefaultEdgeEps = 1e-6;

/// (1-x)^a (1+x)^b at an interior point, principal branch (both bases are positive).
[[nodiscard]] cplx endpoint_weight(cplx a, cplx b, double x);
/// Same weight evaluated at x = cos(theta), accurate up to the endpoints.
[[nodiscard]] cplx endpoint_weight_at_angle(cplx a, cplx b, double theta);

/// w(x) = sqrt(1 - x^2).
[[nodiscard]] inline double sqrt_weight(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

/// (1-x)^a (1+x)^b * smooth(x). Construction rejects Re(a) <= -1 or Re(b) <= -1.
class EndpointWeightedFunction {
 public:
  EndpointWeightedFunction(cplx a, cplx b, ChebyshevSeries smooth);

  /// smooth / w, exponents (-1/2, -1/2).
  static EndpointWeightedFunction over_w(ChebyshevSeries smooth);
  /// w * smooth, exponents (+1/2, +1/2).
  static EndpointWeightedFunction times_w(ChebyshevSeries smooth);
  /// Exponents (0, 0).
  static EndpointWeightedFunction plain(ChebyshevSeries smooth);

  [[nodiscard]] cplx a() const noexcept { return a_; }
  [[nodiscard]] cplx b() const noexcept { return b_; }
  [[nodiscard]] const ChebyshevSeries& smooth() const noexcept { return smooth_; }

  [[nodiscard]] cplx operator()(double x) const;
  [[nodiscard]] cplx at_angle(double theta) const;

  [[nodiscard]] bool has_exponents(double a, double b) const noexcept;

 private:
  cplx a_;
  cplx b_;
  ChebyshevSeries smooth_;
};

/// Strictly increasing interior grid with complex samples.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> points, std::vector<cplx> values, std::optional<double> holder_hint = {},
                  double edge_eps = kDefaultEdgeEps);

  /// Samples f at `points`.
  static SampledFunction sample(const std::function<cplx(double)>& f, std::vector<double> points,
                                std::optional<double> holder_hint = {}, double edge_eps = kDefaultEdgeEps);
  /// n cell midpoints of a uniform partition of (-1, 1).
  [[nodiscard]] static std::vector<double> uniform_midpoints(std::size_t n);

  [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
  [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }
  [[nodiscard]] std::optional<double> holder_hint() const noexcept { return holder_hint_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

  /// Cell of sample k: bounded by midpoints to its neighbours, first/last cells reaching -1 and 1.
  [[nodiscard]] std::pair<double, double> cell(std::size_t k) const;
  [[nodiscard]] std::vector<double> cell_widths() const;

  /// Piecewise-linear interpolant, constant beyond the first and last samples.
  [[nodiscard]] cplx operator()(double x) const;

 private:
  std::vector<double> points_;
  std::vector<cplx> values_;
  std::optional<double> holder_hint_;
};

/// Finite union of disjoint open intervals on the real line.
class IndicatorUnion {
 public:
  /// Sorts and merges overlapping or touching intervals; throws DegenerateSet when the measure is 0.
  explicit IndicatorUnion(std::vector<std::pair<double, double>> intervals);

  [[nodiscard]] const std::vector<std::pair<double, double>>& intervals() const noexcept { return intervals_; }
  [[nodiscard]] double measure() const noexcept;
  [[nodiscard]] bool contains(double x) const noexcept;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// One summand (1-x)^a (1+x)^b * s(x) of an Evaluable, with s given as a function of the
/// angle theta, x = cos(theta).
struct WeightedTerm {
  cplx a{};
  cplx b{};
  std::function<cplx(double theta)> smooth;
};

/// Type-erased integrand for the transform engine: a finite sum of endpoint-weighted terms,
/// plus optional interior breakpoints where the integrand is only Holder continuous.
class Evaluable {
 public:
  Evaluable() = default;
  Evaluable(const EndpointWeightedFunction& f);  // NOLINT(google-explicit-constructor)
  Evaluable(const ChebyshevSeries& s);           // NOLINT(google-explicit-constructor)
  Evaluable(const SampledFunction& f);           // NOLINT(google-explicit-constructor)

  static Evaluable from_callable(std::function<cplx(double x)> f, std::optional<double> holder_hint = {});
  static Evaluable from_angle(std::function<cplx(double theta)> f, cplx a = 0.0, cplx b = 0.0);
  static Evaluable zero() { return {}; }

  [[nodiscard]] cplx operator()(double x) const;
  [[nodiscard]] cplx at_angle(double theta) const;
  /// f(cos theta) * sin(theta): the integrand of int f dx after x = cos(theta).
  [[nodiscard]] cplx density(double theta) const;

  /// f * (1-x)^gamma (1+x)^delta.
  [[nodiscard]] Evaluable times_weight(cplx gamma, cplx delta) const;
  [[nodiscard]] Evaluable scaled(cplx s) const;
  Evaluable& operator+=(const Evaluable& other);
  friend Evaluable operator+(Evaluable lhs, const Evaluable& rhs) { return lhs += rhs; }

  void add_breakpoint(double x);
  /// Breakpoints expressed as angles, sorted ascending, strictly inside (0, pi).
  [[nodiscard]] const std::vector<double>& breakpoint_angles() const noexcept { return breaks_; }
  [[nodiscard]] const std::vector<WeightedTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::optional<double> holder_hint() const noexcept { return holder_hint_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<WeightedTerm> terms_;
  std::vector<double> breaks_;
  std::optional<double> holder_hint_;
};

}  // namespace fht
