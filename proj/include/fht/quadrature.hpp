#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fht {

using cplx = std::complex<double>;

/// Tolerances for every adaptive integral in the toolkit.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_panels = 4096;
  double edge_eps = 1e-6;

  /// Throws InvalidArgument unless abs_tol, rel_tol > 0 and max_panels >= 4.
  void validate() const;
};

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature of a complex integrand over [a, b],
/// starting from the partition given by `breakpoints` (sorted, strictly inside (a, b)).
/// Panels are bisected in order of largest error until the total estimate drops below
/// max(abs_tol, rel_tol * |value|). Throws NoConvergence when the panel budget runs out.
/// The budget is raised to 4x the initial panel count when breakpoints demand it.
[[nodiscard]] QuadratureResult integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                                                  std::span<const double> breakpoints, const QuadratureConfig& cfg);

/// Gauss-Legendre rule of order n on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
[[nodiscard]] const GaussLegendreRule& gauss_legendre(std::size_t n);

/// Nodes and weights for int_0^pi g(theta) d theta, composite Gauss-Legendre on panels graded
/// geometrically (ratio 1/2) toward both ends; `levels` graded panels per end plus two
/// central panels, `order` nodes per panel.
struct AngleGrid {
  std::vector<double> theta;
  std::vector<double> weight;
};
[[nodiscard]] AngleGrid graded_angle_grid(std::size_t levels, std::size_t order);

}  // namespace fht
