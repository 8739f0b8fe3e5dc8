#include "fht/airfoil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fht/errors.hpp"
#include "fht/transform.hpp"

namespace fht {

EndpointWeightedFunction AirfoilSolution::with_constant(cplx c) const {
  if (!homogeneous_coefficient)
    throw Error(ErrorCode::InvalidArgument, "high-regime solutions are unique; no free constant");
  ChebyshevSeries s = particular.smooth().to_first_kind();
  s += ChebyshevSeries::constant(c - *homogeneous_coefficient);
  return EndpointWeightedFunction::over_w(std::move(s));
}

ChebyshevSeries as_rhs_series(const EndpointWeightedFunction& g) {
  if (!g.has_exponents(0.0, 0.0))
    throw Error(ErrorCode::UnsupportedExponents, "airfoil right-hand sides must have exponents (0, 0)");
  return g.smooth();
}

ChebyshevSeries as_rhs_series(const SampledFunction& g, std::size_t degree) {
  return interpolate_chebyshev([&g](double x) { return g(x); }, degree);
}

AirfoilSolution solve_low(const ChebyshevSeries& g, cplx c) {
  ChebyshevSeries s = fht_hat(g).smooth();
  s += ChebyshevSeries::constant(c);
  return {EndpointWeightedFunction::over_w(std::move(s)), c, Regime::Low};
}

AirfoilSolution solve_low(const SampledFunction& g, cplx c, const AirfoilConfig& cfg) {
  return solve_low(as_rhs_series(g, cfg.interp_degree), c);
}

double solvability_residual(const Evaluable& g, const QuadratureConfig& cfg) {
  return std::abs(integrate(g.times_weight(-0.5, -0.5), cfg)) / std::numbers::pi;
}

AirfoilSolution solve_high(const ChebyshevSeries& g, const AirfoilConfig& cfg) {
  const double residual = solvability_residual(Evaluable(g), cfg.quad);
  if (residual > cfg.solvability_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "int g/w != 0 (solvability residual " << residual << " > " << cfg.solvability_tol << ")";
    throw NotSolvableError(residual, msg.str());
  }
  return {fht_check(g), std::nullopt, Regime::High};
}

AirfoilSolution solve_high(const SampledFunction& g, const AirfoilConfig& cfg) {
  return solve_high(as_rhs_series(g, cfg.interp_degree), cfg);
}

std::vector<double> interior_grid(std::size_t n) {
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k)
    grid[k] = -1.0 + 2.0 * static_cast<double>(k + 1) / static_cast<double>(n + 1);
  return grid;
}

RoundTripReport measure_roundtrip(const AirfoilSolution& sol, const Evaluable& g, const AirfoilConfig& cfg) {
  RoundTripReport report;
  report.grid = interior_grid(cfg.check_points);
  const auto image = fht_batch(sol.particular, report.grid, cfg.quad);
  for (std::size_t k = 0; k < report.grid.size(); ++k)
    report.max_residual = std::max(report.max_residual, std::abs(image[k] - g(report.grid[k])));
  if (sol.regime == Regime::Low) report.constant_recovered = integrate(sol.particular, cfg.quad) / std::numbers::pi;
  return report;
}

RoundTripReport verify_roundtrip(const ChebyshevSeries& g, Regime regime, cplx c, const AirfoilConfig& cfg) {
  const AirfoilSolution sol = regime == Regime::Low ? solve_low(g, c) : solve_high(g, cfg);
  return measure_roundtrip(sol, Evaluable(g), cfg);
}

}  // namespace fht
