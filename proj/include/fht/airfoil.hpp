#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fht/functions.hpp"
#include "fht/quadrature.hpp"

namespace fht {

/// Low: Boyd indices above 1/2, T onto with kernel span{1/w}.  High: below 1/2, T one-to-one.
enum class Regime { Low, High };

struct AirfoilConfig {
  QuadratureConfig quad{};
  double solvability_tol = 1e-8;
  std::size_t interp_degree = 64;  // sampled right-hand sides are interpolated first
  std::size_t check_points = 20;   // interior grid for round-trip residuals
};

struct AirfoilSolution {
  EndpointWeightedFunction particular;
  std::optional<cplx> homogeneous_coefficient;  // set in the low regime only
  Regime regime;

  /// Low regime: the member of the solution family with (1/pi) int f = c.
  [[nodiscard]] EndpointWeightedFunction with_constant(cplx c) const;
};

/// Right-hand side in a form the inversion formulas act on: exponents (0, 0).
[[nodiscard]] ChebyshevSeries as_rhs_series(const EndpointWeightedFunction& g);
[[nodiscard]] ChebyshevSeries as_rhs_series(const SampledFunction& g, std::size_t degree);

/// f = -(1/w) T(g w) + C / w.
[[nodiscard]] AirfoilSolution solve_low(const ChebyshevSeries& g, cplx c);
[[nodiscard]] AirfoilSolution solve_low(const SampledFunction& g, cplx c, const AirfoilConfig& cfg = {});

/// |(1/pi) int g / w|; zero exactly when g lies in the range of T in the high regime.
[[nodiscard]] double solvability_residual(const Evaluable& g, const QuadratureConfig& cfg = {});

/// f = -w T(g / w). Throws NotSolvableError when solvability_residual(g) > solvability_tol.
[[nodiscard]] AirfoilSolution solve_high(const ChebyshevSeries& g, const AirfoilConfig& cfg = {});
[[nodiscard]] AirfoilSolution solve_high(const SampledFunction& g, const AirfoilConfig& cfg = {});

struct RoundTripReport {
  double max_residual = 0.0;  // sup over the check grid of |T(f) - g|
  std::optional<cplx> constant_recovered;
  std::vector<double> grid;
};

/// Interior check grid: n points of a uniform partition of (-1, 1), endpoints excluded.
[[nodiscard]] std::vector<double> interior_grid(std::size_t n);

/// Solves in the given regime and measures T(f) - g by quadrature on the check grid; in the low
/// regime also reports (1/pi) int f for comparison with c. Solver errors propagate.
[[nodiscard]] RoundTripReport verify_roundtrip(const ChebyshevSeries& g, Regime regime, cplx c = 0.0,
                                               const AirfoilConfig& cfg = {});
/// Residual of an existing solution.
[[nodiscard]] RoundTripReport measure_roundtrip(const AirfoilSolution& sol, const Evaluable& g,
                                                const AirfoilConfig& cfg = {});

}  // namespace fht
