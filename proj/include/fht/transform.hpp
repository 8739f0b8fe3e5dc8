#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fht/functions.hpp"
#include "fht/quadrature.hpp"

namespace fht {

/// Tricomi: T f(t) = (1/pi) p.v. int f(x)/(x-t) dx.  Widom: the same divided by i.
enum class Convention { Tricomi, Widom };

[[nodiscard]] inline cplx apply_convention(cplx tricomi_value, Convention conv) {
  // Division by i written out so that multiplying back by i is exact.
  return conv == Convention::Widom ? cplx(tricomi_value.imag(), -tricomi_value.real()) : tricomi_value;
}

/// Finite Hilbert transform at an interior point by singularity subtraction:
///   T f(t) = (1/pi) [ int (f(x) - f(t))/(x - t) dx + f(t) log((1-t)/(1+t)) ],
/// the proper integral taken in the angle x = cos(phi), which absorbs endpoint powers.
/// Requires t in (-1+edge_eps, 1-edge_eps); throws SingularEvaluation if f(t) is not finite
/// and NoConvergence when the panel budget is exhausted.
[[nodiscard]] cplx fht_pointwise(const Evaluable& f, double t, const QuadratureConfig& cfg = {},
                                 Convention conv = Convention::Tricomi);

/// Same transform at t = cos(theta). No edge check, so nested integrals may reach the endpoints.
[[nodiscard]] cplx fht_at_angle(const Evaluable& f, double theta, const QuadratureConfig& cfg = {},
                                Convention conv = Convention::Tricomi);

/// Batch evaluation over points, parallel with OpenMP when available. Each point is an
/// independent job, so results are bitwise identical to fht_batch_serial.
[[nodiscard]] std::vector<cplx> fht_batch(const Evaluable& f, std::span<const double> points,
                                          const QuadratureConfig& cfg = {}, Convention conv = Convention::Tricomi);
/// Reference serial loop for fht_batch.
[[nodiscard]] std::vector<cplx> fht_batch_serial(const Evaluable& f, std::span<const double> points,
                                                 const QuadratureConfig& cfg = {},
                                                 Convention conv = Convention::Tricomi);
/// Batch over angles (parallel), used by the norm probes.
[[nodiscard]] std::vector<cplx> fht_batch_angles(const Evaluable& f, std::span<const double> thetas,
                                                 const QuadratureConfig& cfg = {});

/// Exact images of the two Chebyshev classes:
///   (1/w) sum a_n T_n  ->  sum_{n>=1} a_n U_{n-1},
///   w sum b_n U_n      -> -sum b_n T_{n+1}.
/// Any other exponent pair throws UnsupportedExponents.
[[nodiscard]] EndpointWeightedFunction fht_spectral(const EndpointWeightedFunction& f);

/// T^(g) = -(1/w) T(g w).  Spectral rule sum b_n U_n -> (1/w) sum b_n T_{n+1}; g must have exponents (0, 0).
[[nodiscard]] EndpointWeightedFunction fht_hat(const EndpointWeightedFunction& g);
[[nodiscard]] EndpointWeightedFunction fht_hat(const ChebyshevSeries& g);
/// Sampled data is interpolated to a Chebyshev series of the given degree first.
[[nodiscard]] EndpointWeightedFunction fht_hat(const SampledFunction& g, std::size_t degree = 64);

/// T~(g) = -w T(g / w).  Spectral rule sum a_n T_n -> -w sum_{n>=1} a_n U_{n-1}; g must have exponents (0, 0).
[[nodiscard]] EndpointWeightedFunction fht_check(const EndpointWeightedFunction& g);
[[nodiscard]] EndpointWeightedFunction fht_check(const ChebyshevSeries& g);
[[nodiscard]] EndpointWeightedFunction fht_check(const SampledFunction& g, std::size_t degree = 64);

/// Quadrature forms of the pseudo-inverses at one point.
[[nodiscard]] cplx fht_hat_pointwise(const Evaluable& g, double t, const QuadratureConfig& cfg = {});
[[nodiscard]] cplx fht_check_pointwise(const Evaluable& g, double t, const QuadratureConfig& cfg = {});

/// int_{-1}^{1} f(x) dx.
[[nodiscard]] cplx integrate(const Evaluable& f, const QuadratureConfig& cfg = {});

/// P f = ((1/pi) int f) / w.
[[nodiscard]] EndpointWeightedFunction project_P(const Evaluable& f, const QuadratureConfig& cfg = {});
/// Q f = ((1/pi) int f / w) * 1.
[[nodiscard]] EndpointWeightedFunction project_Q(const Evaluable& f, const QuadratureConfig& cfg = {});

/// rho(t) T(f / rho)(t) with rho = (1-x)^gamma (1+x)^delta. Both exponents must lie in
/// (-1/p, 1/p') for the declared p > 1, otherwise ExponentOutOfRange.
[[nodiscard]] cplx weighted_transform(double gamma, double delta, double p, const Evaluable& f, double t,
                                      const QuadratureConfig& cfg = {});
void validate_weight_exponents(double gamma, double delta, double p);

}  // namespace fht
