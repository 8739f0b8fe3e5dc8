#include "fht/transform.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "fht/errors.hpp"

#if defined(FHT_HAVE_OPENMP)
#include <omp.h>
#endif

namespace fht {
namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_interior(double t, const QuadratureConfig& cfg) {
  if (!(t > -1.0 + cfg.edge_eps && t < 1.0 - cfg.edge_eps))
    throw Error(ErrorCode::InvalidArgument,
                "evaluation point " + std::to_string(t) + " outside (-1+edge_eps, 1-edge_eps)");
}

void require_plain(const EndpointWeightedFunction& g, const char* who) {
  if (!g.has_exponents(0.0, 0.0))
    throw Error(ErrorCode::UnsupportedExponents, std::string(who) + " spectral rule needs exponents (0, 0)");
}

template <typename Job>
std::vector<cplx> run_parallel(std::size_t n, Job job) {
  std::vector<cplx> out(n);
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#if defined(FHT_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = job(static_cast<std::size_t>(k));
    } catch (...) {
#if defined(FHT_HAVE_OPENMP)
#pragma omp critical(fht_batch_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

cplx fht_at_angle(const Evaluable& f, double theta, const QuadratureConfig& cfg, Convention conv) {
  const cplx ft = f.at_angle(theta);
  if (!finite(ft)) throw Error(ErrorCode::SingularEvaluation, "f is not finite at the evaluation point");

  const double half_theta = 0.5 * theta;
  auto integrand = [&](double phi) -> cplx {
    // cos(phi) - cos(theta) without cancellation
    const double den = -2.0 * std::sin(0.5 * phi + half_theta) * std::sin(0.5 * phi - half_theta);
    if (den == 0.0) return {};
    return (f.density(phi) - ft * std::sin(phi)) / den;
  };

  std::vector<double> breaks = f.breakpoint_angles();
  breaks.insert(std::lower_bound(breaks.begin(), breaks.end(), theta), theta);
  const QuadratureResult r = integrate_adaptive(integrand, 0.0, std::numbers::pi, breaks, cfg);

  // log((1-t)/(1+t)) = 2 log tan(theta/2)
  const double log_term = 2.0 * std::log(std::tan(half_theta));
  cplx value = (r.value + ft * log_term) / std::numbers::pi;
  return apply_convention(value, conv);
}

cplx fht_pointwise(const Evaluable& f, double t, const QuadratureConfig& cfg, Convention conv) {
  check_interior(t, cfg);
  return fht_at_angle(f, std::acos(t), cfg, conv);
}

std::vector<cplx> fht_batch(const Evaluable& f, std::span<const double> points, const QuadratureConfig& cfg,
                            Convention conv) {
  return run_parallel(points.size(), [&](std::size_t k) { return fht_pointwise(f, points[k], cfg, conv); });
}

std::vector<cplx> fht_batch_serial(const Evaluable& f, std::span<const double> points, const QuadratureConfig& cfg,
                                   Convention conv) {
  std::vector<cplx> out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) out[k] = fht_pointwise(f, points[k], cfg, conv);
  return out;
}

std::vector<cplx> fht_batch_angles(const Evaluable& f, std::span<const double> thetas, const QuadratureConfig& cfg) {
  return run_parallel(thetas.size(), [&](std::size_t k) { return fht_at_angle(f, thetas[k], cfg); });
}

EndpointWeightedFunction fht_spectral(const EndpointWeightedFunction& f) {
  if (f.has_exponents(-0.5, -0.5)) {
    const ChebyshevSeries s = f.smooth().to_first_kind();
    std::vector<cplx> out(std::max<std::size_t>(s.size(), 2) - 1);
    for (std::size_t n = 1; n < s.size(); ++n) out[n - 1] = s.coeff(n);
    return EndpointWeightedFunction::plain(ChebyshevSeries(std::move(out), ChebyshevBasis::SecondKind));
  }
  if (f.has_exponents(0.5, 0.5)) {
    const ChebyshevSeries s = f.smooth().to_second_kind();
    std::vector<cplx> out(s.size() + 1);
    for (std::size_t n = 0; n < s.size(); ++n) out[n + 1] = -s.coeff(n);
    return EndpointWeightedFunction::plain(ChebyshevSeries(std::move(out), ChebyshevBasis::FirstKind));
  }
  throw Error(ErrorCode::UnsupportedExponents,
              "closed-form transform exists only for exponents (-1/2, -1/2) and (1/2, 1/2)");
}

EndpointWeightedFunction fht_hat(const EndpointWeightedFunction& g) {
  require_plain(g, "fht_hat");
  const ChebyshevSeries s = g.smooth().to_second_kind();
  std::vector<cplx> out(s.size() + 1);
  for (std::size_t n = 0; n < s.size(); ++n) out[n + 1] = s.coeff(n);
  return EndpointWeightedFunction::over_w(ChebyshevSeries(std::move(out), ChebyshevBasis::FirstKind));
}

EndpointWeightedFunction fht_hat(const ChebyshevSeries& g) { return fht_hat(EndpointWeightedFunction::plain(g)); }

EndpointWeightedFunction fht_hat(const SampledFunction& g, std::size_t degree) {
  return fht_hat(interpolate_chebyshev([&g](double x) { return g(x); }, degree));
}

EndpointWeightedFunction fht_check(const EndpointWeightedFunction& g) {
  require_plain(g, "fht_check");
  const ChebyshevSeries s = g.smooth().to_first_kind();
  std::vector<cplx> out(std::max<std::size_t>(s.size(), 2) - 1);
  for (std::size_t n = 1; n < s.size(); ++n) out[n - 1] = -s.coeff(n);
  return EndpointWeightedFunction::times_w(ChebyshevSeries(std::move(out), ChebyshevBasis::SecondKind));
}

EndpointWeightedFunction fht_check(const ChebyshevSeries& g) { return fht_check(EndpointWeightedFunction::plain(g)); }

EndpointWeightedFunction fht_check(const SampledFunction& g, std::size_t degree) {
  return fht_check(interpolate_chebyshev([&g](double x) { return g(x); }, degree));
}

cplx fht_hat_pointwise(const Evaluable& g, double t, const QuadratureConfig& cfg) {
  return -fht_pointwise(g.times_weight(0.5, 0.5), t, cfg) / sqrt_weight(t);
}

cplx fht_check_pointwise(const Evaluable& g, double t, const QuadratureConfig& cfg) {
  return -sqrt_weight(t) * fht_pointwise(g.times_weight(-0.5, -0.5), t, cfg);
}

cplx integrate(const Evaluable& f, const QuadratureConfig& cfg) {
  const auto density = [&f](double phi) { return f.density(phi); };
  return integrate_adaptive(density, 0.0, std::numbers::pi, f.breakpoint_angles(), cfg).value;
}

EndpointWeightedFunction project_P(const Evaluable& f, const QuadratureConfig& cfg) {
  return EndpointWeightedFunction::over_w(ChebyshevSeries::constant(integrate(f, cfg) / std::numbers::pi));
}

EndpointWeightedFunction project_Q(const Evaluable& f, const QuadratureConfig& cfg) {
  const cplx c = integrate(f.times_weight(-0.5, -0.5), cfg) / std::numbers::pi;
  return EndpointWeightedFunction::plain(ChebyshevSeries::constant(c));
}

void validate_weight_exponents(double gamma, double delta, double p) {
  if (!(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "weighted transform needs p > 1");
  const double lo = -1.0 / p;
  const double hi = 1.0 - 1.0 / p;
  const auto inside = [&](double e) { return e > lo && e < hi; };
  if (!inside(gamma) || !inside(delta))
    throw Error(ErrorCode::ExponentOutOfRange, "weight exponents must lie in (-1/p, 1/p') = (" +
                                                   std::to_string(lo) + ", " + std::to_string(hi) + ")");
}

cplx weighted_transform(double gamma, double delta, double p, const Evaluable& f, double t,
                        const QuadratureConfig& cfg) {
  validate_weight_exponents(gamma, delta, p);
  const cplx rho = endpoint_weight(gamma, delta, t);
  return rho * fht_pointwise(f.times_weight(-gamma, -delta), t, cfg);
}

}  // namespace fht
