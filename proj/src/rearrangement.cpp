#include "fht/rearrangement.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fht/errors.hpp"

namespace fht {
namespace {

void require_samples(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::DegenerateGrid, "norm needs at least 2 samples");
}

// int_0^t log^alpha(2e/u) du = 2e * Gamma(alpha + 1, log(2e/t)).
double zygmund_primitive(double alpha, double t) {
  if (t <= 0.0) return 0.0;
  const double two_e = 2.0 * std::numbers::e;
  return two_e * boost::math::tgamma(alpha + 1.0, std::log(two_e / t));
}

}  // namespace

double StepFunction::operator()(double t) const {
  if (values.empty() || t < 0.0 || t >= edges.back()) return 0.0;
  const auto it = std::upper_bound(edges.begin(), edges.end(), t);
  return values[static_cast<std::size_t>(it - edges.begin()) - 1];
}

StepFunction decreasing_rearrangement(std::span<const double> magnitudes, std::span<const double> measures) {
  if (magnitudes.size() != measures.size())
    throw Error(ErrorCode::InvalidArgument, "magnitudes and measures differ in length");
  std::vector<std::size_t> order(magnitudes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (double m : magnitudes)
    if (!std::isfinite(m)) throw Error(ErrorCode::NonFiniteSample, "rearrangement of a non-finite sample");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return std::abs(magnitudes[l]) > std::abs(magnitudes[r]); });

  StepFunction out;
  out.edges.reserve(order.size() + 1);
  out.edges.push_back(0.0);
  for (std::size_t k : order) {
    out.values.push_back(std::abs(magnitudes[k]));
    out.edges.push_back(out.edges.back() + measures[k]);
  }
  out.positions.resize(out.values.size());
  // Cells sharing a value (to 1e-12 relative) share the centre of their joint t-range.
  for (std::size_t lo = 0; lo < out.values.size();) {
    std::size_t hi = lo + 1;
    while (hi < out.values.size() && out.values[lo] - out.values[hi] <= 1e-12 * out.values[lo]) ++hi;
    const double centre = 0.5 * (out.edges[lo] + out.edges[hi]);
    for (std::size_t k = lo; k < hi; ++k) out.positions[k] = centre;
    lo = hi;
  }
  return out;
}

StepFunction decreasing_rearrangement(const SampledFunction& f) {
  std::vector<double> mags(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const cplx v = f.values()[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::NonFiniteSample, "rearrangement of a non-finite sample");
    mags[k] = std::abs(v);
  }
  const auto widths = f.cell_widths();
  return decreasing_rearrangement(mags, widths);
}

double lp_norm(double p, const StepFunction& fstar) {
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidArgument, "lp_norm needs p >= 1");
  require_samples(fstar.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < fstar.size(); ++k)
    sum += std::pow(fstar.values[k], p) * (fstar.edges[k + 1] - fstar.edges[k]);
  return std::pow(sum, 1.0 / p);
}

double lp_norm(double p, const SampledFunction& f) { return lp_norm(p, decreasing_rearrangement(f)); }

double lorentz_norm(double p, double q, const StepFunction& fstar) {
  if (!(p > 1.0) || !(q >= 1.0)) throw Error(ErrorCode::InvalidArgument, "lorentz_norm needs p > 1 and q >= 1");
  require_samples(fstar.size());
  if (std::isinf(q)) {
    double sup = 0.0;
    for (std::size_t k = 0; k < fstar.size(); ++k)
      sup = std::max(sup, std::pow(fstar.positions[k], 1.0 / p) * fstar.values[k]);
    return sup;
  }
  // v^q int t^{q/p - 1} dt = v^q (p/q) (t_hi^{q/p} - t_lo^{q/p})
  const double r = q / p;
  double sum = 0.0;
  for (std::size_t k = 0; k < fstar.size(); ++k)
    sum += std::pow(fstar.values[k], q) * (std::pow(fstar.edges[k + 1], r) - std::pow(fstar.edges[k], r)) / r;
  return std::pow(sum, 1.0 / q);
}

double lorentz_norm(double p, double q, const SampledFunction& f) {
  require_samples(f.size());
  return lorentz_norm(p, q, decreasing_rearrangement(f));
}

double zygmund_norm(double alpha, const StepFunction& fstar) {
  if (!(alpha >= 1.0)) throw Error(ErrorCode::InvalidArgument, "zygmund_norm needs alpha >= 1");
  require_samples(fstar.size());
  double sum = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < fstar.size(); ++k) {
    const double next = zygmund_primitive(alpha, fstar.edges[k + 1]);
    if (fstar.values[k] != 0.0) sum += fstar.values[k] * (next - prev);
    prev = next;
  }
  return sum;
}

double zygmund_norm(double alpha, const SampledFunction& f) {
  require_samples(f.size());
  return zygmund_norm(alpha, decreasing_rearrangement(f));
}

NormEstimate refine_norm(const std::function<double(const SampledFunction&)>& norm,
                         const std::function<cplx(double)>& f, std::size_t n) {
  NormEstimate est;
  for (std::size_t level = 0; level < 3; ++level) {
    const std::size_t cells = n << level;
    est.grid_sizes.push_back(cells);
    est.sequence.push_back(norm(SampledFunction::sample(f, SampledFunction::uniform_midpoints(cells))));
  }
  const auto& v = est.sequence;
  est.value = v.back();
  const double scale = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), 1e-300});
  const double d1 = std::abs(v[1] - v[0]);
  const double d2 = std::abs(v[2] - v[1]);
  const bool jump = d1 > 0.25 * std::max(std::abs(v[0]), 1e-300) || d2 > 0.25 * std::max(std::abs(v[1]), 1e-300);
  const bool stalled = d2 > 1e-6 * scale && d2 > 0.9 * d1;
  est.status = (jump || stalled || !std::isfinite(est.value)) ? NormStatus::Unbounded : NormStatus::Bounded;
  return est;
}

}  // namespace fht
