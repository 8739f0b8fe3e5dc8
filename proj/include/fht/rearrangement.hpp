#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "fht/functions.hpp"

namespace fht {

/// Decreasing rearrangement as a step function on (0, m): value k occupies (edges[k], edges[k+1]).
/// `positions[k]` is where the sample value is pinned for pointwise use: the centre of the
/// t-range shared by all cells carrying the same value.
struct StepFunction {
  std::vector<double> edges;
  std::vector<double> values;
  std::vector<double> positions;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double measure() const noexcept { return edges.empty() ? 0.0 : edges.back(); }
  /// Right-continuous step evaluation; 0 beyond the support.
  [[nodiscard]] double operator()(double t) const;
};

/// |values| sorted non-increasingly, each carrying its cell width. Throws NonFiniteSample.
[[nodiscard]] StepFunction decreasing_rearrangement(const SampledFunction& f);
/// Same from explicit magnitudes and cell measures (e.g. quadrature weights).
[[nodiscard]] StepFunction decreasing_rearrangement(std::span<const double> magnitudes,
                                                    std::span<const double> measures);

inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

/// (int |f|^p)^{1/p} on the cell quadrature.
[[nodiscard]] double lp_norm(double p, const SampledFunction& f);
[[nodiscard]] double lp_norm(double p, const StepFunction& fstar);

/// (int_0^m (t^{1/p} f*(t))^q dt/t)^{1/q}, integrated exactly on each step; for q = infinity,
/// max_k positions[k]^{1/p} values[k]. Needs p > 1, q >= 1; DegenerateGrid below 2 samples.
[[nodiscard]] double lorentz_norm(double p, double q, const SampledFunction& f);
[[nodiscard]] double lorentz_norm(double p, double q, const StepFunction& fstar);

/// int_0^2 f*(t) log^alpha(2e/t) dt, each step integrated exactly through the incomplete
/// gamma function. Needs alpha >= 1.
[[nodiscard]] double zygmund_norm(double alpha, const SampledFunction& f);
[[nodiscard]] double zygmund_norm(double alpha, const StepFunction& fstar);

enum class NormStatus { Bounded, Unbounded };

struct NormEstimate {
  double value = 0.0;               // finest-grid value
  NormStatus status = NormStatus::Bounded;
  std::vector<std::size_t> grid_sizes;
  std::vector<double> sequence;     // value on each grid
};

/// Evaluates `norm` on uniform midpoint grids of n, 2n, 4n cells. Unbounded when one doubling
/// moves the value by more than 25%, or when successive increments stop contracting
/// (|v2 - v1| > 0.9 |v1 - v0| while still above 1e-6 relative), the signature of log growth.
[[nodiscard]] NormEstimate refine_norm(const std::function<double(const SampledFunction&)>& norm,
                                       const std::function<cplx(double)>& f, std::size_t n = 1024);

}  // namespace fht
