#include "fht/functions.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "fht/errors.hpp"

namespace fht {
namespace {

// base^e for base >= 0 with the conventions 0^0 = 1, 0^e = 0 (Re e > 0), inf otherwise.
cplx pow_nonneg(double log_base, cplx e) {
  if (e == cplx{}) return 1.0;
  if (std::isinf(log_base)) {
    if (e.real() > 0) return 0.0;
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return std::exp(e * log_base);
}

double clamp_interior(double x) {
  constexpr double lim = 1.0 - 1e-15;
  return std::clamp(x, -lim, lim);
}

}  // namespace

cplx endpoint_weight(cplx a, cplx b, double x) {
  return pow_nonneg(std::log1p(-x), a) * pow_nonneg(std::log1p(x), b);
}

cplx endpoint_weight_at_angle(cplx a, cplx b, double theta) {
  // 1 - cos = 2 sin^2(theta/2), 1 + cos = 2 cos^2(theta/2)
  const double ls = std::log(std::abs(std::sin(0.5 * theta)));
  const double lc = std::log(std::abs(std::cos(0.5 * theta)));
  return pow_nonneg(std::numbers::ln2 + 2.0 * ls, a) * pow_nonneg(std::numbers::ln2 + 2.0 * lc, b);
}

// ---------------------------------------------------------------------------

EndpointWeightedFunction::EndpointWeightedFunction(cplx a, cplx b, ChebyshevSeries smooth)
    : a_(a), b_(b), smooth_(std::move(smooth)) {
  if (!(a.real() > -1.0) || !(b.real() > -1.0))
    throw Error(ErrorCode::InvalidArgument, "endpoint exponents must satisfy Re(a) > -1 and Re(b) > -1");
}

EndpointWeightedFunction EndpointWeightedFunction::over_w(ChebyshevSeries smooth) {
  return {-0.5, -0.5, std::move(smooth)};
}

EndpointWeightedFunction EndpointWeightedFunction::times_w(ChebyshevSeries smooth) {
  return {0.5, 0.5, std::move(smooth)};
}

EndpointWeightedFunction EndpointWeightedFunction::plain(ChebyshevSeries smooth) {
  return {0.0, 0.0, std::move(smooth)};
}

cplx EndpointWeightedFunction::operator()(double x) const { return endpoint_weight(a_, b_, x) * smooth_(x); }

cplx EndpointWeightedFunction::at_angle(double theta) const {
  return endpoint_weight_at_angle(a_, b_, theta) * smooth_(std::cos(theta));
}

bool EndpointWeightedFunction::has_exponents(double a, double b) const noexcept {
  return a_ == cplx(a) && b_ == cplx(b);
}

// ---------------------------------------------------------------------------

SampledFunction::SampledFunction(std::vector<double> points, std::vector<cplx> values,
                                 std::optional<double> holder_hint, double edge_eps)
    : points_(std::move(points)), values_(std::move(values)), holder_hint_(holder_hint) {
  if (points_.size() != values_.size())
    throw Error(ErrorCode::InvalidArgument, "sample points and values differ in length");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!(points_[k] >= -1.0 + edge_eps && points_[k] <= 1.0 - edge_eps))
      throw Error(ErrorCode::InvalidArgument,
                  "sample point " + std::to_string(points_[k]) + " outside [-1+eps, 1-eps]");
    if (k > 0 && !(points_[k] > points_[k - 1]))
      throw Error(ErrorCode::InvalidArgument, "sample points must be strictly increasing");
  }
  if (holder_hint_ && !(*holder_hint_ > 0.0 && *holder_hint_ <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "holder hint must lie in (0, 1]");
}

SampledFunction SampledFunction::sample(const std::function<cplx(double)>& f, std::vector<double> points,
                                        std::optional<double> holder_hint, double edge_eps) {
  std::vector<cplx> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) values[k] = f(points[k]);
  return {std::move(points), std::move(values), holder_hint, edge_eps};
}

std::vector<double> SampledFunction::uniform_midpoints(std::size_t n) {
  std::vector<double> pts(n);
  const double h = 2.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) pts[k] = -1.0 + (static_cast<double>(k) + 0.5) * h;
  return pts;
}

std::pair<double, double> SampledFunction::cell(std::size_t k) const {
  const double lo = (k == 0) ? -1.0 : 0.5 * (points_[k - 1] + points_[k]);
  const double hi = (k + 1 == points_.size()) ? 1.0 : 0.5 * (points_[k] + points_[k + 1]);
  return {lo, hi};
}

std::vector<double> SampledFunction::cell_widths() const {
  std::vector<double> widths(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto [lo, hi] = cell(k);
    widths[k] = hi - lo;
  }
  return widths;
}

cplx SampledFunction::operator()(double x) const {
  if (points_.empty()) return {};
  if (x <= points_.front()) return values_.front();
  if (x >= points_.back()) return values_.back();
  const auto it = std::upper_bound(points_.begin(), points_.end(), x);
  const auto k = static_cast<std::size_t>(it - points_.begin());
  const double s = (x - points_[k - 1]) / (points_[k] - points_[k - 1]);
  return values_[k - 1] + s * (values_[k] - values_[k - 1]);
}

// ---------------------------------------------------------------------------

IndicatorUnion::IndicatorUnion(std::vector<std::pair<double, double>> intervals) {
  std::erase_if(intervals, [](const auto& iv) { return !(iv.second > iv.first); });
  std::sort(intervals.begin(), intervals.end());
  for (const auto& iv : intervals) {
    if (!intervals_.empty() && iv.first <= intervals_.back().second)
      intervals_.back().second = std::max(intervals_.back().second, iv.second);
    else
      intervals_.push_back(iv);
  }
  if (!(measure() > 0.0)) throw Error(ErrorCode::DegenerateSet, "indicator union has zero measure");
}

double IndicatorUnion::measure() const noexcept {
  double m = 0.0;
  for (const auto& [lo, hi] : intervals_) m += hi - lo;
  return m;
}

bool IndicatorUnion::contains(double x) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [x](const auto& iv) { return x > iv.first && x < iv.second; });
}

// ---------------------------------------------------------------------------

Evaluable::Evaluable(const EndpointWeightedFunction& f) {
  auto series = std::make_shared<const ChebyshevSeries>(f.smooth());
  terms_.push_back({f.a(), f.b(), [series](double theta) { return (*series)(std::cos(theta)); }});
}

Evaluable::Evaluable(const ChebyshevSeries& s) : Evaluable(EndpointWeightedFunction::plain(s)) {}

Evaluable::Evaluable(const SampledFunction& f) : holder_hint_(f.holder_hint()) {
  auto samples = std::make_shared<const SampledFunction>(f);
  terms_.push_back({0.0, 0.0, [samples](double theta) { return (*samples)(std::cos(theta)); }});
  for (double x : f.points()) add_breakpoint(x);
}

Evaluable Evaluable::from_callable(std::function<cplx(double x)> f, std::optional<double> holder_hint) {
  Evaluable e;
  e.holder_hint_ = holder_hint;
  e.terms_.push_back({0.0, 0.0, [f = std::move(f)](double theta) { return f(clamp_interior(std::cos(theta))); }});
  return e;
}

Evaluable Evaluable::from_angle(std::function<cplx(double theta)> f, cplx a, cplx b) {
  Evaluable e;
  e.terms_.push_back({a, b, std::move(f)});
  return e;
}

cplx Evaluable::operator()(double x) const { return at_angle(std::acos(std::clamp(x, -1.0, 1.0))); }

cplx Evaluable::at_angle(double theta) const {
  cplx sum{};
  for (const auto& t : terms_) sum += endpoint_weight_at_angle(t.a, t.b, theta) * t.smooth(theta);
  return sum;
}

cplx Evaluable::density(double theta) const {
  // (1-x)^a (1+x)^b sin(theta) = 2^{a+b+1} sin(theta/2)^{2a+1} cos(theta/2)^{2b+1}
  const double ls = std::log(std::abs(std::sin(0.5 * theta)));
  const double lc = std::log(std::abs(std::cos(0.5 * theta)));
  cplx sum{};
  for (const auto& t : terms_) {
    const cplx w = std::exp((t.a + t.b + 1.0) * std::numbers::ln2) * pow_nonneg(ls, 2.0 * t.a + 1.0) *
                   pow_nonneg(lc, 2.0 * t.b + 1.0);
    if (w == cplx{}) continue;
    sum += w * t.smooth(theta);
  }
  return sum;
}

Evaluable Evaluable::times_weight(cplx gamma, cplx delta) const {
  Evaluable e = *this;
  for (auto& t : e.terms_) {
    t.a += gamma;
    t.b += delta;
  }
  return e;
}

Evaluable Evaluable::scaled(cplx s) const {
  Evaluable e = *this;
  for (auto& t : e.terms_) t.smooth = [inner = std::move(t.smooth), s](double theta) { return s * inner(theta); };
  return e;
}

Evaluable& Evaluable::operator+=(const Evaluable& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  for (double th : other.breaks_) {
    const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), th);
    if (it == breaks_.end() || *it != th) breaks_.insert(it, th);
  }
  if (other.holder_hint_) holder_hint_ = holder_hint_ ? std::min(*holder_hint_, *other.holder_hint_) : other.holder_hint_;
  return *this;
}

void Evaluable::add_breakpoint(double x) {
  if (!(x > -1.0 && x < 1.0)) return;
  const double th = std::acos(x);
  const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), th);
  if (it == breaks_.end() || *it != th) breaks_.insert(it, th);
}

}  // namespace fht
