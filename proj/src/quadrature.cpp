#include "fht/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "fht/errors.hpp"

namespace fht {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  if (max_panels < 4) throw Error(ErrorCode::InvalidArgument, "max_panels must be at least 4");
  if (!(edge_eps > 0.0 && edge_eps < 0.5)) throw Error(ErrorCode::InvalidArgument, "edge_eps must lie in (0, 0.5)");
}

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077723335429525, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                       0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                       0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod21(const std::function<cplx(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(center);
  cplx resk = fc * kWgk[10];
  cplx resg{};
  double resabs = std::abs(fc) * kWgk[10];
  std::array<cplx, 10> f1{}, f2{};
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jt = 2 * j + 1;
    const double dx = half * kXgk[jt];
    f1[jt] = f(center - dx);
    f2[jt] = f(center + dx);
    resg += kWg[j] * (f1[jt] + f2[jt]);
    resk += kWgk[jt] * (f1[jt] + f2[jt]);
    resabs += kWgk[jt] * (std::abs(f1[jt]) + std::abs(f2[jt]));
  }
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t jt = 2 * j;
    const double dx = half * kXgk[jt];
    f1[jt] = f(center - dx);
    f2[jt] = f(center + dx);
    resk += kWgk[jt] * (f1[jt] + f2[jt]);
    resabs += kWgk[jt] * (std::abs(f1[jt]) + std::abs(f2[jt]));
  }
  const cplx reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (std::size_t j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

  const double ah = std::abs(half);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  const cplx value = resk * half;
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                                    std::span<const double> breakpoints, const QuadratureConfig& cfg) {
  std::vector<double> edges{a};
  for (double x : breakpoints)
    if (x > edges.back() && x < b) edges.push_back(x);
  edges.push_back(b);

  std::priority_queue<Panel> queue;
  cplx total{};
  double total_err = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    Panel p = gauss_kronrod21(f, edges[k], edges[k + 1]);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }
  const std::size_t budget = std::max(cfg.max_panels, 4 * queue.size());
  std::size_t panels = queue.size();

  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (panels >= budget)
      throw Error(ErrorCode::NoConvergence, "panel budget of " + std::to_string(budget) +
                                                " exhausted (error estimate " + std::to_string(total_err) + ")");
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Panel no longer splittable in floating point: accept it as is.
    if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 4.0 * eps * std::max(std::abs(mid), 1e-300)) {
      if (!std::isfinite(worst.error))
        throw Error(ErrorCode::NoConvergence, "integrand not finite near " + std::to_string(mid));
      queue.pop();
      total_err -= worst.error;
      worst.error = 0.0;
      queue.push(worst);
      continue;
    }
    queue.pop();
    const Panel left = gauss_kronrod21(f, worst.a, mid);
    const Panel right = gauss_kronrod21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
    // Re-sum periodically to stop drift from incremental updates.
    if (panels % 256 == 0 || !std::isfinite(total_err)) {
      auto copy = queue;
      total = {};
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  // Final sum in a fixed order so results do not depend on update history.
  std::vector<Panel> done;
  done.reserve(queue.size());
  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  cplx value{};
  double err = 0.0;
  for (const auto& p : done) {
    value += p.value;
    err += p.error;
  }
  return {value, err, panels};
}

const GaussLegendreRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) /
                          static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 =
          ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

AngleGrid graded_angle_grid(std::size_t levels, std::size_t order) {
  const auto& rule = gauss_legendre(order);
  std::vector<std::pair<double, double>> panels;
  const double half = 0.5 * std::numbers::pi;
  // [0, h 2^-levels], ..., [h/4, h/2], then [h/2, h] and the mirror image.
  const double h = half;
  double lo = h * std::ldexp(1.0, -static_cast<int>(levels));
  panels.emplace_back(0.0, lo);
  for (std::size_t k = levels; k-- > 0;) {
    const double hi = h * std::ldexp(1.0, -static_cast<int>(k));
    panels.emplace_back(lo, hi);
    lo = hi;
  }
  const std::size_t n_left = panels.size();
  for (std::size_t k = n_left; k-- > 0;)
    panels.emplace_back(std::numbers::pi - panels[k].second, std::numbers::pi - panels[k].first);
  AngleGrid grid;
  for (const auto& [a, b] : panels) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      grid.theta.push_back(c + r * rule.nodes[i]);
      grid.weight.push_back(r * rule.weights[i]);
    }
  }
  std::vector<std::size_t> idx(grid.theta.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto l, auto r) { return grid.theta[l] < grid.theta[r]; });
  AngleGrid sorted;
  for (auto i : idx) {
    sorted.theta.push_back(grid.theta[i]);
    sorted.weight.push_back(grid.weight[i]);
  }
  return sorted;
}

}  // namespace fht
