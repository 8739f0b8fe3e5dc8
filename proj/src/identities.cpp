#include "fht/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fht/airfoil.hpp"
#include "fht/errors.hpp"
#include "fht/rearrangement.hpp"
#include "fht/transform.hpp"

namespace fht {

namespace {

double relative(double abs_err, double scale) { return scale > 0.0 ? abs_err / scale : abs_err; }

void finish(IdentityReport& r) {
  const double v = r.relative ? r.max_rel_residual : r.max_abs_residual;
  r.pass = std::isfinite(v) && v <= r.tolerance;
}

std::mt19937_64 make_rng(unsigned seed, std::size_t stream) {
  std::seed_seq seq{seed, static_cast<unsigned>(stream), 0x9e37u};
  return std::mt19937_64(seq);
}

ChebyshevSeries random_series(std::mt19937_64& rng, std::size_t degree, ChebyshevBasis basis) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) v = normal(rng);
  return ChebyshevSeries(std::move(c), basis);
}

// Integral over [0, pi] of f(theta) on the grid.
cplx angle_sum(const AngleGrid& grid, const std::function<cplx(std::size_t)>& f) {
  cplx s = 0.0;
  for (std::size_t k = 0; k < grid.theta.size(); ++k) s += grid.weight[k] * f(k);
  return s;
}

// sup of ||rho T(f/rho)||_p / ||f||_p over the family on one angle grid.
std::vector<double> weighted_ratios(double gamma, double delta, double p, std::size_t family_size, unsigned seed,
                                    const AngleGrid& grid, const QuadratureConfig& quad) {
  std::vector<double> ratios;
  for (std::size_t j = 0; j < family_size; ++j) {
    const Evaluable f = trigonometric_member(seed, j);
    const Evaluable inner = (gamma == 0.0 && delta == 0.0) ? f : f.times_weight(-gamma, -delta);
    std::vector<cplx> tf = fht_batch_angles(inner, grid.theta, quad);
    std::vector<cplx> fv(grid.theta.size());
    for (std::size_t k = 0; k < tf.size(); ++k) {
      if (gamma != 0.0 || delta != 0.0) tf[k] *= endpoint_weight_at_angle(gamma, delta, grid.theta[k]);
      fv[k] = f.at_angle(grid.theta[k]);
    }
    ratios.push_back(angle_grid_lp_norm(grid, tf, p) / angle_grid_lp_norm(grid, fv, p));
  }
  return ratios;
}

// Uniform midpoints plus geometric clusters toward the spike and the endpoints.
std::vector<double> probe_grid(std::size_t n, double x0) {
  std::vector<double> pts = SampledFunction::uniform_midpoints(n);
  const double h = 1.0 / static_cast<double>(n);
  for (int j = 1; j <= 30; ++j) {
    const double d = h * std::ldexp(1.0, -j);
    for (double x : {x0 - d, x0 + d, -1.0 + d, 1.0 - d})
      if (x > -1.0 + kDefaultEdgeEps && x < 1.0 - kDefaultEdgeEps) pts.push_back(x);
  }
  pts.push_back(x0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](double a, double b) { return b - a < 1e-15; }), pts.end());
  return pts;
}

// min(|x - x0|^-beta, radius^-beta). Truncating at a fixed radius keeps the kinks far enough from x0
// that x = cos(theta) still resolves them.
struct Spike {
  double x0 = 0.0;
  double beta = 0.0;  // 0 means the constant 1
  double radius = 1e-3;
  [[nodiscard]] double operator()(double x) const {
    if (beta == 0.0) return 1.0;
    return std::pow(std::max(std::abs(x - x0), radius), -beta);
  }
};

double loglog_ratio(const Spike& s, std::size_t n, const QuadratureConfig& quad) {
  const std::vector<double> pts = probe_grid(n, s.x0);
  Evaluable f = Evaluable::from_callable([s](double x) { return cplx(s(x)); });
  if (s.beta != 0.0) {
    for (double x : {s.x0 - s.radius, s.x0, s.x0 + s.radius})
      if (std::abs(x) < 1.0) f.add_breakpoint(x);
  }
  const std::vector<cplx> tf = fht_batch(f, pts, quad);
  std::vector<cplx> fv(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) fv[k] = s(pts[k]);
  return lp_norm(1.0, SampledFunction(pts, tf)) / zygmund_norm(1.0, SampledFunction(pts, fv));
}

IdentityReport stability_report(std::string name, const std::vector<double>& coarse, const std::vector<double>& fine,
                                 std::size_t grid_size, double tol) {
  IdentityReport r;
  r.name = std::move(name);
  r.grid_size = grid_size;
  r.tolerance = tol;
  r.relative = true;
  double sup = 0.0, sup_coarse = 0.0;
  bool finite = true;
  for (std::size_t j = 0; j < fine.size(); ++j) {
    finite = finite && std::isfinite(fine[j]) && std::isfinite(coarse[j]);
    sup = std::max(sup, fine[j]);
    sup_coarse = std::max(sup_coarse, coarse[j]);
    const double change = std::abs(fine[j] - coarse[j]);
    r.max_abs_residual = std::max(r.max_abs_residual, change);
    r.max_rel_residual = std::max(r.max_rel_residual, relative(change, std::abs(fine[j])));
  }
  r.details = {{"sup_ratio", sup}, {"sup_ratio_coarse", sup_coarse}};
  finish(r);
  r.pass = r.pass && finite;
  return r;
}

}  // namespace

IdentityReport check_parseval(const Evaluable& f, const Evaluable& g, const HarnessConfig& cfg, std::string name) {
  IdentityReport r;
  r.name = std::move(name);
  r.tolerance = cfg.tol.parseval;
  const AngleGrid grid = graded_angle_grid(cfg.angle_levels, cfg.angle_order);
  r.grid_size = grid.theta.size();
  cplx fg = 0.0, gf = 0.0;
  if (!f.empty() && !g.empty()) {
    const std::vector<cplx> tg = fht_batch_angles(g, grid.theta, cfg.quad);
    const std::vector<cplx> tf = fht_batch_angles(f, grid.theta, cfg.quad);
    fg = angle_sum(grid, [&](std::size_t k) { return f.density(grid.theta[k]) * tg[k]; });
    gf = angle_sum(grid, [&](std::size_t k) { return g.density(grid.theta[k]) * tf[k]; });
  }
  r.max_abs_residual = std::abs(fg + gf);
  r.max_rel_residual = relative(r.max_abs_residual, std::abs(fg) + std::abs(gf));
  r.details = {{"int_f_Tg_re", fg.real()}, {"int_f_Tg_im", fg.imag()}};
  finish(r);
  return r;
}

IdentityReport check_poincare_bertrand(const Evaluable& f, const Evaluable& g, std::span<const double> grid,
                                       const HarnessConfig& cfg, std::string name) {
  IdentityReport r;
  r.name = std::move(name);
  r.tolerance = cfg.tol.poincare_bertrand;
  r.grid_size = grid.size();
  if (f.empty() || g.empty()) {
    finish(r);
    return r;
  }
  const QuadratureConfig inner = cfg.quad;
  const Evaluable h = Evaluable::from_angle([&f, &g, inner](double theta) {
    return g.at_angle(theta) * fht_at_angle(f, theta, inner) + f.at_angle(theta) * fht_at_angle(g, theta, inner);
  });
  const std::vector<cplx> lhs = fht_batch(h, grid, cfg.nested_outer);
  const std::vector<cplx> tf = fht_batch(f, grid, cfg.quad);
  const std::vector<cplx> tg = fht_batch(g, grid, cfg.quad);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx rhs = tf[k] * tg[k] - f(grid[k]) * g(grid[k]);
    const double err = std::abs(lhs[k] - rhs);
    r.max_abs_residual = std::max(r.max_abs_residual, err);
    r.max_rel_residual = std::max(r.max_rel_residual, relative(err, std::abs(rhs)));
  }
  finish(r);
  return r;
}

double hilbert_indicator(const IndicatorUnion& set, double x) {
  double s = 0.0;
  for (const auto& [a, b] : set.intervals()) s += std::log(std::abs((b - x) / (a - x)));
  return s / std::numbers::pi;
}

double level_set_measure(const IndicatorUnion& set, double lambda, std::size_t scan_points) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "level_set_measure: lambda must be positive");
  const auto above = [&](double x) { return std::abs(hilbert_indicator(set, x)) > lambda; };
  double total = 0.0;
  for (const auto& [a, b] : set.intervals()) {
    // Cosine-spaced scan: |H| blows up at both ends, so the crossings crowd there.
    const auto node = [&](std::size_t k) {
      const double s = static_cast<double>(k) / static_cast<double>(scan_points);
      return a + 0.5 * (b - a) * (1.0 - std::cos(std::numbers::pi * s));
    };
    double start = a;  // left end of the current super-level run
    bool inside = true;
    double prev = a;
    for (std::size_t k = 1; k <= scan_points; ++k) {
      const double x = k == scan_points ? b : node(k);
      const bool now = k == scan_points ? true : above(x);
      if (now != inside) {
        double lo = prev, hi = x;
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          (above(mid) == inside ? lo : hi) = mid;
        }
        const double cross = 0.5 * (lo + hi);
        if (inside) total += cross - start;
        else start = cross;
        inside = now;
      }
      prev = x;
    }
    if (inside) total += b - start;
  }
  return total;
}

IdentityReport check_laeng(const IndicatorUnion& set, std::span<const double> lambdas, const HarnessConfig& cfg,
                           std::string name) {
  IdentityReport r;
  r.name = std::move(name);
  r.tolerance = cfg.tol.laeng_relative;
  r.relative = true;
  r.grid_size = lambdas.size();
  const double m = set.measure();
  for (double lambda : lambdas) {
    const double exact = 2.0 * m / (std::exp(std::numbers::pi * lambda) + 1.0);
    const double err = std::abs(level_set_measure(set, lambda) - exact);
    r.max_abs_residual = std::max(r.max_abs_residual, err);
    r.max_rel_residual = std::max(r.max_rel_residual, relative(err, exact));
  }
  r.details = {{"measure", m}};
  finish(r);
  return r;
}

IdentityReport check_kernel(cplx c, const HarnessConfig& cfg) {
  IdentityReport r;
  r.name = "kernel";
  r.tolerance = cfg.tol.kernel;
  const std::vector<double> grid = interior_grid(cfg.grid_points);
  r.grid_size = grid.size();
  const Evaluable f = EndpointWeightedFunction::over_w(ChebyshevSeries::constant(c));
  for (const cplx v : fht_batch(f, grid, cfg.quad)) r.max_abs_residual = std::max(r.max_abs_residual, std::abs(v));
  r.max_rel_residual = relative(r.max_abs_residual, std::abs(c));
  r.details = {{"c_re", c.real()}, {"c_im", c.imag()}};
  finish(r);
  return r;
}

Evaluable trigonometric_member(unsigned seed, std::size_t index, std::size_t max_degree) {
  auto rng = make_rng(seed, 1000 + index);
  const std::size_t degree = 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(max_degree, 1));
  const ChebyshevSeries cos_part = random_series(rng, degree, ChebyshevBasis::FirstKind);
  // sin(k theta) = sin(theta) U_{k-1}(cos theta), k = 1..degree.
  const ChebyshevSeries sin_part = random_series(rng, degree - 1, ChebyshevBasis::SecondKind);
  return Evaluable(cos_part) + Evaluable(EndpointWeightedFunction::times_w(sin_part));
}

double angle_grid_lp_norm(const AngleGrid& grid, std::span<const cplx> values, double p) {
  double s = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    s += grid.weight[k] * std::pow(std::abs(values[k]), p) * std::sin(grid.theta[k]);
  return std::pow(s, 1.0 / p);
}

IdentityReport norm_probe(double p, std::size_t family_size, unsigned seed, const HarnessConfig& cfg) {
  if (!(p > 1.0 && p < 2.0)) throw Error(ErrorCode::InvalidArgument, "norm_probe: p must lie in (1, 2)");
  const double bound = std::tan(std::numbers::pi / (2.0 * p));
  const AngleGrid grid = graded_angle_grid(cfg.angle_levels, cfg.angle_order);
  const std::vector<double> ratios = weighted_ratios(0.0, 0.0, p, family_size, seed, grid, cfg.quad);
  IdentityReport r;
  char buf[48];
  std::snprintf(buf, sizeof buf, "norm_bound_p%.3g", p);
  r.name = buf;
  r.grid_size = grid.theta.size();
  r.tolerance = bound * cfg.tol.norm_bound_factor;
  const double sup = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  r.max_abs_residual = sup;
  r.max_rel_residual = sup / bound;
  r.details = {{"p", p}, {"empirical_sup_ratio", sup}, {"analytic_bound", bound}, {"gap", bound - sup}};
  finish(r);
  return r;
}

IdentityReport loglog_probe(std::size_t family_size, unsigned seed, const HarnessConfig& cfg, std::size_t base_grid) {
  auto rng = make_rng(seed, 7);
  std::uniform_real_distribution<double> where(-0.8, 0.8), power(0.2, 0.8);
  std::vector<Spike> family;
  for (std::size_t j = 0; j < family_size; ++j) {
    if (j == 0) family.push_back({});
    else if (j == 1) family.push_back({0.0, 0.8});
    else {
      const double x0 = where(rng);
      family.push_back({x0, power(rng)});
    }
  }
  std::vector<double> coarse, fine;
  for (const Spike& s : family) {
    coarse.push_back(loglog_ratio(s, base_grid, cfg.quad));
    fine.push_back(loglog_ratio(s, 2 * base_grid, cfg.quad));
  }
  return stability_report("loglog", coarse, fine, 2 * base_grid, cfg.tol.probe_stability);
}

IdentityReport khvedelidze_probe(double gamma, double delta, double p, std::size_t family_size, unsigned seed,
                                 const HarnessConfig& cfg) {
  validate_weight_exponents(gamma, delta, p);
  const AngleGrid coarse_grid = graded_angle_grid(cfg.angle_levels, cfg.angle_order);
  const AngleGrid fine_grid = graded_angle_grid(cfg.angle_levels, 2 * cfg.angle_order);
  const auto coarse = weighted_ratios(gamma, delta, p, family_size, seed, coarse_grid, cfg.quad);
  const auto fine = weighted_ratios(gamma, delta, p, family_size, seed, fine_grid, cfg.quad);
  char buf[80];
  std::snprintf(buf, sizeof buf, "khvedelidze_g%.3g_d%.3g_p%.3g", gamma, delta, p);
  IdentityReport r = stability_report(buf, coarse, fine, fine_grid.theta.size(), cfg.tol.probe_stability);
  r.details.insert(r.details.begin(), {{"gamma", gamma}, {"delta", delta}, {"p", p}});
  return r;
}

Suite parse_suite(const std::string& name) {
  if (name == "parseval") return Suite::Parseval;
  if (name == "pb") return Suite::PoincareBertrand;
  if (name == "laeng") return Suite::Laeng;
  if (name == "kernel") return Suite::Kernel;
  if (name == "norms") return Suite::Norms;
  if (name == "all") return Suite::All;
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

std::vector<IdentityReport> run_suite(Suite suite, unsigned seed, const HarnessConfig& cfg) {
  std::vector<IdentityReport> out;
  const bool all = suite == Suite::All;

  if (all || suite == Suite::Parseval) {
    out.push_back(check_parseval(Evaluable(ChebyshevSeries::constant(1.0)),
                                 Evaluable(EndpointWeightedFunction::times_w(ChebyshevSeries::constant(1.0))), cfg,
                                 "parseval_one_w"));
    auto rng = make_rng(seed, 1);
    std::uniform_real_distribution<double> expo(-0.4, 0.8);
    for (int j = 0; j < 20; ++j) {
      const ChebyshevSeries fs = random_series(rng, 1 + rng() % 6, ChebyshevBasis::FirstKind);
      const double a = expo(rng), b = expo(rng);
      const ChebyshevSeries gs = random_series(rng, rng() % 7, ChebyshevBasis::FirstKind);
      out.push_back(check_parseval(Evaluable(fs), Evaluable(EndpointWeightedFunction(a, b, gs)), cfg,
                                   "parseval_" + std::to_string(j)));
    }
  }

  if (all || suite == Suite::PoincareBertrand) {
    const std::vector<double> grid = interior_grid(cfg.pb_grid_points);
    const Evaluable one(ChebyshevSeries::constant(1.0));
    out.push_back(check_poincare_bertrand(one, one, grid, cfg, "pb_one_one"));
    out.push_back(check_poincare_bertrand(
        one, Evaluable(EndpointWeightedFunction::times_w(ChebyshevSeries::constant(1.0))), grid, cfg, "pb_one_w"));
    auto rng = make_rng(seed, 2);
    for (int j = 0; j < 2; ++j) {
      const ChebyshevSeries fs = random_series(rng, 3, ChebyshevBasis::FirstKind);
      const ChebyshevSeries gs = random_series(rng, 3, ChebyshevBasis::FirstKind);
      out.push_back(check_poincare_bertrand(Evaluable(fs), Evaluable(gs), grid, cfg, "pb_poly_" + std::to_string(j)));
    }
  }

  if (all || suite == Suite::Laeng) {
    std::vector<double> lambdas;
    for (int k = 1; k <= 20; ++k) lambdas.push_back(0.1 * k);
    out.push_back(check_laeng(IndicatorUnion({{-1.0, 0.0}, {0.2, 0.7}}), lambdas, cfg, "laeng_fixed"));
    auto rng = make_rng(seed, 3);
    std::uniform_real_distribution<double> ends(-2.0, 2.0);
    for (int j = 0; j < 5; ++j) {
      const std::size_t count = 1 + rng() % 3;
      std::vector<double> e(2 * count);
      for (auto& v : e) v = ends(rng);
      std::sort(e.begin(), e.end());
      std::vector<std::pair<double, double>> iv;
      for (std::size_t i = 0; i < count; ++i) iv.emplace_back(e[2 * i], e[2 * i + 1]);
      out.push_back(check_laeng(IndicatorUnion(iv), lambdas, cfg, "laeng_" + std::to_string(j)));
    }
  }

  if (all || suite == Suite::Kernel) {
    auto rng = make_rng(seed, 4);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng), im = normal(rng);
    for (cplx c : {cplx(1.0), cplx(0.0), cplx(2.0, -3.0), cplx(0.0, 1.0), cplx(re, im)}) {
      IdentityReport r = check_kernel(c, cfg);
      char buf[64];
      std::snprintf(buf, sizeof buf, "kernel_%.6g%+.6gi", c.real(), c.imag());
      r.name = buf;
      out.push_back(std::move(r));
    }
  }

  if (all || suite == Suite::Norms) {
    for (double p : {1.2, 1.5, 1.8}) out.push_back(norm_probe(p, 50, seed, cfg));
    out.push_back(loglog_probe(30, seed, cfg));
    out.push_back(khvedelidze_probe(0.0, 0.0, 1.5, 10, seed, cfg));
    out.push_back(khvedelidze_probe(-0.5, -0.5, 1.5, 10, seed, cfg));
    out.push_back(khvedelidze_probe(0.5, 0.5, 3.0, 10, seed, cfg));
  }
  return out;
}

}  // namespace fht
