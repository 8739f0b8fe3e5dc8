// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>

#include "fht/airfoil.hpp"
#include "fht/errors.hpp"
#include "fht/identities.hpp"
#include "fht/spectral_atlas.hpp"
#include "fht/transform.hpp"

using namespace fht;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  std::array<char, 256> buf{};
  std::snprintf(buf.data(), buf.size(), f, a, b, c);
  return buf.data();
}

const std::vector<double>& grid20() {
  static const std::vector<double> g = interior_grid(20);
  return g;
}

template <class F>
double sup20(F&& f) {
  double m = 0.0;
  for (double t : grid20()) m = std::max(m, std::abs(f(t)));
  return m;
}

ChebyshevSeries random_poly(std::mt19937& rng, std::size_t degree, ChebyshevBasis basis) {
  std::normal_distribution<double> normal;
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) v = normal(rng);
  return ChebyshevSeries(std::move(c), basis);
}

Outcome fixtures() {
  const Evaluable iw(EndpointWeightedFunction::over_w(ChebyshevSeries::constant(1.0)));
  const Evaluable w(EndpointWeightedFunction::times_w(ChebyshevSeries::constant(1.0)));
  const Evaluable xw(EndpointWeightedFunction::over_w(ChebyshevSeries::basis_element(1, ChebyshevBasis::FirstKind)));
  const double a = sup20([&](double t) { return fht_pointwise(iw, t); });
  const double b = sup20([&](double t) { return fht_pointwise(w, t) + t; });
  const double c = sup20([&](double t) { return fht_pointwise(xw, t) - 1.0; });
  return {std::max({a, b, c}) <= 1e-8, fmt("|T(1/w)|=%.2e |T(w)+t|=%.2e |T(x/w)-1|=%.2e (tol 1e-8)", a, b, c)};
}

Outcome spectral_vs_quadrature() {
  double worst = 0.0;
  for (std::size_t n = 0; n <= 20; ++n) {
    for (bool first : {true, false}) {
      const auto f = first ? EndpointWeightedFunction::over_w(ChebyshevSeries::basis_element(n, ChebyshevBasis::FirstKind))
                           : EndpointWeightedFunction::times_w(ChebyshevSeries::basis_element(n, ChebyshevBasis::SecondKind));
      const auto spec = fht_spectral(f);
      const auto quad = fht_batch(Evaluable(f), grid20());
      for (std::size_t k = 0; k < grid20().size(); ++k) worst = std::max(worst, std::abs(spec(grid20()[k]) - quad[k]));
    }
  }
  return {worst <= 1e-7, fmt("max |spectral - quadrature| = %.2e over degrees 0..20, both classes (tol 1e-7)", worst)};
}

Outcome round_trips() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(0, 16);
  double t_hat = 0.0, check_t = 0.0, t_check = 0.0, hat_t = 0.0, mean = 0.0;
  for (int rep = 0; rep < 25; ++rep) {
    const ChebyshevSeries g = random_poly(rng, deg(rng), ChebyshevBasis::FirstKind);
    const Evaluable eg(g);
    const Evaluable h(fht_hat(g));
    t_hat = std::max(t_hat, sup20([&](double t) { return fht_pointwise(h, t) - g(t); }));
    mean = std::max(mean, std::abs(integrate(h)));

    const Evaluable c(fht_check(g));
    const auto qg = project_Q(eg);
    t_check = std::max(t_check, sup20([&](double t) { return fht_pointwise(c, t) - (g(t) - qg(t)); }));

    const auto f = EndpointWeightedFunction::times_w(random_poly(rng, deg(rng), ChebyshevBasis::SecondKind));
    const Evaluable tf(fht_spectral(f));
    check_t = std::max(check_t, sup20([&](double t) { return fht_check_pointwise(tf, t) - f(t); }));

    const auto u = EndpointWeightedFunction::over_w(random_poly(rng, deg(rng), ChebyshevBasis::FirstKind));
    const Evaluable eu(u);
    const auto pu = project_P(eu);
    const Evaluable tu(fht_spectral(u));
    hat_t = std::max(hat_t, sup20([&](double t) { return fht_hat_pointwise(tu, t) - (u(t) - pu(t)); }));
  }
  const bool ok = std::max({t_hat, check_t, t_check, hat_t}) <= 1e-6 && mean <= 1e-8;
  return {ok, fmt("T T^=%.1e  T~T=%.1e  TT~-(I-Q)=%.1e", t_hat, check_t, t_check) +
                  fmt("  T^T-(I-P)=%.1e (tol 1e-6)  |int T^ g|=%.1e (tol 1e-8)", hat_t, mean)};
}

Outcome trichotomy() {
  double residual = -1.0;
  try {
    (void)solve_high(ChebyshevSeries::constant(1.0));
  } catch (const NotSolvableError& e) {
    residual = e.residual();
  }
  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n)
    worst = std::max(worst, verify_roundtrip(ChebyshevSeries::basis_element(n, ChebyshevBasis::FirstKind), Regime::High)
                                .max_residual);
  const bool ok = std::abs(residual - 1.0) <= 1e-8 && worst <= 1e-6;
  return {ok, fmt("g=1 rejected with residual %.12f (1 +- 1e-8); g=T_n, n=1..8 round trip %.2e (tol 1e-6)", residual, worst)};
}

Outcome eigen_relation() {
  std::vector<cplx> picked;
  for (cplx l : sample_region(1.5, 4000, 17)) {
    if (picked.size() == 9) break;
    if (region_contains(1.5, l) != Membership::Interior || !in_eigenvalue_set(l)) continue;
    if (gamma_of_lambda(l) < 1.55) continue;
    picked.push_back(l);
  }
  const double r0 = eigen_residual(0.0, grid20());
  double worst = 0.0;
  for (cplx l : picked) worst = std::max(worst, eigen_residual(l, grid20()));
  const bool ok = picked.size() == 9 && r0 <= 1e-8 && worst <= 1e-5;
  return {ok, fmt("lambda=0 residual %.2e (tol 1e-8); %g further lambdas max residual %.2e (tol 1e-5)", r0,
                  static_cast<double>(picked.size()), worst)};
}

Outcome region_geometry() {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  bool dual = true, boundary = true, nesting = true;
  for (double p : {1.1, 1.5, 3.0, 4.0, 10.0}) {
    const double q = p / (p - 1.0);
    for (int k = 0; k < 100; ++k) {
      const cplx l(u(rng), u(rng));
      dual = dual && region_contains(p, l) == region_contains(q, l);
    }
    const double c = 1.0 / std::tan(kPi / p);
    boundary = boundary && region_contains(p, cplx(0.0, c)) == Membership::Boundary &&
               region_contains(p, cplx(0.0, c * (1 + 1e-6))) != Membership::Boundary &&
               region_contains(p, cplx(0.0, c * (1 - 1e-6))) != Membership::Boundary;
  }
  // Ordered by increasing |p - 2|; each region contains the previous one.
  const std::array<double, 5> ps{2.0, 2.5, 1.5, 4.0, 1.2};
  for (int k = 0; k < 100; ++k) {
    const cplx l(u(rng), u(rng));
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
      if (region_contains(ps[i], l) != Membership::Outside)
        nesting = nesting && region_contains(ps[i + 1], l) != Membership::Outside;
  }
  return {dual && boundary && nesting, std::string("R_p = R_p' ") + (dual ? "ok" : "FAILED") + ", i cot(pi/p) on boundary " +
                                           (boundary ? "ok" : "FAILED") + ", nesting " + (nesting ? "ok" : "FAILED")};
}

Outcome tables() {
  using D = SpaceDescriptor;
  using K = SetKind;
  struct Row {
    D desc;
    SymbolicSet point, residual, continuous;
  };
  const auto S = [](K k, double p = 2.0) { return SymbolicSet{k, p}; };
  const std::vector<Row> rows{
      {D::lorentz(1.5, 3.0), S(K::Interior, 1.5), S(K::Empty), S(K::Boundary, 1.5)},
      {D::lorentz(1.5, 1.0), S(K::Interior, 1.5), S(K::Empty), S(K::Boundary, 1.5)},
      {D::lorentz(3.0, 1.0), S(K::Empty), S(K::RegionMinusEndpoints, 3.0), S(K::EndpointsOnly)},
      {D::lorentz(3.0, 4.0), S(K::Empty), S(K::Interior, 3.0), S(K::Boundary, 3.0)},
      {D::lorentz(2.0, 1.0), S(K::Empty), S(K::OpenUnitInterval), S(K::EndpointsOnly)},
      {D::lorentz(2.0, 3.0), S(K::Empty), S(K::Empty), S(K::ClosedUnitInterval)},
      {D::lebesgue(1.5), S(K::Interior, 1.5), S(K::Empty), S(K::Boundary, 1.5)},
      {D::lebesgue(4.0), S(K::Empty), S(K::Interior, 4.0), S(K::Boundary, 4.0)},
      {D::lebesgue(2.0), S(K::Empty), S(K::Empty), S(K::ClosedUnitInterval)},
      {D::catalog("L^{3,1}"), S(K::Empty), S(K::RegionMinusEndpoints, 3.0), S(K::EndpointsOnly)},
      {D::catalog("L^3"), S(K::Empty), S(K::Interior, 3.0), S(K::Boundary, 3.0)},
      {D::indexed(1.5, 1.5, false, false), S(K::Interior, 1.5), S(K::Empty), S(K::Boundary, 1.5)},
      {D::indexed(1.5, 1.5, true, false), S(K::RegionMinusEndpoints, 1.5), S(K::Empty), S(K::EndpointsOnly)},
      {D::indexed(3.0, 3.0, false, false), S(K::Empty), S(K::Interior, 3.0), S(K::Boundary, 3.0)},
      {D::indexed(3.0, 3.0, false, true), S(K::Empty), S(K::RegionMinusEndpoints, 3.0), S(K::EndpointsOnly)},
      {D::indexed(2.0, 2.0, true, false), S(K::OpenUnitInterval), S(K::Empty), S(K::EndpointsOnly)},
      {D::indexed(2.0, 2.0, false, true), S(K::Empty), S(K::OpenUnitInterval), S(K::EndpointsOnly)},
      {D::indexed(2.0, 2.0, false, false), S(K::Empty), S(K::Empty), S(K::ClosedUnitInterval)},
  };
  int matched = 0, cover_failures = 0;
  for (const Row& r : rows) {
    const FineSpectrum fs = classify_space(r.desc);
    if (fs.point == r.point && fs.residual == r.residual && fs.continuous == r.continuous) ++matched;
    if (!fs.sigma_p) {
      ++cover_failures;
      continue;
    }
    for (cplx l : sample_region(*fs.sigma_p, 200, 5)) {
      const int hits = static_cast<int>(set_contains(fs.point, l)) + static_cast<int>(set_contains(fs.residual, l)) +
                       static_cast<int>(set_contains(fs.continuous, l));
      if (hits != 1) ++cover_failures;
    }
  }
  const bool ok = matched == static_cast<int>(rows.size()) && cover_failures == 0;
  return {ok, fmt("%g/%g rows reproduced; %g partition failures over 200 samples per descriptor", matched,
                  static_cast<double>(rows.size()), cover_failures)};
}

Outcome summarize(const std::vector<IdentityReport>& reports, const std::string& prefix, bool relative) {
  double worst = 0.0, tol = 0.0;
  bool ok = true;
  std::size_t count = 0;
  for (const auto& r : reports) {
    if (r.name.rfind(prefix, 0) != 0) continue;
    ++count;
    ok = ok && r.pass;
    worst = std::max(worst, relative ? r.max_rel_residual : r.max_abs_residual);
    tol = r.tolerance;
  }
  return {ok && count > 0, prefix + fmt(": %g reports, worst residual %.2e (tol %.0e)", static_cast<double>(count), worst, tol)};
}

Outcome laeng() { return summarize(run_suite(Suite::Laeng, 42), "laeng", true); }

Outcome parseval_pb() {
  const Outcome a = summarize(run_suite(Suite::Parseval, 42), "parseval", false);
  const Outcome b = summarize(run_suite(Suite::PoincareBertrand, 42), "pb", false);
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome norm_bounds() {
  bool ok = true;
  std::string detail;
  for (double p : {1.2, 1.5, 1.8}) {
    const IdentityReport r = norm_probe(p, 50, 42);
    const double bound = std::tan(kPi / (2 * p));
    ok = ok && r.pass && r.max_abs_residual <= bound * 1.001;
    detail += fmt("p=%.1f sup=%.4f bound=%.4f; ", p, r.max_abs_residual, bound);
  }
  const bool sqrt3 = std::abs(std::tan(kPi / 3.0) - std::sqrt(3.0)) <= 1e-14;
  return {ok && sqrt3, detail + "tan(pi/3) = sqrt 3"};
}

Outcome determinism() {
  const auto run = [](std::string& out) {
    const std::string cmd = std::string(FHT_CLI_PATH) + " identities --suite all --seed 42 --no-timestamp 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string a, b;
  const int ca = run(a);
  const int cb = run(b);
  const bool ok = ca == 0 && cb == 0 && !a.empty() && a == b;
  return {ok, fmt("two runs: exit %g/%g, %g bytes, ", ca, cb, static_cast<double>(a.size())) +
                  (a == b ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 closed-form fixtures", fixtures},
      {"C2 spectral/quadrature cross-validation", spectral_vs_quadrature},
      {"C3 inversion round trips", round_trips},
      {"C4 solvability trichotomy", trichotomy},
      {"C5 eigen relation", eigen_relation},
      {"C6 region geometry", region_geometry},
      {"C7 fine-spectrum tables", tables},
      {"C8 Laeng law", laeng},
      {"C9 Parseval and Poincare-Bertrand", parseval_pb},
      {"C10 norm bound", norm_bounds},
      {"C11 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
