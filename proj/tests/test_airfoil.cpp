#include <cmath>
#include <random>

#include "doctest.h"
#include "fht/airfoil.hpp"
#include "fht/errors.hpp"
#include "fht/transform.hpp"

using namespace fht;

namespace {

ChebyshevSeries t_n(std::size_t n) { return ChebyshevSeries::basis_element(n, ChebyshevBasis::FirstKind); }
ChebyshevSeries u_n(std::size_t n) { return ChebyshevSeries::basis_element(n, ChebyshevBasis::SecondKind); }

double sup_over(const std::vector<double>& pts, const std::function<cplx(double)>& f) {
  double m = 0.0;
  for (double t : pts) m = std::max(m, std::abs(f(t)));
  return m;
}

}  // namespace

TEST_CASE("low regime") {
  const auto grid = interior_grid(20);
  SUBCASE("g = 1, C = 0 gives x/w") {
    const auto sol = solve_low(ChebyshevSeries::constant(1.0), 0.0);
    CHECK(sol.regime == Regime::Low);
    CHECK(sup_over(grid, [&](double x) { return sol.particular(x) - x / std::sqrt(1 - x * x); }) < 1e-13);
  }
  SUBCASE("g = 0, C = 1 gives 1/w") {
    const auto sol = solve_low(ChebyshevSeries::constant(0.0), 1.0);
    CHECK(sup_over(grid, [&](double x) { return sol.particular(x) - 1.0 / std::sqrt(1 - x * x); }) < 1e-13);
    const auto rt = verify_roundtrip(ChebyshevSeries::constant(0.0), Regime::Low, 3.0);
    REQUIRE(rt.constant_recovered);
    CHECK(std::abs(*rt.constant_recovered - 3.0) <= 1e-8);
  }
  SUBCASE("g = U_2, C = 2i") {
    const cplx c(0.0, 2.0);
    const auto sol = solve_low(u_n(2), c);
    const auto expect = [&](double x) { return (t_n(3)(x) + c) / std::sqrt(1 - x * x); };
    CHECK(sup_over(grid, [&](double x) { return sol.particular(x) - expect(x); }) < 1e-12);
    const auto rt = verify_roundtrip(u_n(2), Regime::Low, c);
    CHECK(rt.max_residual < 1e-6);
    CHECK(std::abs(*rt.constant_recovered - c) <= 1e-8);
  }
  SUBCASE("g = U_4 round trip") { CHECK(verify_roundtrip(u_n(4), Regime::Low, 0.0).max_residual < 1e-6); }
  SUBCASE("family differs by multiples of 1/w") {
    const ChebyshevSeries g({0.5, -1.0, 0.25, 2.0});
    const cplx c1(1.0, -1.0), c2(-0.5, 3.0);
    const auto s1 = solve_low(g, c1).particular;
    const auto s2 = solve_low(g, c2).particular;
    CHECK(sup_over(grid, [&](double x) { return (s1(x) - s2(x)) - (c1 - c2) / std::sqrt(1 - x * x); }) <= 1e-10);
    CHECK(std::abs(solve_low(g, 0.0).with_constant(c1)(0.3) - s1(0.3)) < 1e-12);
  }
  SUBCASE("sampled right-hand side") {
    // Samples enter through their piecewise-linear interpolant, so the error is O(h^2).
    const auto pts = SampledFunction::uniform_midpoints(4000);
    const SampledFunction g = SampledFunction::sample([](double x) { return u_n(2)(x); }, pts);
    const auto sol = solve_low(g, 0.0);
    CHECK(sup_over(grid, [&](double x) { return sol.particular(x) - t_n(3)(x) / std::sqrt(1 - x * x); }) < 1e-5);
  }
}

TEST_CASE("high regime") {
  const auto grid = interior_grid(20);
  SUBCASE("g = T_1 gives -w") {
    const auto sol = solve_high(t_n(1));
    CHECK_FALSE(sol.homogeneous_coefficient.has_value());
    CHECK(sol.particular.has_exponents(0.5, 0.5));
    CHECK(sup_over(grid, [&](double x) { return sol.particular(x) + std::sqrt(1 - x * x); }) < 1e-14);
    const Evaluable f(sol.particular);
    CHECK(sup_over(grid, [&](double t) { return fht_pointwise(f, t) - t; }) < 1e-8);
  }
  SUBCASE("g = 1 is not solvable") {
    try {
      (void)solve_high(ChebyshevSeries::constant(1.0));
      FAIL("expected NotSolvable");
    } catch (const NotSolvableError& e) {
      CHECK(e.code() == ErrorCode::NotSolvable);
      CHECK(std::abs(e.residual() - 1.0) <= 1e-8);
    }
  }
  SUBCASE("g = T_2 gives -w U_1") {
    const auto sol = solve_high(t_n(2));
    CHECK(sup_over(grid, [&](double x) { return sol.particular(x) + std::sqrt(1 - x * x) * 2 * x; }) < 1e-13);
    CHECK(verify_roundtrip(t_n(2), Regime::High).max_residual < 1e-6);
  }
  SUBCASE("g = T_3 round trip") { CHECK(verify_roundtrip(t_n(3), Regime::High).max_residual < 1e-6); }
  SUBCASE("no 1/w component in the residual") {
    const ChebyshevSeries g({0.0, 1.0, -0.5, 0.25, 2.0});
    const auto sol = solve_high(g);
    CHECK(sol.particular.has_exponents(0.5, 0.5));
    const Evaluable residual = Evaluable(fht_spectral(sol.particular)) + Evaluable(g).scaled(-1.0);
    CHECK(solvability_residual(residual) <= 1e-10);
  }
}

TEST_CASE("solvability residual") {
  CHECK(solvability_residual(Evaluable(t_n(1))) <= 1e-12);
  CHECK(std::abs(solvability_residual(Evaluable(ChebyshevSeries::constant(1.0))) - 1.0) <= 1e-8);
  CHECK(solvability_residual(Evaluable(t_n(2))) <= 1e-12);

  // Range characterization with T(f) computed by quadrature, f = w * polynomial.
  std::mt19937 rng(23);
  std::normal_distribution<double> normal;
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<cplx> c(5);
    for (auto& v : c) v = normal(rng);
    const Evaluable f(EndpointWeightedFunction::times_w(ChebyshevSeries(c, ChebyshevBasis::SecondKind)));
    const Evaluable tf = Evaluable::from_angle([f](double th) { return fht_at_angle(f, th); });
    CHECK(solvability_residual(tf) <= 1e-8);
  }
}

TEST_CASE("interior grid") {
  const auto g = interior_grid(3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(-0.5));
  CHECK(g[1] == doctest::Approx(0.0));
  CHECK(g[2] == doctest::Approx(0.5));
}
