#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fht/functions.hpp"
#include "fht/quadrature.hpp"

namespace fht {

/// Per-identity tolerances, all in one table.
struct IdentityTolerances {
  double parseval = 1e-6;
  double poincare_bertrand = 1e-4;
  double laeng_relative = 1e-3;
  double kernel = 1e-8;
  double norm_bound_factor = 1.001;
  double probe_stability = 0.10;
};

struct HarnessConfig {
  QuadratureConfig quad{};                                // direct transforms
  QuadratureConfig nested_outer{1e-8, 1e-8, 8192, 1e-6};  // outer transform of nested identities
  IdentityTolerances tol{};
  std::size_t grid_points = 20;  // interior grid for pointwise identities
  std::size_t pb_grid_points = 10;
  std::size_t angle_levels = 24;  // graded angle grid for integrals and norms
  std::size_t angle_order = 12;
};

struct IdentityReport {
  std::string name;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  std::size_t grid_size = 0;
  double tolerance = 0.0;
  bool relative = false;  // which residual `pass` compares
  bool pass = false;
  std::vector<std::pair<std::string, double>> details;  // reported, never asserted
};

/// |int f T(g) + int g T(f)|, both integrals on the graded angle grid.
[[nodiscard]] IdentityReport check_parseval(const Evaluable& f, const Evaluable& g, const HarnessConfig& cfg = {},
                                            std::string name = "parseval");

/// Pointwise residual of T(g T f + f T g) = T f T g - f g with nested quadrature.
[[nodiscard]] IdentityReport check_poincare_bertrand(const Evaluable& f, const Evaluable& g,
                                                     std::span<const double> grid, const HarnessConfig& cfg = {},
                                                     std::string name = "poincare_bertrand");

/// Hilbert transform on the line of the indicator of A, (1/pi) sum log|(x - b_j)/(x - a_j)|.
[[nodiscard]] double hilbert_indicator(const IndicatorUnion& set, double x);
/// m{x in A : |H chi_A(x)| > lambda}, level crossings located by a graded scan plus bisection.
[[nodiscard]] double level_set_measure(const IndicatorUnion& set, double lambda, std::size_t scan_points = 4000);
/// Relative error of the level-set measure against 2 m(A) / (e^{pi lambda} + 1).
[[nodiscard]] IdentityReport check_laeng(const IndicatorUnion& set, std::span<const double> lambdas,
                                         const HarnessConfig& cfg = {}, std::string name = "laeng");

/// sup over the interior grid of |T(C / w)|.
[[nodiscard]] IdentityReport check_kernel(cplx c, const HarnessConfig& cfg = {});

/// Empirical sup of ||Tf||_p / ||f||_p over a seeded trigonometric family against tan(pi/(2p)).
/// Only the upper bound is asserted. Needs 1 < p < 2.
[[nodiscard]] IdentityReport norm_probe(double p, std::size_t family_size, unsigned seed,
                                        const HarnessConfig& cfg = {});

/// sup of ||Tf||_1 / ||f||_{L log L} over constants and truncated spikes |x - x0|^-beta;
/// asserts finiteness and < 10% change when the grid doubles.
[[nodiscard]] IdentityReport loglog_probe(std::size_t family_size, unsigned seed, const HarnessConfig& cfg = {},
                                          std::size_t base_grid = 400);

/// sup of ||rho T(f/rho)||_p / ||f||_p with rho = (1-x)^gamma (1+x)^delta; finiteness and stability only.
[[nodiscard]] IdentityReport khvedelidze_probe(double gamma, double delta, double p, std::size_t family_size,
                                               unsigned seed, const HarnessConfig& cfg = {});

/// Seeded member of the probe family: sum c_k cos(k theta) + sum d_k sin(k theta), x = cos(theta).
[[nodiscard]] Evaluable trigonometric_member(unsigned seed, std::size_t index, std::size_t max_degree = 8);

/// ||g||_p on the graded angle grid, g given by its values at the grid angles.
[[nodiscard]] double angle_grid_lp_norm(const AngleGrid& grid, std::span<const cplx> values, double p);

enum class Suite { Parseval, PoincareBertrand, Laeng, Kernel, Norms, All };

/// Parses "parseval", "pb", "laeng", "kernel", "norms", "all"; InvalidArgument otherwise.
[[nodiscard]] Suite parse_suite(const std::string& name);

/// Runs the selected suite(s) with seeded inputs; output is deterministic for a fixed seed.
[[nodiscard]] std::vector<IdentityReport> run_suite(Suite suite, unsigned seed, const HarnessConfig& cfg = {});

}  // namespace fht
