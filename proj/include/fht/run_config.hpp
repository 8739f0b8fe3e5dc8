#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "fht/quadrature.hpp"
#include "fht/transform.hpp"

namespace fht {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  QuadratureConfig quad{};
  std::size_t grid = 20;
  unsigned seed = 42;
  Convention convention = Convention::Tricomi;
  OutputFormat format = OutputFormat::Json;
  double solvability_tol = 1e-8;
  std::size_t interp_degree = 64;
};

/// Applies one key=value pair. Keys: abs_tol, rel_tol, max_panels, edge_eps, grid, seed,
/// convention (tricomi|widom), format (json|csv), solvability_tol, interp_degree.
/// Throws ParseError on unknown keys or malformed values.
void apply_config_entry(RunConfig& cfg, std::string_view key, std::string_view value);

/// key=value lines; '#' starts a comment, blank lines ignored.
[[nodiscard]] RunConfig parse_config_text(std::string_view text, RunConfig base = {});
[[nodiscard]] RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Defaults, then the file named by `explicit_path` or else by FHT_CONFIG, if any.
[[nodiscard]] RunConfig load_run_config(const std::string& explicit_path = {});

[[nodiscard]] Convention parse_convention(std::string_view s);
[[nodiscard]] std::string_view to_string(Convention c) noexcept;
[[nodiscard]] OutputFormat parse_format(std::string_view s);

}  // namespace fht
