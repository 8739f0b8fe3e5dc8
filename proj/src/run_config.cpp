#include "fht/run_config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fht/errors.hpp"

namespace fht {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw Error(ErrorCode::ParseError, "config: bad value '" + std::string(v) + "' for " + std::string(key));
  return out;
}

}  // namespace

Convention parse_convention(std::string_view s) {
  if (s == "tricomi") return Convention::Tricomi;
  if (s == "widom") return Convention::Widom;
  throw Error(ErrorCode::ParseError, "unknown convention '" + std::string(s) + "'");
}

std::string_view to_string(Convention c) noexcept { return c == Convention::Widom ? "widom" : "tricomi"; }

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(s) + "'");
}

void apply_config_entry(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "abs_tol") cfg.quad.abs_tol = parse_number<double>(key, value);
  else if (key == "rel_tol") cfg.quad.rel_tol = parse_number<double>(key, value);
  else if (key == "max_panels") cfg.quad.max_panels = parse_number<std::size_t>(key, value);
  else if (key == "edge_eps") cfg.quad.edge_eps = parse_number<double>(key, value);
  else if (key == "grid") cfg.grid = parse_number<std::size_t>(key, value);
  else if (key == "seed") cfg.seed = parse_number<unsigned>(key, value);
  else if (key == "convention") cfg.convention = parse_convention(value);
  else if (key == "format") cfg.format = parse_format(value);
  else if (key == "solvability_tol") cfg.solvability_tol = parse_number<double>(key, value);
  else if (key == "interp_degree") cfg.interp_degree = parse_number<std::size_t>(key, value);
  else throw Error(ErrorCode::ParseError, "config: unknown key '" + std::string(key) + "'");
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "config line " + std::to_string(lineno) + ": expected key=value");
    apply_config_entry(base, l.substr(0, eq), l.substr(eq + 1));
  }
  base.quad.validate();
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), base);
}

RunConfig load_run_config(const std::string& explicit_path) {
  if (!explicit_path.empty()) return load_config_file(explicit_path);
  if (const char* env = std::getenv("FHT_CONFIG"); env != nullptr && *env != '\0') return load_config_file(env);
  return {};
}

}  // namespace fht
