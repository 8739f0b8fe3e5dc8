#include "fht/io.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>

#include "fht/errors.hpp"

namespace fht {

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string csv_table(std::span<const double> x, std::span<const cplx> values) {
  std::string out = "x,re,im\n";
  for (std::size_t k = 0; k < x.size(); ++k)
    out += shortest(x[k]) + "," + shortest(values[k].real()) + "," + shortest(values[k].imag()) + "\n";
  return out;
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::random_device rd;
  const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::IoError, "write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto '" + path + "'");
  }
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorCode::ParseError, "expected a number or [re, im]");
}

json series_json(const EndpointWeightedFunction& f) {
  json j;
  j["basis"] = f.smooth().basis() == ChebyshevBasis::FirstKind ? "chebT" : "chebU";
  j["a"] = complex_json(f.a());
  j["b"] = complex_json(f.b());
  json coeffs = json::array();
  for (const cplx c : f.smooth().coeffs()) coeffs.push_back(complex_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

EndpointWeightedFunction series_from_json(const json& j) {
  try {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "chebT" && basis != "chebU") throw Error(ErrorCode::ParseError, "unknown basis '" + basis + "'");
    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
    return EndpointWeightedFunction(
        complex_from_json(j.value("a", json(0.0))), complex_from_json(j.value("b", json(0.0))),
        ChebyshevSeries(std::move(coeffs), basis == "chebT" ? ChebyshevBasis::FirstKind : ChebyshevBasis::SecondKind));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("series json: ") + e.what());
  }
}

json report_json(const IdentityReport& r) {
  json j;
  j["name"] = r.name;
  j["max_abs_residual"] = r.max_abs_residual;
  j["max_rel_residual"] = r.max_rel_residual;
  j["grid_size"] = r.grid_size;
  j["tolerance"] = r.tolerance;
  j["compared"] = r.relative ? "relative" : "absolute";
  j["pass"] = r.pass;
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = std::move(details);
  return j;
}

json fine_spectrum_json(const SpaceDescriptor& desc, const FineSpectrum& fs) {
  json j;
  j["space"] = desc.label();
  if (fs.sigma_p) j["spectrum"] = "R_" + shortest(*fs.sigma_p);
  else j["spectrum"] = nullptr;
  j["point"] = fs.point.label();
  j["residual"] = fs.residual.label();
  j["continuous"] = fs.continuous.label();
  return j;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok == "inf") {
      out.push_back(std::numeric_limits<double>::infinity());
    } else {
      if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
      double v = 0.0;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw Error(ErrorCode::ParseError, "bad number '" + std::string(tok) + "' in '" + std::string(text) + "'");
      out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SpaceDescriptor parse_space_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = colon == std::string_view::npos ? std::string_view{} : text.substr(0, colon);
  SpaceDescriptor d;
  if (kind == "lebesgue" || kind == "lorentz" || kind == "indexed") {
    const std::vector<double> v = parse_real_list(text.substr(colon + 1));
    const std::size_t want = kind == "lebesgue" ? 1 : kind == "lorentz" ? 2 : 4;
    if (v.size() != want && !(kind == "indexed" && v.size() == 5))
      throw Error(ErrorCode::ParseError, "space '" + std::string(text) + "' needs " + std::to_string(want) + " values");
    if (kind == "lebesgue") d = SpaceDescriptor::lebesgue(v[0]);
    else if (kind == "lorentz") d = SpaceDescriptor::lorentz(v[0], v[1]);
    else {
      for (std::size_t k = 2; k < v.size(); ++k)
        if (v[k] != 0.0 && v[k] != 1.0) throw Error(ErrorCode::ParseError, "flags must be 0 or 1");
      d = SpaceDescriptor::indexed(v[0], v[1], v[2] == 1.0, v[3] == 1.0);
      if (v.size() == 5) d.interpolation = v[4] == 1.0;
    }
  } else {
    d = SpaceDescriptor::catalog(std::string(text));
  }
  d.validate();
  return d;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace fht
