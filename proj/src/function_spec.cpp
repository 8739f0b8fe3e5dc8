#include "fht/function_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fht/errors.hpp"

namespace fht {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "function spec '" + std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<cplx> parse_list(std::string_view whole, std::string_view body) {
  body = trim(body);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') fail(whole, "expected [c0,c1,...]");
  body = trim(body.substr(1, body.size() - 2));
  std::vector<cplx> out;
  if (body.empty()) fail(whole, "empty coefficient list");
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string_view tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_complex(tok));
    } catch (const Error&) {
      fail(whole, "bad coefficient '" + std::string(trim(tok)) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_list(const std::vector<cplx>& c) {
  std::string s = "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += format_complex(c[k]);
  }
  return s + "]";
}

}  // namespace

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_real(z.real());
  if (z.real() == 0.0) return format_real(z.imag()) + "i";
  std::string im = format_real(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_real(z.real()) + im + "i";
}

cplx parse_complex(std::string_view token) {
  const std::string_view s = trim(token);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  if (s.back() != 'i') {
    if (auto v = parse_real(s)) return *v;
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  std::string im_text(im_part);
  if (im_text.empty() || im_text == "+" || im_text == "-") im_text += "1";
  const auto re = re_part.empty() ? std::optional<double>(0.0) : parse_real(re_part);
  const auto im = parse_real(im_text);
  if (!re || !im) throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
  return {*re, *im};
}

FunctionSpec parse_function_spec(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos) fail(text, "missing kind prefix");
  const std::string_view kind = s.substr(0, colon);
  const std::string_view rest = s.substr(colon + 1);
  FunctionSpec spec;
  if (kind == "poly" || kind == "chebT" || kind == "chebU") {
    spec.kind = kind == "poly" ? SpecKind::Poly : kind == "chebT" ? SpecKind::ChebT : SpecKind::ChebU;
    spec.coeffs = parse_list(text, rest);
    return spec;
  }
  if (kind == "csv") {
    spec.kind = SpecKind::Csv;
    spec.path = std::string(trim(rest));
    if (spec.path.empty()) fail(text, "missing path");
    return spec;
  }
  if (kind == "weighted") {
    const std::string_view body = trim(rest);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') fail(text, "expected {a,b,chebT:[...]}");
    const std::string_view inner = body.substr(1, body.size() - 2);
    const std::size_t c1 = inner.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : inner.find(',', c1 + 1);
    if (c2 == std::string_view::npos) fail(text, "expected {a,b,chebT:[...]}");
    spec.kind = SpecKind::Weighted;
    try {
      spec.a = parse_complex(inner.substr(0, c1));
      spec.b = parse_complex(inner.substr(c1 + 1, c2 - c1 - 1));
    } catch (const Error&) {
      fail(text, "bad exponent");
    }
    const FunctionSpec series = parse_function_spec(inner.substr(c2 + 1));
    if (series.kind != SpecKind::ChebT && series.kind != SpecKind::ChebU)
      fail(text, "weighted smooth factor must be chebT or chebU");
    spec.inner = series.kind == SpecKind::ChebT ? ChebyshevBasis::FirstKind : ChebyshevBasis::SecondKind;
    spec.coeffs = series.coeffs;
    return spec;
  }
  fail(text, "unknown kind '" + std::string(kind) + "'");
}

std::string to_string(const FunctionSpec& spec) {
  switch (spec.kind) {
    case SpecKind::Poly: return "poly:" + format_list(spec.coeffs);
    case SpecKind::ChebT: return "chebT:" + format_list(spec.coeffs);
    case SpecKind::ChebU: return "chebU:" + format_list(spec.coeffs);
    case SpecKind::Csv: return "csv:" + spec.path;
    case SpecKind::Weighted:
      return "weighted:{" + format_complex(spec.a) + "," + format_complex(spec.b) + "," +
             (spec.inner == ChebyshevBasis::FirstKind ? "chebT:" : "chebU:") + format_list(spec.coeffs) + "}";
  }
  return {};
}

ChebyshevSeries spec_series(const FunctionSpec& spec) {
  switch (spec.kind) {
    case SpecKind::Poly: return ChebyshevSeries::from_monomials(spec.coeffs);
    case SpecKind::ChebT: return ChebyshevSeries(spec.coeffs, ChebyshevBasis::FirstKind);
    case SpecKind::ChebU: return ChebyshevSeries(spec.coeffs, ChebyshevBasis::SecondKind);
    case SpecKind::Weighted: return ChebyshevSeries(spec.coeffs, spec.inner);
    case SpecKind::Csv: break;
  }
  throw Error(ErrorCode::InvalidArgument, "csv spec has no series form");
}

EndpointWeightedFunction to_weighted(const FunctionSpec& spec) {
  return EndpointWeightedFunction(spec.kind == SpecKind::Weighted ? spec.a : 0.0,
                                  spec.kind == SpecKind::Weighted ? spec.b : 0.0, spec_series(spec));
}

Evaluable to_evaluable(const FunctionSpec& spec, double edge_eps) {
  if (spec.kind == SpecKind::Csv) return Evaluable(load_samples(spec.path, edge_eps));
  return Evaluable(to_weighted(spec));
}

SampledFunction load_samples(const std::string& path, double edge_eps) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::vector<double> xs;
  std::vector<cplx> vs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#' || l.starts_with("x,")) continue;
    std::vector<double> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = l.find(',', start);
      const auto v = parse_real(l.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (!v) throw Error(ErrorCode::ParseError, path + ":" + std::to_string(lineno) + ": bad number");
      cols.push_back(*v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols.size() < 2 || cols.size() > 3)
      throw Error(ErrorCode::ParseError, path + ":" + std::to_string(lineno) + ": expected x,re[,im]");
    xs.push_back(cols[0]);
    vs.emplace_back(cols[1], cols.size() == 3 ? cols[2] : 0.0);
  }
  return SampledFunction(std::move(xs), std::move(vs), std::nullopt, edge_eps);
}

FunctionSpec spec_from(const EndpointWeightedFunction& f) {
  FunctionSpec spec;
  const ChebyshevSeries s = f.smooth().trimmed();
  spec.coeffs.assign(s.coeffs().begin(), s.coeffs().end());
  if (spec.coeffs.empty()) spec.coeffs.push_back(0.0);
  if (f.a() == 0.0 && f.b() == 0.0) {
    spec.kind = s.basis() == ChebyshevBasis::FirstKind ? SpecKind::ChebT : SpecKind::ChebU;
    return spec;
  }
  spec.kind = SpecKind::Weighted;
  spec.a = f.a();
  spec.b = f.b();
  spec.inner = s.basis();
  return spec;
}

}  // namespace fht
