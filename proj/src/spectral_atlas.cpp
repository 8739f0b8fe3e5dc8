#include "fht/spectral_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include "fht/errors.hpp"
#include "fht/transform.hpp"

namespace fht {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_endpoint(cplx lambda) {
  return std::abs(lambda - 1.0) <= kRegionTol || std::abs(lambda + 1.0) <= kRegionTol;
}

bool is_real(cplx lambda) { return std::abs(lambda.imag()) <= kRealAxisTol; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

cplx mobius_u(cplx lambda) { return (1.0 + lambda) / (1.0 - lambda); }

SpectralRegion::SpectralRegion(double p) : p_(p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "spectral region needs 1 < p < inf");
}

double SpectralRegion::half_opening() const noexcept { return std::abs(0.5 - 1.0 / p_); }

Membership SpectralRegion::contains(cplx lambda) const {
  if (is_endpoint(lambda)) return Membership::Boundary;
  const double lhs = std::abs(std::arg(mobius_u(lambda))) / kTwoPi;
  const double rhs = half_opening();
  if (lhs < rhs - kRegionTol) return Membership::Interior;
  if (lhs <= rhs + kRegionTol) return Membership::Boundary;
  return Membership::Outside;
}

cplx SpectralRegion::point(double s, double r) const {
  if (s <= 0.0) return -1.0;
  if (s >= 1.0) return 1.0;
  const double rho = std::tan(0.5 * std::numbers::pi * s);
  const cplx u = std::polar(rho, r * kTwoPi * half_opening());
  return (u - 1.0) / (u + 1.0);
}

std::vector<cplx> SpectralRegion::boundary_arc(int sign, std::size_t n) const {
  std::vector<cplx> arc(n);
  const double r = sign >= 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = n == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(n - 1);
    arc[k] = point(s, r);
  }
  return arc;
}

Membership region_contains(double p, cplx lambda) { return SpectralRegion(p).contains(lambda); }

bool in_eigenvalue_set(cplx lambda) noexcept { return !(is_real(lambda) && std::abs(lambda.real()) >= 1.0); }

cplx z_of_lambda(cplx lambda) {
  if (!in_eigenvalue_set(lambda))
    throw Error(ErrorCode::BranchViolation, "(1+lambda)/(1-lambda) lies on the cut (-inf, 0]");
  if (lambda == cplx{}) return {};
  return std::log(mobius_u(lambda)) / cplx(0.0, kTwoPi);
}

double gamma_of_lambda(cplx lambda) {
  if (!in_eigenvalue_set(lambda))
    throw Error(ErrorCode::OutsideEigenvalueSet, "lambda is real with |lambda| >= 1");
  const double arg = is_real(lambda) ? 0.0 : std::abs(std::arg(mobius_u(lambda)));
  return 1.0 / (0.5 + arg / kTwoPi);
}

EndpointWeightedFunction xi_function(cplx lambda) {
  const cplx z = z_of_lambda(lambda);
  return {-0.5 + z, -0.5 - z, ChebyshevSeries::constant(1.0)};
}

cplx xi_eval(cplx lambda, double x) { return xi_function(lambda)(x); }

double eigen_residual(cplx lambda, std::span<const double> grid, const QuadratureConfig& cfg) {
  const double gamma = gamma_of_lambda(lambda);
  if (!(gamma > 1.05))
    throw Error(ErrorCode::InvalidArgument, "eigen check needs gamma_lambda > 1.05 (got " + fmt(gamma) + ")");
  const EndpointWeightedFunction xi = xi_function(lambda);
  const Evaluable f(xi);
  const auto image = fht_batch(f, grid, cfg, Convention::Widom);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx v = xi(grid[k]);
    worst = std::max(worst, std::abs(image[k] - lambda * v) / (1.0 + std::abs(v)));
  }
  return worst;
}

// ---------------------------------------------------------------------------

SpaceDescriptor SpaceDescriptor::lebesgue(double p) {
  SpaceDescriptor d;
  d.kind = SpaceKind::Lebesgue;
  d.p = p;
  d.r = p;
  return d;
}

SpaceDescriptor SpaceDescriptor::lorentz(double p, double r) {
  SpaceDescriptor d;
  d.kind = SpaceKind::Lorentz;
  d.p = p;
  d.r = r;
  return d;
}

SpaceDescriptor SpaceDescriptor::indexed(double p_index, double q_index, bool p_attained, bool q_attained) {
  SpaceDescriptor d;
  d.kind = SpaceKind::Indexed;
  d.p_index = p_index;
  d.q_index = q_index;
  d.p_attained = p_attained;
  d.q_attained = q_attained;
  return d;
}

SpaceDescriptor SpaceDescriptor::catalog(std::string name) {
  SpaceDescriptor d;
  d.kind = SpaceKind::Catalog;
  d.name = std::move(name);
  return d;
}

void SpaceDescriptor::validate() const {
  const auto exponent_ok = [](double v) { return v > 1.0 && std::isfinite(v); };
  switch (kind) {
    case SpaceKind::Lebesgue:
      if (!exponent_ok(p)) throw Error(ErrorCode::InvalidArgument, "Lebesgue exponent must lie in (1, inf)");
      break;
    case SpaceKind::Lorentz:
      if (!exponent_ok(p)) throw Error(ErrorCode::InvalidArgument, "Lorentz p must lie in (1, inf)");
      if (!(r >= 1.0)) throw Error(ErrorCode::InvalidArgument, "Lorentz r must lie in [1, inf]");
      break;
    case SpaceKind::Indexed:
      if (!exponent_ok(p_index) || !exponent_ok(q_index))
        throw Error(ErrorCode::InvalidArgument, "indices p_X, q_X must lie in (1, inf)");
      if (q_index > p_index) throw Error(ErrorCode::InvalidArgument, "q_X <= p_X is required");
      if (p_index == q_index && p_attained && q_attained)
        throw Error(ErrorCode::InvalidArgument, "p_X = q_X cannot be attained at both indices");
      break;
    case SpaceKind::Catalog:
      resolved().validate();
      break;
  }
}

SpaceDescriptor SpaceDescriptor::resolved() const {
  if (kind != SpaceKind::Catalog) return *this;
  // "L^p", "L^{p}", "L^{p,r}", with "inf" allowed for r.
  static const std::regex lebesgue_re(R"(^L\^\{?([0-9.eE+-]+)\}?$)");
  static const std::regex lorentz_re(R"(^L\^\{([0-9.eE+-]+),([0-9.eE+-]+|inf)\}$)");
  std::smatch m;
  try {
    if (std::regex_match(name, m, lebesgue_re)) return lebesgue(std::stod(m[1]));
    if (std::regex_match(name, m, lorentz_re))
      return lorentz(std::stod(m[1]), m[2] == "inf" ? std::numeric_limits<double>::infinity() : std::stod(m[2]));
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::UnsupportedDescriptor, "unknown catalog space '" + name + "'");
}

std::string SpaceDescriptor::label() const {
  switch (kind) {
    case SpaceKind::Lebesgue: return "lebesgue:" + fmt(p);
    case SpaceKind::Lorentz: return "lorentz:" + fmt(p) + "," + (std::isinf(r) ? std::string("inf") : fmt(r));
    case SpaceKind::Indexed:
      return "indexed:" + fmt(p_index) + "," + fmt(q_index) + "," + (p_attained ? "1" : "0") + "," +
             (q_attained ? "1" : "0") + (interpolation ? "" : ",0");
    case SpaceKind::Catalog: return "catalog:" + name;
  }
  return "?";
}

SpaceIndices lorentz_indices(double p, double r) {
  if (!(p > 1.0) || !std::isfinite(p) || !(r >= 1.0))
    throw Error(ErrorCode::InvalidArgument, "lorentz_indices needs 1 < p < inf and r in [1, inf]");
  return {p, std::isinf(r), p, r == 1.0};
}

SpaceIndices space_indices(const SpaceDescriptor& desc) {
  const SpaceDescriptor d = desc.resolved();
  switch (d.kind) {
    case SpaceKind::Lebesgue: return lorentz_indices(d.p, d.p);
    case SpaceKind::Lorentz: return lorentz_indices(d.p, d.r);
    case SpaceKind::Indexed: return {d.p_index, d.p_attained, d.q_index, d.q_attained};
    case SpaceKind::Catalog: break;
  }
  throw Error(ErrorCode::UnsupportedDescriptor, "unresolved descriptor");
}

std::string_view to_string(SetKind k) noexcept {
  switch (k) {
    case SetKind::Empty: return "Empty";
    case SetKind::Interior: return "Interior";
    case SetKind::RegionMinusEndpoints: return "RegionMinusEndpoints";
    case SetKind::Boundary: return "Boundary";
    case SetKind::EndpointsOnly: return "EndpointsOnly";
    case SetKind::OpenUnitInterval: return "OpenUnitInterval";
    case SetKind::ClosedUnitInterval: return "ClosedUnitInterval";
    case SetKind::Remainder: return "Remainder";
  }
  return "?";
}

bool SymbolicSet::uses_p() const noexcept {
  return kind == SetKind::Interior || kind == SetKind::RegionMinusEndpoints || kind == SetKind::Boundary;
}

std::string SymbolicSet::label() const {
  std::string s(to_string(kind));
  if (uses_p()) s += "(" + fmt(p) + ")";
  return s;
}

namespace {

SymbolicSet interior(double p) { return {SetKind::Interior, p}; }
SymbolicSet minus_endpoints(double p) { return {SetKind::RegionMinusEndpoints, p}; }
SymbolicSet boundary(double p) { return {SetKind::Boundary, p}; }
SymbolicSet of(SetKind k) { return {k, 2.0}; }

FineSpectrum lebesgue_row(double p) {
  if (p < 2.0) return {p, interior(p), SymbolicSet::empty(), boundary(p)};
  if (p > 2.0) return {p, SymbolicSet::empty(), interior(p), boundary(p)};
  return {p, SymbolicSet::empty(), SymbolicSet::empty(), of(SetKind::ClosedUnitInterval)};
}

FineSpectrum lorentz_row(double p, double r) {
  if (std::isinf(r))
    throw Error(ErrorCode::UnsupportedDescriptor, "L^{p,inf} is not separable; no fine-spectrum table covers it");
  if (p < 2.0) return {p, interior(p), SymbolicSet::empty(), boundary(p)};
  if (p > 2.0) {
    if (r == 1.0) return {p, SymbolicSet::empty(), minus_endpoints(p), of(SetKind::EndpointsOnly)};
    return {p, SymbolicSet::empty(), interior(p), boundary(p)};
  }
  if (r == 1.0) return {p, SymbolicSet::empty(), of(SetKind::OpenUnitInterval), of(SetKind::EndpointsOnly)};
  return {p, SymbolicSet::empty(), SymbolicSet::empty(), of(SetKind::ClosedUnitInterval)};
}

// Equal indices: the complete table for p_X = q_X = s.
FineSpectrum equal_index_row(double s, bool p_attained, bool q_attained) {
  if (s < 2.0) {
    if (p_attained) return {s, minus_endpoints(s), SymbolicSet::empty(), of(SetKind::EndpointsOnly)};
    return {s, interior(s), SymbolicSet::empty(), boundary(s)};
  }
  if (s > 2.0) {
    if (q_attained) return {s, SymbolicSet::empty(), minus_endpoints(s), of(SetKind::EndpointsOnly)};
    return {s, SymbolicSet::empty(), interior(s), boundary(s)};
  }
  if (p_attained) return {s, of(SetKind::OpenUnitInterval), SymbolicSet::empty(), of(SetKind::EndpointsOnly)};
  if (q_attained) return {s, SymbolicSet::empty(), of(SetKind::OpenUnitInterval), of(SetKind::EndpointsOnly)};
  return {s, SymbolicSet::empty(), SymbolicSet::empty(), of(SetKind::ClosedUnitInterval)};
}

// q_X < p_X: point and residual parts from the index rules, sigma itself not determined.
FineSpectrum split_index_row(double p_index, double q_index, bool p_attained, bool q_attained) {
  const SymbolicSet rest = of(SetKind::Remainder);
  if (p_index < 2.0 && !p_attained) return {std::nullopt, interior(p_index), SymbolicSet::empty(), rest};
  if (p_index <= 2.0 && p_attained) return {std::nullopt, minus_endpoints(p_index), SymbolicSet::empty(), rest};
  if (q_index > 2.0 && !q_attained) return {std::nullopt, SymbolicSet::empty(), interior(q_index), rest};
  if (q_index >= 2.0 && q_attained) return {std::nullopt, SymbolicSet::empty(), minus_endpoints(q_index), rest};
  // q_X <= 2 <= p_X with neither index attained at 2.
  if (q_index <= 2.0 && p_index >= 2.0) return {std::nullopt, SymbolicSet::empty(), SymbolicSet::empty(), rest};
  throw Error(ErrorCode::UnsupportedDescriptor, "no fine-spectrum rule covers these indices");
}

}  // namespace

FineSpectrum classify_space(const SpaceDescriptor& desc) {
  desc.validate();
  const SpaceDescriptor d = desc.resolved();
  switch (d.kind) {
    case SpaceKind::Lebesgue: return lebesgue_row(d.p);
    case SpaceKind::Lorentz: return lorentz_row(d.p, d.r);
    case SpaceKind::Indexed:
      if (d.p_index == d.q_index && !d.interpolation)
        throw Error(ErrorCode::UnsupportedDescriptor, "equal-index row needs the interpolation hypothesis");
      if (d.p_index == d.q_index) return equal_index_row(d.p_index, d.p_attained, d.q_attained);
      return split_index_row(d.p_index, d.q_index, d.p_attained, d.q_attained);
    case SpaceKind::Catalog: break;
  }
  throw Error(ErrorCode::UnsupportedDescriptor, "unresolved descriptor");
}

bool set_contains(const SymbolicSet& set, cplx lambda) {
  switch (set.kind) {
    case SetKind::Empty: return false;
    case SetKind::Interior: return region_contains(set.p, lambda) == Membership::Interior;
    case SetKind::RegionMinusEndpoints:
      return !is_endpoint(lambda) && region_contains(set.p, lambda) != Membership::Outside;
    case SetKind::Boundary: return region_contains(set.p, lambda) == Membership::Boundary;
    case SetKind::EndpointsOnly: return is_endpoint(lambda);
    case SetKind::OpenUnitInterval: return is_real(lambda) && std::abs(lambda.real()) < 1.0 && !is_endpoint(lambda);
    case SetKind::ClosedUnitInterval: return is_endpoint(lambda) || (is_real(lambda) && std::abs(lambda.real()) <= 1.0);
    case SetKind::Remainder: break;
  }
  throw Error(ErrorCode::InvalidArgument, "Remainder membership depends on the whole spectrum");
}

std::string_view to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::Resolvent: return "resolvent";
    case PointClass::Point: return "point";
    case PointClass::Residual: return "residual";
    case PointClass::Continuous: return "continuous";
  }
  return "?";
}

PointClass classify_point(const SpaceDescriptor& desc, cplx lambda) {
  const FineSpectrum fs = classify_space(desc);
  PointClass result;
  const bool in_point = set_contains(fs.point, lambda);
  const bool in_residual = set_contains(fs.residual, lambda);
  if (in_point) {
    result = PointClass::Point;
  } else if (in_residual) {
    result = PointClass::Residual;
  } else if (fs.sigma_p) {
    const bool in_sigma = region_contains(*fs.sigma_p, lambda) != Membership::Outside;
    if (!in_sigma) {
      result = PointClass::Resolvent;
    } else if (fs.continuous.kind == SetKind::Remainder || set_contains(fs.continuous, lambda)) {
      result = PointClass::Continuous;
    } else {
      throw Error(ErrorCode::InconsistentClassification, "lambda in sigma but in none of its parts");
    }
  } else if (is_real(lambda) && std::abs(lambda.real()) <= 1.0) {
    result = PointClass::Continuous;  // [-1, 1] always lies in sigma
  } else {
    throw Error(ErrorCode::UnsupportedDescriptor, "spectrum away from [-1, 1] is not determined for " + desc.label());
  }

  // Eigenfunction membership: xi_lambda in X iff p_X <= gamma (attained) or p_X < gamma.
  const SpaceIndices idx = space_indices(desc);
  bool xi_in_space = false;
  bool decisive = true;
  if (in_eigenvalue_set(lambda)) {
    const double gamma = gamma_of_lambda(lambda);
    xi_in_space = idx.p_attained ? idx.p_index <= gamma : idx.p_index < gamma;
    decisive = std::abs(gamma - idx.p_index) > 1e-9;
  }
  if (decisive && xi_in_space != (result == PointClass::Point))
    throw Error(ErrorCode::InconsistentClassification,
                "table and eigenfunction membership disagree at lambda = (" + fmt(lambda.real()) + ", " +
                    fmt(lambda.imag()) + ")");
  return result;
}

std::vector<cplx> sample_region(double p, std::size_t count, unsigned seed) {
  const SpectralRegion region(p);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> pts;
  pts.reserve(count);
  if (count > 0) pts.emplace_back(-1.0);
  if (count > 1) pts.emplace_back(1.0);
  const std::size_t n_boundary = count / 3;
  for (std::size_t k = 0; pts.size() < count && k < n_boundary; ++k)
    pts.push_back(region.point(0.01 + 0.98 * unit(rng), (k % 2 == 0) ? 1.0 : -1.0));
  while (pts.size() < count) pts.push_back(region.point(0.01 + 0.98 * unit(rng), -0.98 + 1.96 * unit(rng)));
  return pts;
}

}  // namespace fht
