#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fht/functions.hpp"
#include "fht/quadrature.hpp"

namespace fht {

// Everything in this header uses the Widom normalisation T/i.

inline constexpr double kRegionTol = 1e-12;    // on the defining arg inequality
inline constexpr double kRealAxisTol = 1e-14;  // imaginary-part tolerance for real lambda

enum class Membership { Interior, Boundary, Outside };

[[nodiscard]] std::string_view to_string(Membership m) noexcept;

/// u(lambda) = (1 + lambda) / (1 - lambda), mapping the eigenvalue set onto C \ (-inf, 0].
[[nodiscard]] cplx mobius_u(cplx lambda);

/// Lens R_p bounded by the circular arcs through -1, 1 and i cot(pi/p), i cot(pi/p').
class SpectralRegion {
 public:
  explicit SpectralRegion(double p);

  [[nodiscard]] double p() const noexcept { return p_; }
  [[nodiscard]] double dual_exponent() const noexcept { return p_ / (p_ - 1.0); }
  /// |1/2 - 1/p|, the half-opening of the lens in units of 2 pi.
  [[nodiscard]] double half_opening() const noexcept;

  [[nodiscard]] Membership contains(cplx lambda) const;

  /// Boundary arc with arg u = sign * 2 pi half_opening, from -1 to 1, `n` points inclusive.
  [[nodiscard]] std::vector<cplx> boundary_arc(int sign, std::size_t n = 400) const;
  /// Point of the closed region for (s, r) in [0,1] x [-1,1]: r = +-1 is the boundary, s the arc position.
  [[nodiscard]] cplx point(double s, double r) const;

 private:
  double p_;
};

/// {+-1} or (1/2pi)|arg u(lambda)| <= |1/2 - 1/p| (to kRegionTol); +-1 count as boundary.
[[nodiscard]] Membership region_contains(double p, cplx lambda);

/// lambda in A = C \ ((-inf, -1] U [1, inf)).
[[nodiscard]] bool in_eigenvalue_set(cplx lambda) noexcept;

/// z = (1 / 2 pi i) log u(lambda), principal branch; BranchViolation off A.
[[nodiscard]] cplx z_of_lambda(cplx lambda);

/// 1/gamma = 1/2 + (1/2 pi)|arg u(lambda)|, so 1 < gamma <= 2 with gamma = 2 on (-1, 1).
/// OutsideEigenvalueSet off A.
[[nodiscard]] double gamma_of_lambda(cplx lambda);

/// xi_lambda = (1/w) ((1-x)/(1+x))^{z(lambda)} with exponents (-1/2 + z, -1/2 - z).
[[nodiscard]] EndpointWeightedFunction xi_function(cplx lambda);
[[nodiscard]] cplx xi_eval(cplx lambda, double x);

/// sup over grid of |(T/i) xi(t) - lambda xi(t)| / (1 + |xi(t)|). Requires gamma_lambda > 1.05.
[[nodiscard]] double eigen_residual(cplx lambda, std::span<const double> grid, const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------

enum class SpaceKind { Lebesgue, Lorentz, Indexed, Catalog };

/// Parametric rearrangement-invariant space.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Lebesgue;
  double p = 2.0;
  double r = 2.0;  // Lorentz second exponent, may be infinity
  double p_index = 2.0;
  double q_index = 2.0;
  bool p_attained = false;
  bool q_attained = false;
  // Caller asserts X interpolates between L^2 and L^{p_X}; the equal-index rows depend on it.
  bool interpolation = true;
  std::string name;  // catalog entry, e.g. "L^3" or "L^{2,1}"

  static SpaceDescriptor lebesgue(double p);
  static SpaceDescriptor lorentz(double p, double r);
  static SpaceDescriptor indexed(double p_index, double q_index, bool p_attained, bool q_attained);
  static SpaceDescriptor catalog(std::string name);

  /// Throws InvalidArgument on out-of-range parameters or an impossible attainment pattern.
  void validate() const;
  /// Catalog entries resolved to Lebesgue/Lorentz; other kinds returned unchanged.
  [[nodiscard]] SpaceDescriptor resolved() const;
  [[nodiscard]] std::string label() const;
};

struct SpaceIndices {
  double p_index;
  bool p_attained;
  double q_index;
  bool q_attained;
};

/// p_X = q_X = p; p_X attained iff r = infinity, q_X attained iff r = 1.
[[nodiscard]] SpaceIndices lorentz_indices(double p, double r);

enum class SetKind {
  Empty,
  Interior,              // int R_p
  RegionMinusEndpoints,  // R_p \ {+-1}
  Boundary,              // boundary of R_p
  EndpointsOnly,         // {+-1}
  OpenUnitInterval,      // (-1, 1)
  ClosedUnitInterval,    // [-1, 1]
  Remainder,             // sigma minus the other two parts, sigma not known in closed form
};

[[nodiscard]] std::string_view to_string(SetKind k) noexcept;

struct SymbolicSet {
  SetKind kind = SetKind::Empty;
  double p = 2.0;  // meaningful for Interior, RegionMinusEndpoints, Boundary

  static SymbolicSet empty() { return {SetKind::Empty, 2.0}; }
  [[nodiscard]] bool uses_p() const noexcept;
  [[nodiscard]] std::string label() const;
  friend bool operator==(const SymbolicSet& l, const SymbolicSet& r) noexcept {
    return l.kind == r.kind && (!l.uses_p() || l.p == r.p);
  }
};

struct FineSpectrum {
  std::optional<double> sigma_p;  // sigma = R_{sigma_p} when known
  SymbolicSet point;
  SymbolicSet residual;
  SymbolicSet continuous;
};

/// Fine spectrum from the Lebesgue/Lorentz tables and, for indexed spaces, the index rules.
/// Non-separable Lorentz spaces (r = infinity) and unknown catalog names throw UnsupportedDescriptor.
[[nodiscard]] FineSpectrum classify_space(const SpaceDescriptor& desc);

/// Whether lambda lies in the set; Remainder needs the other two parts and a known sigma.
[[nodiscard]] bool set_contains(const SymbolicSet& set, cplx lambda);

enum class PointClass { Resolvent, Point, Residual, Continuous };
[[nodiscard]] std::string_view to_string(PointClass c) noexcept;

/// Resolves lambda against classify_space(desc). Point claims are cross-checked with the
/// eigenfunction membership rule (xi_lambda in X iff p_X <= gamma, or < when not attained);
/// a disagreement throws InconsistentClassification. Points outside [-1, 1] for spaces whose
/// spectrum is not known in closed form throw UnsupportedDescriptor.
[[nodiscard]] PointClass classify_point(const SpaceDescriptor& desc, cplx lambda);

/// Indices of any descriptor kind (Lebesgue p -> Lorentz (p, p)).
[[nodiscard]] SpaceIndices space_indices(const SpaceDescriptor& desc);

/// Deterministic sample of sigma = R_p: both endpoints, boundary points and interior points.
[[nodiscard]] std::vector<cplx> sample_region(double p, std::size_t count, unsigned seed);

}  // namespace fht
