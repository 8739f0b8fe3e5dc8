#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fht {

using cplx = std::complex<double>;

enum class ChebyshevBasis { FirstKind, SecondKind };

/// Finite expansion sum_n c_n P_n(x) with P_n = T_n (first kind) or U_n (second kind).
class ChebyshevSeries {
 public:
  ChebyshevSeries() = default;
  ChebyshevSeries(std::vector<cplx> coeffs, ChebyshevBasis basis = ChebyshevBasis::FirstKind);

  static ChebyshevSeries constant(cplx c, ChebyshevBasis basis = ChebyshevBasis::FirstKind);
  /// c * P_n, i.e. a single basis element.
  static ChebyshevSeries basis_element(std::size_t n, ChebyshevBasis basis, cplx c = 1.0);
  /// Exact conversion of monomial coefficients m_0 + m_1 x + ... into T_n form.
  static ChebyshevSeries from_monomials(std::span<const cplx> monomials);

  [[nodiscard]] ChebyshevBasis basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  /// Highest index; an empty series has degree 0.
  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  [[nodiscard]] cplx coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

  /// Clenshaw recurrence.
  [[nodiscard]] cplx operator()(double x) const noexcept;

  /// max(|c_{N-1}|, |c_N|) <= tail_tol * max_n |c_n|. The zero series is resolved.
  [[nodiscard]] bool resolved(double tail_tol = 1e-12) const noexcept;

  [[nodiscard]] ChebyshevSeries to_first_kind() const;
  [[nodiscard]] ChebyshevSeries to_second_kind() const;
  [[nodiscard]] ChebyshevSeries in_basis(ChebyshevBasis basis) const;
  /// Drops trailing coefficients with |c| <= tol * max|c|.
  [[nodiscard]] ChebyshevSeries trimmed(double tol = 0.0) const;

  ChebyshevSeries& operator+=(const ChebyshevSeries& other);
  ChebyshevSeries& operator*=(cplx s);
  friend ChebyshevSeries operator+(ChebyshevSeries lhs, const ChebyshevSeries& rhs) { return lhs += rhs; }
  friend ChebyshevSeries operator*(cplx s, ChebyshevSeries rhs) { return rhs *= s; }

 private:
  std::vector<cplx> coeffs_;
  ChebyshevBasis basis_ = ChebyshevBasis::FirstKind;
};

/// Chebyshev-Gauss nodes cos((2k+1)pi/(2N+2)), k = 0..N.
[[nodiscard]] std::vector<double> chebyshev_gauss_nodes(std::size_t degree);

/// Degree-N interpolant through the Chebyshev-Gauss nodes, returned in the T basis.
/// Throws NonFiniteSample if f is not finite at a node.
[[nodiscard]] ChebyshevSeries interpolate_chebyshev(const std::function<cplx(double)>& f, std::size_t degree);

}  // namespace fht
