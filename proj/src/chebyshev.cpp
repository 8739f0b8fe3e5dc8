#include "fht/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fht/errors.hpp"

namespace fht {

ChebyshevSeries::ChebyshevSeries(std::vector<cplx> coeffs, ChebyshevBasis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {}

ChebyshevSeries ChebyshevSeries::constant(cplx c, ChebyshevBasis basis) { return ChebyshevSeries({c}, basis); }

ChebyshevSeries ChebyshevSeries::basis_element(std::size_t n, ChebyshevBasis basis, cplx c) {
  std::vector<cplx> coeffs(n + 1);
  coeffs[n] = c;
  return ChebyshevSeries(std::move(coeffs), basis);
}

ChebyshevSeries ChebyshevSeries::from_monomials(std::span<const cplx> monomials) {
  // x^k in T form, built from x * T_n = (T_{n+1} + T_{|n-1|}) / 2.
  const std::size_t n = monomials.empty() ? 1 : monomials.size();
  std::vector<cplx> out(n);
  std::vector<double> power{1.0};
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    for (std::size_t j = 0; j < power.size(); ++j) out[j] += monomials[k] * power[j];
    std::vector<double> next(power.size() + 1, 0.0);
    for (std::size_t j = 0; j < power.size(); ++j) {
      if (j == 0) {
        next[1] += power[0];
      } else {
        next[j + 1] += 0.5 * power[j];
        next[j - 1] += 0.5 * power[j];
      }
    }
    power = std::move(next);
  }
  return ChebyshevSeries(std::move(out), ChebyshevBasis::FirstKind);
}

cplx ChebyshevSeries::operator()(double x) const noexcept {
  if (coeffs_.empty()) return {};
  // b_k = c_k + 2x b_{k+1} - b_{k+2}; T: f = b_0 - x b_1, U: f = b_0.
  cplx b1{}, b2{};
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    const cplx b0 = coeffs_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  if (basis_ == ChebyshevBasis::FirstKind) return coeffs_[0] + x * b1 - b2;
  return coeffs_[0] + 2.0 * x * b1 - b2;
}

bool ChebyshevSeries::resolved(double tail_tol) const noexcept {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  const std::size_t n = coeffs_.size();
  double tail = std::abs(coeffs_[n - 1]);
  if (n >= 2) tail = std::max(tail, std::abs(coeffs_[n - 2]));
  return tail <= tail_tol * scale;
}

ChebyshevSeries ChebyshevSeries::to_first_kind() const {
  if (basis_ == ChebyshevBasis::FirstKind) return *this;
  // U_n = 2 sum_{j = n, n-2, ..., > 0} T_j  (+ T_0 when n is even).
  std::vector<cplx> out(std::max<std::size_t>(coeffs_.size(), 1));
  // Accumulate from the top with running parity sums to stay O(N).
  cplx run[2] = {{}, {}};
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    run[n % 2] += coeffs_[n];
    out[n] = (n == 0) ? run[0] : 2.0 * run[n % 2];
  }
  return ChebyshevSeries(std::move(out), ChebyshevBasis::FirstKind);
}

ChebyshevSeries ChebyshevSeries::to_second_kind() const {
  if (basis_ == ChebyshevBasis::SecondKind) return *this;
  // T_0 = U_0, T_1 = U_1 / 2, T_n = (U_n - U_{n-2}) / 2.
  std::vector<cplx> out(std::max<std::size_t>(coeffs_.size(), 1));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n == 0) {
      out[0] += coeffs_[0];
    } else if (n == 1) {
      out[1] += 0.5 * coeffs_[1];
    } else {
      out[n] += 0.5 * coeffs_[n];
      out[n - 2] -= 0.5 * coeffs_[n];
    }
  }
  return ChebyshevSeries(std::move(out), ChebyshevBasis::SecondKind);
}

ChebyshevSeries ChebyshevSeries::in_basis(ChebyshevBasis basis) const {
  return basis == ChebyshevBasis::FirstKind ? to_first_kind() : to_second_kind();
}

ChebyshevSeries ChebyshevSeries::trimmed(double tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  std::size_t n = coeffs_.size();
  while (n > 1 && std::abs(coeffs_[n - 1]) <= tol * scale) --n;
  return ChebyshevSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)), basis_);
}

ChebyshevSeries& ChebyshevSeries::operator+=(const ChebyshevSeries& other) {
  const ChebyshevSeries rhs = other.in_basis(basis_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

ChebyshevSeries& ChebyshevSeries::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::vector<double> chebyshev_gauss_nodes(std::size_t degree) {
  const std::size_t m = degree + 1;
  std::vector<double> nodes(m);
  for (std::size_t k = 0; k < m; ++k)
    nodes[k] = std::cos(std::numbers::pi * static_cast<double>(2 * k + 1) / static_cast<double>(2 * m));
  return nodes;
}

ChebyshevSeries interpolate_chebyshev(const std::function<cplx(double)>& f, std::size_t degree) {
  const std::size_t m = degree + 1;
  const auto nodes = chebyshev_gauss_nodes(degree);
  std::vector<cplx> values(m);
  for (std::size_t k = 0; k < m; ++k) {
    values[k] = f(nodes[k]);
    if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag()))
      throw Error(ErrorCode::NonFiniteSample, "interpolant sample at x = " + std::to_string(nodes[k]) + " is not finite");
  }
  // Discrete orthogonality of T_j over the Gauss nodes.
  std::vector<cplx> coeffs(m);
  for (std::size_t j = 0; j < m; ++j) {
    cplx sum{};
    for (std::size_t k = 0; k < m; ++k)
      sum += values[k] * std::cos(std::numbers::pi * static_cast<double>(j * (2 * k + 1) % (4 * m)) /
                                  static_cast<double>(2 * m));
    coeffs[j] = sum * (j == 0 ? 1.0 : 2.0) / static_cast<double>(m);
  }
  return ChebyshevSeries(std::move(coeffs), ChebyshevBasis::FirstKind);
}

}  // namespace fht
