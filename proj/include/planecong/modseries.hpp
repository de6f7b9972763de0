#pragma once

// Dense truncated power series and polynomials over Z/mZ.
//
// Every generating function in this library is a product of factors
// 1/(1 - q^j)^e, so the only structured operations needed are a strided
// prefix sum (one pass per unit of exponent) and multiplication by a short
// polynomial. Coefficients are stored reduced in [0, m) and the truncation
// order is fixed when a series is created.
//
// Cost model: apply_inverse_factor(s, j, e) is e passes of O(order - j).
// Building PL_k to order N therefore costs about k * N^2 / 2 additions,
// which is a few hundred million word operations for k = 31, N ~ 10^4.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace planecong {

using Residue = std::uint32_t;
using Modulus = std::uint32_t;

/// Truncated series sum_{n < order} c_n q^n with c_n in [0, modulus).
class ResidueSeries {
public:
  ResidueSeries(Modulus modulus, std::vector<Residue> coeffs);

  Modulus modulus() const noexcept { return modulus_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  /// Bounds-checked coefficient of q^n.
  Residue at(std::size_t n) const;
  Residue operator[](std::size_t n) const noexcept { return coeffs_[n]; }

  friend bool operator==(const ResidueSeries&, const ResidueSeries&) = default;

private:
  friend ResidueSeries apply_inverse_factor(ResidueSeries s, std::size_t stride,
                                            unsigned exponent);
  Modulus modulus_;
  std::vector<Residue> coeffs_;
};

/// Polynomial with coefficients in [0, modulus), trailing zeros trimmed.
class DensePoly {
public:
  DensePoly(Modulus modulus, std::vector<Residue> coeffs);

  Modulus modulus() const noexcept { return modulus_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Residue coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
  Modulus modulus_;
  std::vector<Residue> coeffs_;
};

/// The series 1 with `order` retained terms.
ResidueSeries one(Modulus modulus, std::size_t order);

/// Residue of c at q^n. Throws std::out_of_range past the truncation order.
Residue coeff_at(const ResidueSeries& s, std::size_t n);

/// s * p truncated to s.order().
ResidueSeries mul_poly(const ResidueSeries& s, const DensePoly& p);

/// s / (1 - q^stride)^exponent, as `exponent` strided prefix-sum passes.
ResidueSeries apply_inverse_factor(ResidueSeries s, std::size_t stride,
                                   unsigned exponent);

/// (1 - q^stride)^exponent with Pascal-row binomials reduced mod `modulus`.
DensePoly binomial_poly(Modulus modulus, std::size_t stride, unsigned exponent);

/// Product of two polynomials over the same modulus.
DensePoly mul(const DensePoly& a, const DensePoly& b);

/// Exact integer polynomial, index = exponent.
using IntPoly = std::vector<std::int64_t>;

/// Exact expansion of (1 - q^stride)^exponent over Z.
IntPoly binomial_int_poly(std::size_t stride, unsigned exponent);

/// Exact product over Z; throws std::overflow_error if a coefficient
/// leaves the int64 range.
IntPoly mul(const IntPoly& a, const IntPoly& b);

/// Reduces an integer polynomial into [0, modulus).
DensePoly reduce(const IntPoly& p, Modulus modulus);

}  // namespace planecong
