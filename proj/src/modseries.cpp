#include "planecong/modseries.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

namespace planecong {

namespace {

void check_modulus(Modulus m) {
  if (m < 2) {
    throw std::invalid_argument(fmt::format("modulus must be >= 2, got {}", m));
  }
}

void trim(std::vector<Residue>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

ResidueSeries::ResidueSeries(Modulus modulus, std::vector<Residue> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  check_modulus(modulus_);
  if (coeffs_.empty()) {
    throw std::invalid_argument("series order must be >= 1");
  }
  for (auto& c : coeffs_) c %= modulus_;
}

Residue ResidueSeries::at(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range(
        fmt::format("coefficient {} requested from a series of order {}", n,
                    coeffs_.size()));
  }
  return coeffs_[n];
}

DensePoly::DensePoly(Modulus modulus, std::vector<Residue> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  check_modulus(modulus_);
  for (auto& c : coeffs_) c %= modulus_;
  trim(coeffs_);
}

ResidueSeries one(Modulus modulus, std::size_t order) {
  check_modulus(modulus);
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  std::vector<Residue> c(order, 0);
  c[0] = 1;
  return ResidueSeries(modulus, std::move(c));
}

Residue coeff_at(const ResidueSeries& s, std::size_t n) { return s.at(n); }

ResidueSeries mul_poly(const ResidueSeries& s, const DensePoly& p) {
  if (s.modulus() != p.modulus()) {
    throw std::invalid_argument(fmt::format(
        "modulus mismatch: series mod {}, polynomial mod {}", s.modulus(),
        p.modulus()));
  }
  const std::uint64_t m = s.modulus();
  const auto src = s.coeffs();
  const auto poly = p.coeffs();
  std::vector<std::uint64_t> acc(src.size(), 0);
  for (std::size_t i = 0; i < poly.size() && i < src.size(); ++i) {
    const std::uint64_t w = poly[i];
    if (w == 0) continue;
    for (std::size_t n = i; n < src.size(); ++n) {
      acc[n] = (acc[n] + w * src[n - i]) % m;
    }
  }
  return ResidueSeries(s.modulus(), std::vector<Residue>(acc.begin(), acc.end()));
}

ResidueSeries apply_inverse_factor(ResidueSeries s, std::size_t stride,
                                   unsigned exponent) {
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  const Residue m = s.modulus_;
  auto& c = s.coeffs_;
  const std::size_t order = c.size();
  for (unsigned pass = 0; pass < exponent; ++pass) {
    for (std::size_t n = stride; n < order; ++n) {
      // both operands < m <= 2^32 - 1, so the sum fits in 64 bits
      std::uint64_t v = std::uint64_t{c[n]} + c[n - stride];
      c[n] = static_cast<Residue>(v >= m ? v - m : v);
    }
  }
  return s;
}

DensePoly binomial_poly(Modulus modulus, std::size_t stride, unsigned exponent) {
  check_modulus(modulus);
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  // row[i] = C(exponent, i) mod modulus, by Pascal's rule
  std::vector<Residue> row{1};
  for (unsigned e = 1; e <= exponent; ++e) {
    std::vector<Residue> next(e + 1, 0);
    next[0] = next[e] = 1 % modulus;
    for (unsigned i = 1; i < e; ++i) {
      next[i] = static_cast<Residue>(
          (std::uint64_t{row[i - 1]} + row[i]) % modulus);
    }
    row = std::move(next);
  }
  std::vector<Residue> c(stride * exponent + 1, 0);
  for (unsigned i = 0; i <= exponent; ++i) {
    const Residue b = row[i] % modulus;
    c[stride * i] = (i % 2 == 0 || b == 0) ? b : modulus - b;
  }
  return DensePoly(modulus, std::move(c));
}

DensePoly mul(const DensePoly& a, const DensePoly& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch in polynomial product");
  }
  if (a.is_zero() || b.is_zero()) return DensePoly(a.modulus(), {});
  const std::uint64_t m = a.modulus();
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs()[i]} * b.coeffs()[j]) % m;
    }
  }
  return DensePoly(a.modulus(), std::vector<Residue>(acc.begin(), acc.end()));
}

IntPoly binomial_int_poly(std::size_t stride, unsigned exponent) {
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  IntPoly result{1};
  IntPoly factor(stride + 1, 0);
  factor[0] = 1;
  factor[stride] = -1;
  for (unsigned e = 0; e < exponent; ++e) result = mul(result, factor);
  return result;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::int64_t term = 0;
      if (__builtin_mul_overflow(a[i], b[j], &term) ||
          __builtin_add_overflow(out[i + j], term, &out[i + j])) {
        throw std::overflow_error("integer polynomial coefficient overflow");
      }
    }
  }
  return out;
}

DensePoly reduce(const IntPoly& p, Modulus modulus) {
  check_modulus(modulus);
  std::vector<Residue> c(p.size());
  const std::int64_t m = modulus;
  std::transform(p.begin(), p.end(), c.begin(), [m](std::int64_t v) {
    return static_cast<Residue>(((v % m) + m) % m);
  });
  return DensePoly(modulus, std::move(c));
}

}  // namespace planecong
