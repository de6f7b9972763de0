#include "planecong/periodicity.hpp"

#include <numeric>
#include <stdexcept>

#include <fmt/core.h>

#include "planecong/arith.hpp"

namespace planecong {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(fmt::format("{} is not prime", p));
}

void require_nonempty(const ColoredPartMultiset& s) {
  if (s.empty()) throw std::invalid_argument("part multiset is empty");
}

bool has_period(std::span<const Residue> c, std::size_t d) {
  for (std::size_t n = 0; n + d < c.size(); ++n) {
    if (c[n + d] != c[n]) return false;
  }
  return true;
}

}  // namespace

Valuation ell_valuation(std::uint64_t prime, std::uint64_t n) {
  require_prime(prime);
  if (n < 1) throw std::invalid_argument("valuation needs n >= 1");
  Valuation v{0, n};
  while (v.free_part % prime == 0) {
    v.free_part /= prime;
    ++v.exponent;
  }
  return v;
}

std::uint64_t m_of_set(std::uint64_t prime, const ColoredPartMultiset& s) {
  require_nonempty(s);
  std::uint64_t l = 1;
  for (const auto& e : s.entries()) {
    l = checked_mul(l / std::gcd(l, e.part), e.part);
  }
  return ell_valuation(prime, l).free_part;
}

unsigned b_of_set(std::uint64_t prime, const ColoredPartMultiset& s) {
  require_nonempty(s);
  std::uint64_t sum = 0;
  for (const auto& e : s.entries()) {
    const auto v = ell_valuation(prime, e.part);
    sum += checked_mul(e.colors, checked_pow(prime, v.exponent));
  }
  unsigned b = 0;
  for (std::uint64_t power = 1; power < sum; power = checked_mul(power, prime)) ++b;
  return b;
}

PeriodCertificate kwong_period(std::uint64_t prime, unsigned exponent,
                               const ColoredPartMultiset& s) {
  require_prime(prime);
  if (exponent < 1) throw std::invalid_argument("exponent N must be >= 1");
  const auto m = m_of_set(prime, s);
  const auto b = b_of_set(prime, s);
  // exponent + b - 1 >= 0 since exponent >= 1
  const auto period = checked_mul(checked_pow(prime, exponent + b - 1), m);
  return {prime, exponent, s, m, b, period};
}

std::uint64_t f_ell_period(std::uint64_t prime, unsigned exponent) {
  require_prime(prime);
  if (exponent < 1) throw std::invalid_argument("exponent N must be >= 1");
  if (prime == 2) return checked_pow(2, exponent - 1);
  if (prime == 3) return checked_mul(2, checked_pow(3, exponent));
  return checked_mul(checked_pow(prime, exponent + 1), lcm_upto(prime - 1));
}

std::optional<std::size_t> detect_min_period(const ResidueSeries& s,
                                             std::size_t claimed) {
  if (claimed < 1) throw std::invalid_argument("claimed period must be >= 1");
  if (s.order() < 2 * claimed) {
    throw std::invalid_argument(fmt::format(
        "series order {} is shorter than two repetitions of {}", s.order(), claimed));
  }
  const auto c = s.coeffs();
  if (!has_period(c, claimed)) return std::nullopt;
  for (std::size_t d = 1; d < claimed; ++d) {
    if (claimed % d == 0 && has_period(c, d)) return d;
  }
  return claimed;
}

}  // namespace planecong
