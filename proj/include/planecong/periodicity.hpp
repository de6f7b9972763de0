#pragma once

// Minimal periods of restricted-partition series modulo prime powers.
//
// For a prime ell and a finite multiset S, the series sum p(n; S) q^n is
// purely periodic modulo ell^N with minimal period ell^{N + b(S) - 1} m(S),
// where m(S) is the ell-free part of lcm(S) and b(S) is the least b with
// ell^b >= sum_{s in S} ell^{ord_ell(s)} (copies counted with color).

#include <cstdint>
#include <optional>

#include "planecong/modseries.hpp"
#include "planecong/partitions.hpp"

namespace planecong {

struct Valuation {
  unsigned exponent;
  std::uint64_t free_part;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

struct PeriodCertificate {
  std::uint64_t prime;
  unsigned exponent;  // N in the modulus prime^N
  ColoredPartMultiset parts;
  std::uint64_t m_of_s;
  unsigned b_of_s;
  std::uint64_t period;
  friend bool operator==(const PeriodCertificate&, const PeriodCertificate&) = default;
};

/// n = prime^exponent * free_part with prime not dividing free_part.
Valuation ell_valuation(std::uint64_t prime, std::uint64_t n);

std::uint64_t m_of_set(std::uint64_t prime, const ColoredPartMultiset& s);
unsigned b_of_set(std::uint64_t prime, const ColoredPartMultiset& s);

PeriodCertificate kwong_period(std::uint64_t prime, unsigned exponent,
                               const ColoredPartMultiset& s);

/// Closed form of the minimal period of F_ell modulo ell^N.
std::uint64_t f_ell_period(std::uint64_t prime, unsigned exponent);

/// Checks that `claimed` is a period of s over its whole window, then
/// returns the least divisor of `claimed` that is also one. Returns
/// nullopt if `claimed` is not a period. Throws std::invalid_argument when
/// the window is shorter than two full repetitions.
std::optional<std::size_t> detect_min_period(const ResidueSeries& s,
                                             std::size_t claimed);

}  // namespace planecong
