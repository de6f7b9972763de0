#pragma once

// Small exact integer helpers shared by the period and congruence code.

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace planecong {

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in period computation");
  }
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// lcm(1, 2, ..., n); 1 for n = 0.
inline std::uint64_t lcm_upto(std::uint64_t n) {
  std::uint64_t l = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    l = checked_mul(l / std::gcd(l, i), i);
  }
  return l;
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t mod) noexcept {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % mod);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
    exp >>= 1;
  }
  return r;
}

}  // namespace planecong
