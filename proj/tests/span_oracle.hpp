#pragma once

// Test-only linear algebra over F_ell: a congruence
//   sum pl(ell n + a_i) == sum pl(ell n + b_j)
// is the vector e_{a_1} + ... - e_{b_1} - ... in F_ell^ell. A statement is a
// consequence of a set of congruences when its vector lies in their span.

#include <cstdint>
#include <vector>

#include "planecong/congruence.hpp"

namespace planecong::testing {

inline std::vector<std::int64_t> statement_vector(const CongruenceStatement& st) {
  const auto ell = static_cast<std::int64_t>(st.stride);
  std::vector<std::int64_t> v(st.stride, 0);
  for (unsigned a : st.lhs) v[a] = (v[a] + 1) % ell;
  for (unsigned b : st.rhs) v[b] = (v[b] + ell - 1) % ell;
  return v;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline bool in_span(const CongruenceStatement& st,
                    const std::vector<CongruenceStatement>& basis) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& b : basis) rows.push_back(statement_vector(b));
  const auto before = rank_mod(rows, st.stride);
  rows.push_back(statement_vector(st));
  return rank_mod(rows, st.stride) == before;
}

/// The six congruences proved with the finite check, grouped by prime.
inline std::vector<CongruenceStatement> known_congruences(unsigned ell) {
  switch (ell) {
    case 2: return {make_statement(2, 2, {0}, {1})};
    case 3: return {make_statement(3, 3, {2}, {}), make_statement(3, 3, {0}, {1})};
    case 5: return {make_statement(5, 5, {2}, {4}), make_statement(5, 5, {1}, {3})};
    case 7: return {make_statement(7, 7, {2, 3}, {4, 5})};
    default: return {};
  }
}

}  // namespace planecong::testing
