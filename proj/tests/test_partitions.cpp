#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>

#include "planecong/partitions.hpp"

using namespace planecong;

namespace {

constexpr Modulus kLarge = 2147483647;  // exceeds every count at n <= 25

std::vector<Residue> as_vec(const ResidueSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

// The product definition of PL_k, factor by factor.
ResidueSeries pl_by_definition(unsigned k, Modulus m, std::size_t order) {
  auto s = one(m, order);
  for (std::size_t n = 1; n < order; ++n) {
    s = apply_inverse_factor(std::move(s), n, std::min<std::size_t>(k, n));
  }
  return s;
}

}  // namespace

TEST_CASE("ColoredPartMultiset normalizes entries") {
  ColoredPartMultiset s({{3, 1}, {1, 2}, {3, 2}});
  CHECK(s.entries() == std::vector<ColoredPart>{{1, 2}, {3, 3}});
  CHECK(s.total_copies() == 5);
  CHECK_THROWS_AS(ColoredPartMultiset({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredPartMultiset({{2, 0}}), std::invalid_argument);
}

TEST_CASE("s_k_multiset") {
  CHECK(s_k_multiset(1).empty());
  CHECK(s_k_multiset(3).entries() == std::vector<ColoredPart>{{1, 1}, {2, 2}});
  const auto s5 = s_k_multiset(5);
  CHECK(s5.entries() == std::vector<ColoredPart>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  CHECK(s5.total_copies() == 10);
}

TEST_CASE("restricted_series") {
  const ColoredPartMultiset odd({{1, 1}, {3, 1}, {5, 1}});
  CHECK(restricted_series(odd, 1000000, 6)[5] == 3);
  const ColoredPartMultiset colored({{1, 1}, {2, 2}, {5, 1}});
  CHECK(restricted_series(colored, 1000000, 6)[5] == 7);
  CHECK(as_vec(restricted_series(s_k_multiset(3), 3, 7)) ==
        std::vector<Residue>{1, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("f_series") {
  CHECK(f_series(1, 7, 5) == one(7, 5));
  const auto f2 = f_series(2, 2, 50);
  CHECK(std::all_of(f2.coeffs().begin(), f2.coeffs().end(), [](Residue c) { return c == 1; }));
  const auto f3 = f_series(3, 3, 60);
  const std::vector<Residue> block{1, 1, 0, 0, 0, 0};
  for (std::size_t n = 0; n < f3.order(); ++n) CHECK(f3[n] == block[n % 6]);
}

TEST_CASE("pl_series small values") {
  const auto pl3 = pl_series(3, 1000000, 6);
  CHECK(pl3[2] == 3);
  CHECK(pl3[5] == 21);
  const auto pl2 = pl_series(2, 1000000, 9);
  CHECK(pl2[0] == 1);
  CHECK(pl2[1] == 1);
  CHECK(pl2[3] == 5);
  // exact values from an independent big-integer product expansion
  CHECK(as_vec(pl_series(2, kLarge, 10)) ==
        std::vector<Residue>{1, 1, 3, 5, 10, 16, 29, 45, 75, 115});
  CHECK(as_vec(pl_series(5, kLarge, 12)) ==
        std::vector<Residue>{1, 1, 3, 6, 13, 24, 47, 83, 152, 263, 457, 768});
}

TEST_CASE("multipartition_series") {
  CHECK(multipartition_series(1, 1000000, 6)[5] == 7);
  const auto p2 = multipartition_series(2, kLarge, 10);
  CHECK(p2[0] == 1);
  CHECK(p2[2] == 5);
  CHECK(as_vec(p2) == std::vector<Residue>{1, 2, 5, 10, 20, 36, 65, 110, 185, 300});
}

TEST_CASE("beta_series") {
  const auto b3 = beta_series(3, 10);
  CHECK(b3[0] == 1);
  CHECK(b3[1] == 0);
  CHECK(b3[2] == 0);
  CHECK(b3[3] == 1);
  // partitions into parts >= 2: 1,0,1,1,2,2,4,4,7
  CHECK(as_vec(beta_series(2, 9)) == std::vector<Residue>{1, 0, 1, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("PL_k equals F_k times the tail") {
  for (unsigned k = 1; k <= 7; ++k) {
    for (Modulus m : {2u, 3u, 4u, 7u, 1000u}) {
      CHECK(pl_series(k, m, 120) == pl_by_definition(k, m, 120));
      CHECK(apply_plane_tail(f_series(k, m, 120), k) == pl_by_definition(k, m, 120));
    }
  }
}

TEST_CASE("pl_2(n) = p_2(n) - p_2(n-1)") {
  for (Modulus m : {2u, 3u, 5u, 8u, 101u, kLarge}) {
    const auto pl2 = pl_series(2, m, 300);
    const auto p2 = multipartition_series(2, m, 300);
    CHECK(pl2[0] == p2[0]);
    for (std::size_t n = 1; n < 300; ++n) {
      CHECK(pl2[n] == (p2[n] + m - p2[n - 1]) % m);
    }
  }
}

TEST_CASE("enum_plane") {
  for (unsigned k = 1; k <= 8; ++k) CHECK(enum_plane(0, k) == 1);
  CHECK(enum_plane(2, 2) == 3);
  CHECK(enum_plane(5, 3) == 21);
  CHECK(enum_plane(3, 2) == 5);
  CHECK(enum_plane(25, 8) == 627387);
  CHECK_THROWS_AS(enum_plane(26, 2), OracleLimitError);
  CHECK_THROWS_AS(enum_plane(5, 9), OracleLimitError);
  CHECK(enum_plane(26, 2, OracleLimits{30, 8}) > 0);
}

TEST_CASE("listed plane partitions are valid and distinct") {
  for (unsigned n = 0; n <= 9; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      const auto all = list_plane_partitions(n, k);
      CHECK(all.size() == enum_plane(n, k));
      std::set<std::vector<std::vector<unsigned>>> arrays;
      for (const auto& pp : all) {
        CHECK(pp.weight() == n);
        CHECK(pp.layers.size() <= k);
        const auto grid = pp.to_array();
        unsigned total = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          for (std::size_t j = 0; j < grid[i].size(); ++j) {
            total += grid[i][j];
            CHECK(grid[i][j] >= 1);
            CHECK(grid[i][j] <= k);
            if (j + 1 < grid[i].size()) CHECK(grid[i][j] >= grid[i][j + 1]);
            if (i + 1 < grid.size() && j < grid[i + 1].size()) CHECK(grid[i][j] >= grid[i + 1][j]);
          }
          if (i + 1 < grid.size()) CHECK(grid[i].size() >= grid[i + 1].size());
        }
        CHECK(total == n);
        arrays.insert(grid);
      }
      CHECK(arrays.size() == all.size());
    }
  }
}

TEST_CASE("enum_plane stabilizes once k >= n") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned k = n; k <= 8; ++k) CHECK(enum_plane(n, k) == enum_plane(n, n));
  }
}

TEST_CASE("enum_restricted") {
  CHECK(enum_restricted(5, ColoredPartMultiset({{1, 1}, {2, 2}, {5, 1}})) == 7);
  CHECK(enum_restricted(5, ColoredPartMultiset({{1, 1}, {3, 1}, {5, 1}})) == 3);
  CHECK(enum_restricted(0, ColoredPartMultiset({{4, 3}})) == 1);
  CHECK(enum_restricted(0, ColoredPartMultiset{}) == 1);
  CHECK(enum_restricted(4, s_k_multiset(3)) == 6);
  CHECK_THROWS_AS(enum_restricted(40, s_k_multiset(3)), OracleLimitError);
}

TEST_CASE("enum_multi") {
  CHECK(enum_multi(2, 2) == 5);
  CHECK(enum_multi(5, 1) == 7);
  for (unsigned k = 1; k <= 8; ++k) CHECK(enum_multi(0, k) == 1);
  CHECK_THROWS_AS(enum_multi(30, 1), OracleLimitError);
}

TEST_CASE("oracles agree with series at small n") {
  for (Modulus m : {2u, 3u, 4u, 5u, 7u, 8u}) {
    for (unsigned k = 1; k <= 5; ++k) {
      const auto pl = pl_series(k, m, 21);
      const auto multi = multipartition_series(k, m, 21);
      const auto head = f_series(k, m, 21);
      for (unsigned n = 0; n <= 20; ++n) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(enum_plane(n, k) % m == pl[n]);
        CHECK(enum_multi(n, k) % m == multi[n]);
        CHECK(enum_restricted(n, s_k_multiset(k)) % m == head[n]);
      }
    }
  }
}

TEST_CASE("restricted oracle agrees on random multisets") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ColoredPart> entries;
    const int size = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < size; ++i) {
      entries.push_back({std::uniform_int_distribution<std::uint64_t>(1, 7)(rng),
                         std::uniform_int_distribution<std::uint64_t>(1, 3)(rng)});
    }
    const ColoredPartMultiset s(entries);
    const auto series = restricted_series(s, kLarge, 19);
    for (unsigned n = 0; n <= 18; ++n) CHECK(enum_restricted(n, s) == series[n]);
  }
}

TEST_CASE("oracle limit from the environment") {
  ::setenv("PLANECONG_ORACLE_LIMIT", "30", 1);
  CHECK(oracle_limits_from_env().max_n == 30);
  ::setenv("PLANECONG_ORACLE_LIMIT", "abc", 1);
  CHECK_THROWS_AS(oracle_limits_from_env(), std::invalid_argument);
  ::unsetenv("PLANECONG_ORACLE_LIMIT");
  CHECK(oracle_limits_from_env().max_n == 25);
}
