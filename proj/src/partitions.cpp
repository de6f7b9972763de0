#include "planecong/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <string_view>

#include <fmt/core.h>

namespace planecong {

ColoredPartMultiset::ColoredPartMultiset(std::vector<ColoredPart> entries) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& e : entries) {
    if (e.part == 0 || e.colors == 0) {
      throw std::invalid_argument(fmt::format(
          "parts and colors must be positive, got part {} with {} colors",
          e.part, e.colors));
    }
    merged[e.part] += e.colors;
  }
  for (const auto& [part, colors] : merged) entries_.push_back({part, colors});
}

std::uint64_t ColoredPartMultiset::total_copies() const noexcept {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.colors;
  return total;
}

ColoredPartMultiset s_k_multiset(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<ColoredPart> entries;
  for (unsigned i = 1; i < k; ++i) entries.push_back({i, i});
  return ColoredPartMultiset(std::move(entries));
}

ResidueSeries restricted_series(const ColoredPartMultiset& s, Modulus modulus,
                                std::size_t order) {
  auto series = one(modulus, order);
  for (const auto& e : s.entries()) {
    if (e.part >= order) break;
    series = apply_inverse_factor(std::move(series), e.part,
                                  static_cast<unsigned>(e.colors));
  }
  return series;
}

ResidueSeries f_series(unsigned k, Modulus modulus, std::size_t order) {
  return restricted_series(s_k_multiset(k), modulus, order);
}

ResidueSeries apply_plane_tail(ResidueSeries s, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  for (std::size_t n = k; n < s.order(); ++n) {
    s = apply_inverse_factor(std::move(s), n, k);
  }
  return s;
}

ResidueSeries pl_series(unsigned k, Modulus modulus, std::size_t order) {
  return apply_plane_tail(f_series(k, modulus, order), k);
}

ResidueSeries multipartition_series(unsigned k, Modulus modulus,
                                    std::size_t order) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto s = one(modulus, order);
  for (std::size_t n = 1; n < order; ++n) {
    s = apply_inverse_factor(std::move(s), n, k);
  }
  return s;
}

ResidueSeries beta_series(unsigned ell, std::size_t order_in_multiples) {
  if (ell < 2) throw std::invalid_argument("beta series needs a prime >= 2");
  auto s = one(ell, order_in_multiples);
  for (std::size_t j = ell; j < order_in_multiples; ++j) {
    s = apply_inverse_factor(std::move(s), j, 1);
  }
  return s;
}

// ---------------------------------------------------------------------------

OracleLimits oracle_limits_from_env() {
  OracleLimits limits;
  if (const char* env = std::getenv("PLANECONG_ORACLE_LIMIT")) {
    std::string_view text(env);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw std::invalid_argument(
          fmt::format("PLANECONG_ORACLE_LIMIT is not a number: '{}'", text));
    }
    limits.max_n = value;
  }
  return limits;
}

namespace {

void check_limits(unsigned n, unsigned k, const OracleLimits& limits) {
  if (n > limits.max_n) {
    throw OracleLimitError(
        fmt::format("n = {} exceeds the oracle limit {}", n, limits.max_n));
  }
  if (k > limits.max_k) {
    throw OracleLimitError(
        fmt::format("k = {} exceeds the oracle limit {}", k, limits.max_k));
  }
}

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("oracle count overflowed 64 bits");
  }
  return r;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("oracle count overflowed 64 bits");
  }
  return r;
}

// Calls visit(lambda, |lambda|) for every nonempty partition lambda that fits
// inside `outer` (row i of lambda <= outer[i]) with |lambda| <= budget.
void for_each_subpartition(const Partition& outer, unsigned budget,
                           const std::function<void(const Partition&, unsigned)>& visit) {
  Partition rows;
  std::function<void(std::size_t, unsigned, unsigned)> grow =
      [&](std::size_t row, unsigned cap, unsigned used) {
        if (!rows.empty()) visit(rows, used);
        if (row >= outer.size()) return;
        const unsigned limit = std::min({cap, outer[row], budget - used});
        for (unsigned len = 1; len <= limit; ++len) {
          rows.push_back(len);
          grow(row + 1, len, used + len);
          rows.pop_back();
        }
      };
  grow(0, budget, 0);
}

Partition unbounded_outer(unsigned n) { return Partition(n, n); }

template <typename OnComplete>
void walk_chains(std::vector<Partition>& chain, const Partition& outer,
                 unsigned remaining, unsigned layers_left, OnComplete&& done) {
  if (remaining == 0) {
    done(chain);
    return;
  }
  if (layers_left == 0) return;
  for_each_subpartition(outer, remaining, [&](const Partition& layer, unsigned w) {
    chain.push_back(layer);
    walk_chains(chain, layer, remaining - w, layers_left - 1, done);
    chain.pop_back();
  });
}

}  // namespace

std::uint64_t PlanePartition::weight() const {
  std::uint64_t w = 0;
  for (const auto& layer : layers) {
    for (unsigned row : layer) w += row;
  }
  return w;
}

std::vector<std::vector<unsigned>> PlanePartition::to_array() const {
  if (layers.empty()) return {};
  std::vector<std::vector<unsigned>> grid;
  for (unsigned len : layers.front()) grid.emplace_back(len, 0u);
  for (const auto& layer : layers) {
    for (std::size_t i = 0; i < layer.size() && i < grid.size(); ++i) {
      for (unsigned j = 0; j < layer[i] && j < grid[i].size(); ++j) ++grid[i][j];
    }
  }
  return grid;
}

std::vector<PlanePartition> list_plane_partitions(unsigned n, unsigned k,
                                                  OracleLimits limits) {
  check_limits(n, k, limits);
  std::vector<PlanePartition> out;
  std::vector<Partition> chain;
  walk_chains(chain, unbounded_outer(n), n, k,
              [&](const std::vector<Partition>& c) { out.push_back({c}); });
  return out;
}

std::uint64_t enum_plane(unsigned n, unsigned k, OracleLimits limits) {
  check_limits(n, k, limits);
  std::uint64_t count = 0;
  std::vector<Partition> chain;
  walk_chains(chain, unbounded_outer(n), n, k,
              [&](const std::vector<Partition>&) { count = add_checked(count, 1); });
  return count;
}

std::uint64_t enum_restricted(unsigned n, const ColoredPartMultiset& s,
                              OracleLimits limits) {
  check_limits(n, 0, limits);
  std::vector<std::uint64_t> copies;
  for (const auto& e : s.entries()) {
    if (e.part > n) continue;
    copies.insert(copies.end(), e.colors, e.part);
  }
  std::function<std::uint64_t(std::size_t, std::uint64_t)> count =
      [&](std::size_t idx, std::uint64_t remaining) -> std::uint64_t {
    if (idx == copies.size()) return remaining == 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint64_t used = 0; used <= remaining; used += copies[idx]) {
      total = add_checked(total, count(idx + 1, remaining - used));
    }
    return total;
  };
  return count(0, n);
}

std::uint64_t enum_multi(unsigned n, unsigned k, OracleLimits limits) {
  check_limits(n, k, limits);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  // by_weight[w] = number of ordinary partitions of w, found by listing them
  std::vector<std::uint64_t> by_weight(n + 1, 0);
  by_weight[0] = 1;
  for_each_subpartition(unbounded_outer(n), n, [&](const Partition&, unsigned w) {
    by_weight[w] = add_checked(by_weight[w], 1);
  });
  std::function<std::uint64_t(unsigned, unsigned)> tuples =
      [&](unsigned remaining, unsigned components) -> std::uint64_t {
    if (components == 1) return by_weight[remaining];
    std::uint64_t total = 0;
    for (unsigned w = 0; w <= remaining; ++w) {
      total = add_checked(
          total, mul_checked(by_weight[w], tuples(remaining - w, components - 1)));
    }
    return total;
  };
  return tuples(n, k);
}

}  // namespace planecong
