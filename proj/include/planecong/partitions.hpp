#pragma once

// Generating functions for restricted, multi- and plane partitions as
// residue series, and brute-force counting oracles that do not share any
// code path with the series builders.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "planecong/modseries.hpp"

namespace planecong {

struct ColoredPart {
  std::uint64_t part;
  std::uint64_t colors;
  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Multiset of positive parts where `colors` distinguishable copies of
/// `part` are present. Entries are kept sorted by part, one per part value.
class ColoredPartMultiset {
public:
  ColoredPartMultiset() = default;
  /// Duplicate part values are merged by adding their colors.
  explicit ColoredPartMultiset(std::vector<ColoredPart> entries);

  const std::vector<ColoredPart>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Number of copies counted with color multiplicity.
  std::uint64_t total_copies() const noexcept;

  friend bool operator==(const ColoredPartMultiset&,
                         const ColoredPartMultiset&) = default;

private:
  std::vector<ColoredPart> entries_;
};

/// S_k = { i with i colors : 1 <= i < k }, the parts of F_k.
ColoredPartMultiset s_k_multiset(unsigned k);

/// sum_n p(n; S) q^n mod m.
ResidueSeries restricted_series(const ColoredPartMultiset& s, Modulus modulus,
                                std::size_t order);

/// F_k = prod_{n<k} (1 - q^n)^{-n}.
ResidueSeries f_series(unsigned k, Modulus modulus, std::size_t order);

/// Multiplies by the tail prod_{n>=k} (1 - q^n)^{-k} of PL_k.
ResidueSeries apply_plane_tail(ResidueSeries s, unsigned k);

/// PL_k = prod_n (1 - q^n)^{-min(k, n)}, the k-component plane partitions.
ResidueSeries pl_series(unsigned k, Modulus modulus, std::size_t order);

/// prod_n (1 - q^n)^{-k}, the k-component multipartitions.
ResidueSeries multipartition_series(unsigned k, Modulus modulus,
                                    std::size_t order);

/// beta_m, where prod_{j>=ell} 1/(1 - q^{j ell}) = sum_m beta_m q^{m ell},
/// reduced mod ell. beta_m counts partitions of m into parts >= ell.
ResidueSeries beta_series(unsigned ell, std::size_t order_in_multiples);

// ---------------------------------------------------------------------------
// Enumeration oracles

struct OracleLimits {
  unsigned max_n = 25;
  unsigned max_k = 8;
};

/// Defaults, with max_n overridden by PLANECONG_ORACLE_LIMIT when set.
OracleLimits oracle_limits_from_env();

class OracleLimitError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

using Partition = std::vector<unsigned>;

/// A plane partition stored as its layers: layer t holds the cells whose
/// entry is >= t, so successive layers are nested Ferrers diagrams.
struct PlanePartition {
  std::vector<Partition> layers;

  std::uint64_t weight() const;
  /// Entry array n_{i,j}; row i has as many entries as layer 1 has in row i.
  std::vector<std::vector<unsigned>> to_array() const;
};

/// Every plane partition of n with at most k layers.
std::vector<PlanePartition> list_plane_partitions(unsigned n, unsigned k,
                                                  OracleLimits limits = {});

/// pl_k(n) by walking chains of nested partitions.
std::uint64_t enum_plane(unsigned n, unsigned k, OracleLimits limits = {});

/// p(n; S) by choosing a multiplicity for every colored copy.
std::uint64_t enum_restricted(unsigned n, const ColoredPartMultiset& s,
                              OracleLimits limits = {});

/// p_k(n) by distributing weight across k explicitly enumerated partitions.
std::uint64_t enum_multi(unsigned n, unsigned k, OracleLimits limits = {});

}  // namespace planecong
