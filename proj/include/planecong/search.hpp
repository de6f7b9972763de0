#pragma once

// Systematic search over the congruence family decided by the finite-check
// theorem, and a refutation scan for "pl_ell(ell n + alpha) == 0" forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "planecong/congruence.hpp"

namespace planecong {

struct SearchConfig {
  unsigned prime = 3;
  unsigned max_terms_per_side = 1;
  unsigned scan_prime_limit = 31;
  /// Values of n examined per (ell, alpha); unset means 10 * ell.
  std::optional<std::uint64_t> scan_horizon;
  unsigned worker_count = 1;
};

/// Every canonical, nontrivial statement whose sides are sets of at most
/// max_terms_per_side distinct residues mod cfg.prime (rhs may be empty),
/// in sorted order.
std::vector<CongruenceStatement> candidate_statements(const SearchConfig& cfg);

/// Runs verify_bounded on every candidate and keeps the proved ones.
/// Output order is the sorted canonical order for any worker_count.
std::vector<VerificationReport> enumerate_and_verify(const SearchConfig& cfg);

struct ScanRow {
  unsigned prime;
  unsigned alpha;
  std::uint64_t horizon;
  /// Least n < horizon with pl_ell(ell n + alpha) != 0 mod ell.
  std::optional<std::uint64_t> witness;
  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

std::vector<ScanRow> zero_scan(const SearchConfig& cfg);

/// One line per row: "ell alpha horizon witness|none".
std::string render_scan_table(const std::vector<ScanRow>& rows);

nlohmann::json config_json(const SearchConfig& cfg);
void to_json(nlohmann::json& j, const ScanRow& r);
void from_json(const nlohmann::json& j, ScanRow& r);

}  // namespace planecong
