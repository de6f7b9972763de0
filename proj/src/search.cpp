#include "planecong/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <fmt/core.h>

#include "planecong/arith.hpp"
#include "planecong/json.hpp"
#include "planecong/partitions.hpp"

namespace planecong {

namespace {

// Calls f(i) for i in [0, count) on up to `workers` threads.
template <typename F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto drain = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
  }
  if (error) std::rethrow_exception(error);
}

std::vector<std::vector<unsigned>> residue_subsets(unsigned ell, unsigned max_size) {
  std::vector<std::vector<unsigned>> out{{}};
  std::vector<unsigned> current;
  auto extend = [&](auto&& self, unsigned start) -> void {
    for (unsigned r = start; r < ell; ++r) {
      current.push_back(r);
      out.push_back(current);
      if (current.size() < max_size) self(self, r + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace

std::vector<CongruenceStatement> candidate_statements(const SearchConfig& cfg) {
  if (!is_prime(cfg.prime)) {
    throw std::invalid_argument(fmt::format("{} is not prime", cfg.prime));
  }
  if (cfg.max_terms_per_side < 1) {
    throw std::invalid_argument("max terms per side must be >= 1");
  }
  const auto sides = residue_subsets(cfg.prime, cfg.max_terms_per_side);
  std::set<CongruenceStatement> unique;
  for (const auto& lhs : sides) {
    for (const auto& rhs : sides) {
      auto st = canonicalize(make_statement(cfg.prime, cfg.prime, lhs, rhs));
      if (st.lhs.empty() && st.rhs.empty()) continue;
      unique.insert(std::move(st));
    }
  }
  return {unique.begin(), unique.end()};
}

std::vector<VerificationReport> enumerate_and_verify(const SearchConfig& cfg) {
  const auto candidates = candidate_statements(cfg);
  SeriesCache cache;
  std::vector<std::optional<VerificationReport>> slots(candidates.size());
  parallel_for(candidates.size(), cfg.worker_count, [&](std::size_t i) {
    auto report = verify_bounded(candidates[i], &cache);
    if (report.verdict == Verdict::ProvedForAllN) slots[i] = std::move(report);
  });
  std::vector<VerificationReport> proved;
  for (auto& s : slots) {
    if (s) proved.push_back(std::move(*s));
  }
  return proved;
}

std::vector<ScanRow> zero_scan(const SearchConfig& cfg) {
  if (cfg.scan_prime_limit < 2) throw std::invalid_argument("prime limit must be >= 2");
  if (cfg.scan_horizon && *cfg.scan_horizon < 1) {
    throw std::invalid_argument("scan horizon must be >= 1");
  }
  std::vector<unsigned> primes;
  for (unsigned p = 2; p <= cfg.scan_prime_limit; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  // largest primes first so the longest builds start early
  std::reverse(primes.begin(), primes.end());
  std::vector<std::vector<ScanRow>> per_prime(primes.size());
  parallel_for(primes.size(), cfg.worker_count, [&](std::size_t i) {
    const unsigned ell = primes[i];
    const std::uint64_t horizon = cfg.scan_horizon.value_or(10ull * ell);
    const auto series = pl_series(ell, ell, ell * horizon);
    for (unsigned alpha = 0; alpha < ell; ++alpha) {
      ScanRow row{ell, alpha, horizon, std::nullopt};
      for (std::uint64_t n = 0; n < horizon; ++n) {
        if (series[ell * n + alpha] != 0) {
          row.witness = n;
          break;
        }
      }
      per_prime[i].push_back(row);
    }
  });
  std::vector<ScanRow> rows;
  for (const auto& block : per_prime) rows.insert(rows.end(), block.begin(), block.end());
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.prime, a.alpha) < std::tie(b.prime, b.alpha);
  });
  return rows;
}

std::string render_scan_table(const std::vector<ScanRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += fmt::format("{} {} {} {}\n", r.prime, r.alpha, r.horizon,
                       r.witness ? std::to_string(*r.witness) : std::string("none"));
  }
  return out;
}

nlohmann::json config_json(const SearchConfig& cfg) {
  nlohmann::json j{{"prime", cfg.prime},
                   {"max_terms_per_side", cfg.max_terms_per_side},
                   {"scan_prime_limit", cfg.scan_prime_limit},
                   {"worker_count", cfg.worker_count}};
  j["scan_horizon"] = cfg.scan_horizon ? nlohmann::json(*cfg.scan_horizon) : nlohmann::json();
  return j;
}

void to_json(nlohmann::json& j, const ScanRow& r) {
  j = nlohmann::json{{"prime", r.prime}, {"alpha", r.alpha}, {"horizon", r.horizon}};
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json();
}

void from_json(const nlohmann::json& j, ScanRow& r) {
  j.at("prime").get_to(r.prime);
  j.at("alpha").get_to(r.alpha);
  j.at("horizon").get_to(r.horizon);
  r.witness.reset();
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::uint64_t>();
}

}  // namespace planecong
