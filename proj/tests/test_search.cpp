#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "planecong/json.hpp"
#include "planecong/search.hpp"
#include "span_oracle.hpp"

using namespace planecong;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<CongruenceStatement> statements_of(const std::vector<VerificationReport>& rs) {
  std::set<CongruenceStatement> out;
  for (const auto& r : rs) out.insert(r.statement);
  return out;
}

}  // namespace

TEST_CASE("candidate statements") {
  SearchConfig cfg;
  cfg.prime = 3;
  const auto c = candidate_statements(cfg);
  CHECK(c.size() == 6);
  CHECK(std::is_sorted(c.begin(), c.end()));
  for (const auto& st : c) CHECK(canonicalize(st) == st);
  cfg.prime = 4;
  CHECK_THROWS_AS(candidate_statements(cfg), std::invalid_argument);
  cfg.prime = 3;
  cfg.max_terms_per_side = 0;
  CHECK_THROWS_AS(candidate_statements(cfg), std::invalid_argument);
}

TEST_CASE("search for ell = 3 with single terms") {
  SearchConfig cfg;
  cfg.prime = 3;
  const auto found = statements_of(enumerate_and_verify(cfg));
  CHECK(found == std::set<CongruenceStatement>{make_statement(3, 3, {0}, {1}),
                                               make_statement(3, 3, {2}, {})});
}

TEST_CASE("search for ell = 5 with single terms") {
  SearchConfig cfg;
  cfg.prime = 5;
  const auto found = statements_of(enumerate_and_verify(cfg));
  CHECK(found == std::set<CongruenceStatement>{make_statement(5, 5, {1}, {3}),
                                               make_statement(5, 5, {2}, {4})});
}

TEST_CASE("search for ell = 7 with pairs") {
  SearchConfig cfg;
  cfg.prime = 7;
  cfg.max_terms_per_side = 2;
  cfg.worker_count = 3;
  const auto reports = enumerate_and_verify(cfg);
  const auto found = statements_of(reports);
  CHECK(found.count(make_statement(7, 7, {2, 3}, {4, 5})) == 1);
  CHECK(found.size() == reports.size());
  SeriesCache cache;
  for (const auto& r : reports) {
    CHECK(r.verdict == Verdict::ProvedForAllN);
    CHECK(alpha_check(r.statement, &cache).verdict == Verdict::ProvedForAllN);
    CHECK(testing::in_span(r.statement, testing::known_congruences(7)));
  }
}

TEST_CASE("search output does not depend on the worker count") {
  for (unsigned ell : {3u, 5u}) {
    std::string reference;
    for (unsigned workers : {1u, 2u, 5u}) {
      SearchConfig cfg;
      cfg.prime = ell;
      cfg.max_terms_per_side = 2;
      cfg.worker_count = workers;
      const auto dump = nlohmann::json(enumerate_and_verify(cfg)).dump();
      if (reference.empty()) reference = dump;
      CHECK(dump == reference);
    }
  }
}

TEST_CASE("zero_scan") {
  SearchConfig cfg;
  cfg.scan_prime_limit = 7;
  const auto rows = zero_scan(cfg);
  CHECK(rows.size() == 2 + 3 + 5 + 7);
  auto find = [&](unsigned ell, unsigned alpha) {
    for (const auto& r : rows) {
      if (r.prime == ell && r.alpha == alpha) return r;
    }
    FAIL("row missing");
    return rows.front();
  };
  CHECK(find(5, 0).witness == 0u);
  CHECK_FALSE(find(3, 2).witness.has_value());
  CHECK(find(3, 2).horizon == 30);
  CHECK(find(7, 2).witness.has_value());
  for (const auto& r : rows) {
    if (r.prime == 3 && r.alpha == 2) continue;
    CHECK(r.witness.has_value());
  }
  cfg.scan_horizon = 1;
  for (const auto& r : zero_scan(cfg)) {
    CHECK(r.horizon == 1);
    CHECK((r.witness.has_value() != (r.prime == 3 && r.alpha == 2)));
  }
}

TEST_CASE("zero_scan matches the golden table") {
  SearchConfig cfg;
  cfg.scan_prime_limit = 31;
  cfg.worker_count = 2;
  CHECK(render_scan_table(zero_scan(cfg)) ==
        read_file(std::string(PLANECONG_GOLDEN_DIR) + "/zero_scan_31.txt"));
}

TEST_CASE("scan rows round-trip through JSON") {
  const std::vector<ScanRow> rows{{3, 2, 30, std::nullopt}, {5, 0, 50, 0}};
  const nlohmann::json j = rows;
  CHECK(j.get<std::vector<ScanRow>>() == rows);
  CHECK(j[0]["witness"].is_null());
}
