#include "planecong/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/format.h>

#include "planecong/arith.hpp"
#include "planecong/congruence.hpp"
#include "planecong/json.hpp"
#include "planecong/periodicity.hpp"
#include "planecong/search.hpp"

namespace planecong::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kError = 2;

unsigned parse_unsigned(std::string_view token, const std::string& flag) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw UsageError(fmt::format("{}: '{}' is not a nonnegative decimal integer", flag, token));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<unsigned> parse_residues(const std::string& text, const std::string& flag) {
  if (text == "0-terms") return {};
  std::vector<unsigned> out;
  for (auto token : split(text, ',')) out.push_back(parse_unsigned(token, flag));
  return out;
}

ColoredPartMultiset parse_parts(const std::string& text, const std::string& flag) {
  std::vector<ColoredPart> entries;
  for (auto token : split(text, ',')) {
    const auto fields = split(token, ':');
    if (fields.size() > 2) {
      throw UsageError(fmt::format("{}: '{}' is not part[:colors]", flag, token));
    }
    const unsigned part = parse_unsigned(fields[0], flag);
    const unsigned colors = fields.size() == 2 ? parse_unsigned(fields[1], flag) : 1;
    if (part == 0 || colors == 0) {
      throw UsageError(fmt::format("{}: parts and colors must be positive", flag));
    }
    entries.push_back({part, colors});
  }
  return ColoredPartMultiset(std::move(entries));
}

Command parse(const std::vector<std::string>& args) {
  CLI::App app{"Plane-partition congruence toolkit", "planecong"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  SeriesCmd series;
  std::string series_parts;
  auto* series_app = app.add_subcommand("series", "Print generating-function coefficients");
  series_app->add_option("--kind", series.kind, "plane | head | multi | restricted | beta")
      ->required()
      ->check(CLI::IsMember({"plane", "head", "multi", "restricted", "beta"}));
  series_app->add_option("--k", series.k, "Components (or the prime for beta)");
  series_app->add_option("--mod", series.modulus, "Coefficient modulus");
  series_app->add_option("--order", series.order, "Number of coefficients")->required();
  series_app->add_option("--parts", series_parts, "Parts for restricted, e.g. 1:1,2:2");

  PeriodCmd period;
  std::string period_parts;
  auto* period_app = app.add_subcommand("period", "Minimal period certificate");
  period_app->add_option("--prime", period.prime, "The prime ell")->required();
  period_app->add_option("--exp", period.exponent, "Exponent N of the modulus ell^N");
  period_app->add_option("--parts", period_parts, "Multiset S (default S_ell)");
  period_app->add_flag("--check", period.check, "Confirm minimality on a 4x window");

  VerifyCmd verify;
  std::string lhs, rhs;
  auto* verify_app = app.add_subcommand("verify", "Verify a congruence");
  verify_app->add_option("--k", verify.k, "Components")->required();
  verify_app->add_option("--mod", verify.modulus, "Modulus")->required();
  verify_app->add_option("--stride", verify.stride, "Progression step (default: --mod)");
  verify_app->add_option("--lhs", lhs, "Left residues, comma separated")->required();
  verify_app->add_option("--rhs", rhs, "Right residues, or 0-terms")->required();
  verify_app->add_option("--method", verify.method, "auto | theorem-bound | alpha-beta | empirical")
      ->check(CLI::IsMember({"auto", "theorem-bound", "alpha-beta", "empirical"}));
  verify_app->add_option("--horizon", verify.horizon, "Values of n for the empirical check");

  WitnessCmd witness;
  auto* witness_app = app.add_subcommand("witness", "Replay a prime-power or mod-5 proof");
  witness_app->add_option("--case", witness.which, "mod4-triple | mod4-odd | mod8-triple | pl2-mod5")
      ->required()
      ->check(CLI::IsMember({"mod4-triple", "mod4-odd", "mod8-triple", "pl2-mod5"}));
  witness_app->add_option("--horizon", witness.horizon, "Values of n checked");

  SearchCmd search;
  auto* search_app = app.add_subcommand("search", "Find congruences provable by the bound");
  search_app->add_option("--prime", search.prime, "The prime ell")->required();
  search_app->add_option("--max-terms", search.max_terms, "Residues per side");
  search_app->add_option("--workers", search.workers, "Worker threads");

  ScanCmd scan;
  std::uint64_t scan_horizon = 0;
  auto* scan_app = app.add_subcommand("scan", "Look for n with pl_ell(ell n + alpha) != 0");
  scan_app->add_option("--prime-limit", scan.prime_limit, "Largest prime scanned");
  auto* scan_horizon_opt =
      scan_app->add_option("--horizon", scan_horizon, "Values of n per class (default 10 ell)");
  scan_app->add_option("--workers", scan.workers, "Worker threads");

  OracleCmd oracle;
  std::string oracle_parts;
  bool plane = false, restricted = false, multi = false;
  auto* oracle_app = app.add_subcommand("oracle", "Exact counts by brute-force enumeration");
  auto* plane_flag = oracle_app->add_flag("--plane", plane, "Count plane partitions");
  auto* restricted_flag = oracle_app->add_flag("--restricted", restricted, "Count p(n; S)");
  auto* multi_flag = oracle_app->add_flag("--multi", multi, "Count multipartitions");
  plane_flag->excludes(restricted_flag)->excludes(multi_flag);
  restricted_flag->excludes(multi_flag);
  oracle_app->add_option("--n", oracle.n, "Weight")->required();
  oracle_app->add_option("--k", oracle.k, "Components");
  oracle_app->add_option("--parts", oracle_parts, "Multiset S for --restricted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    const auto used = app.get_subcommands();
    throw UsageError(used.empty() ? app.help() : used.front()->help(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  cmd.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (*series_app) {
    if (series.kind == "restricted") {
      if (series_parts.empty()) throw UsageError("--parts is required for --kind restricted");
      series.parts = parse_parts(series_parts, "--parts");
    }
    if (series.kind != "beta" && series.modulus < 2) {
      throw UsageError("--mod is required and must be >= 2");
    }
    if (series.order < 1) throw UsageError("--order must be >= 1");
    cmd.action = std::move(series);
  } else if (*period_app) {
    if (!period_parts.empty()) period.parts = parse_parts(period_parts, "--parts");
    cmd.action = std::move(period);
  } else if (*verify_app) {
    verify.lhs = parse_residues(lhs, "--lhs");
    verify.rhs = parse_residues(rhs, "--rhs");
    if (verify.lhs.empty()) throw UsageError("--lhs needs at least one residue");
    if (verify.stride == 0) verify.stride = verify.modulus;
    cmd.action = std::move(verify);
  } else if (*witness_app) {
    cmd.action = std::move(witness);
  } else if (*search_app) {
    cmd.action = search;
  } else if (*scan_app) {
    if (scan_horizon_opt->count() > 0) scan.horizon = scan_horizon;
    cmd.action = scan;
  } else {
    if (!(plane || restricted || multi)) {
      throw UsageError("oracle needs one of --plane, --restricted, --multi");
    }
    oracle.kind = plane ? "plane" : restricted ? "restricted" : "multi";
    if (restricted) {
      if (oracle_parts.empty()) throw UsageError("--parts is required for --restricted");
      oracle.parts = parse_parts(oracle_parts, "--parts");
    }
    cmd.action = std::move(oracle);
  }
  return cmd;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string describe(const PeriodCertificate& c) {
  return fmt::format("prime {}, N {}, m(S) {}, b(S) {}, period {}", c.prime, c.exponent,
                     c.m_of_s, c.b_of_s, c.period);
}

void write_text(std::ostream& out, const VerificationReport& r) {
  out << "statement: " << to_string(r.statement) << '\n'
      << "method: " << to_string(r.method) << '\n'
      << "bound: " << r.bound << '\n'
      << "checks: " << r.checks << '\n'
      << "verdict: " << to_string(r.verdict) << '\n';
  if (r.counterexample) {
    out << fmt::format("counterexample: n {}, lhs {}, rhs {}\n", r.counterexample->n,
                       r.counterexample->lhs_value, r.counterexample->rhs_value);
  }
  if (r.certificate) out << "certificate: " << describe(*r.certificate) << '\n';
}

std::string_view flag(bool b) { return b ? "true" : "false"; }

int exit_for(bool holds) { return holds ? kOk : kRefuted; }

int run_series(const SeriesCmd& c, OutputFormat format, std::ostream& out) {
  const auto s = [&] {
    if (c.kind == "plane") return pl_series(c.k, c.modulus, c.order);
    if (c.kind == "head") return f_series(c.k, c.modulus, c.order);
    if (c.kind == "multi") return multipartition_series(c.k, c.modulus, c.order);
    if (c.kind == "restricted") return restricted_series(c.parts, c.modulus, c.order);
    return beta_series(c.k, c.order);
  }();
  if (format == OutputFormat::Json) {
    json j{{"kind", c.kind}, {"k", c.k}, {"modulus", s.modulus()}, {"order", s.order()},
           {"coeffs", std::vector<Residue>(s.coeffs().begin(), s.coeffs().end())}};
    if (c.kind == "restricted") j["parts"] = c.parts;
    write_json(out, j);
  } else {
    out << fmt::format("{}\n", fmt::join(s.coeffs(), " "));
  }
  return kOk;
}

int run_period(const PeriodCmd& c, OutputFormat format, std::ostream& out) {
  const auto parts = c.parts.value_or(s_k_multiset(c.prime));
  const auto cert = kwong_period(c.prime, c.exponent, parts);
  std::optional<std::uint64_t> closed_form;
  if (!c.parts) closed_form = f_ell_period(c.prime, c.exponent);
  std::optional<std::size_t> detected;
  bool ok = !closed_form || *closed_form == cert.period;
  if (c.check) {
    const auto modulus = static_cast<Modulus>(checked_pow(c.prime, c.exponent));
    const auto s = restricted_series(parts, modulus, 4 * cert.period);
    detected = detect_min_period(s, cert.period);
    ok = ok && detected == cert.period;
  }
  if (format == OutputFormat::Json) {
    json j{{"certificate", cert}};
    if (closed_form) j["closed_form"] = *closed_form;
    if (c.check) j["detected"] = detected ? json(*detected) : json();
    j["consistent"] = ok;
    write_json(out, j);
  } else {
    out << cert.period << '\n';
    if (c.check) {
      out << "detected: " << (detected ? std::to_string(*detected) : "not a period") << '\n';
    }
  }
  return exit_for(ok);
}

int run_verify(const VerifyCmd& c, OutputFormat format, std::ostream& out, std::ostream& err) {
  CongruenceStatement raw{c.k, c.modulus, c.stride, c.lhs, c.rhs};
  if (!residues_reduced(raw)) {
    err << fmt::format("warning: residues reduced mod {}; pl(stride n + a) with a >= stride "
                       "is the same progression shifted in n\n",
                       c.stride);
  }
  const auto st = canonicalize(raw);
  const bool in_scope = st.k == st.modulus && st.stride == st.modulus && is_prime(st.modulus);
  VerificationReport report;
  if (c.method == "theorem-bound" || (c.method == "auto" && in_scope)) {
    report = verify_bounded(st);
  } else if (c.method == "alpha-beta") {
    report = alpha_check(st);
  } else {
    report = empirical_check(st, c.horizon);
  }
  if (format == OutputFormat::Json) {
    write_json(out, report);
  } else {
    write_text(out, report);
  }
  return exit_for(report.holds());
}

int run_witness(const WitnessCmd& c, OutputFormat format, std::ostream& out) {
  if (c.which == "pl2-mod5") {
    const auto r = pl2_mod5_via_multipartition(c.horizon);
    if (format == OutputFormat::Json) {
      write_json(out, r);
    } else {
      out << "p_2(5n+a) == 0 (mod 5), a in {2,3,4}: " << flag(r.multipartition_vanishing) << '\n'
          << "pl_2(n) == p_2(n) - p_2(n-1): " << flag(r.difference_identity) << '\n';
      for (const auto& v : r.congruences) write_text(out, v);
    }
    return exit_for(r.holds());
  }
  const auto r = prime_power_witness(parse_witness_case(c.which), c.horizon);
  if (format == OutputFormat::Json) {
    write_json(out, r);
  } else {
    out << "case: " << to_string(r.which) << '\n'
        << "polynomial: " << fmt::format("{}", fmt::join(r.polynomial, " ")) << '\n';
    for (const auto& [e, coeff] : r.inspected) out << fmt::format("  q^{}: {}\n", e, coeff);
    out << "polynomial claim: " << flag(r.polynomial_claim) << '\n'
        << "series identity to q^" << r.identity_horizon << ": " << flag(r.identity_claim) << '\n';
    for (const auto& v : r.congruences) write_text(out, v);
  }
  return exit_for(r.holds());
}

template <typename Clock = std::chrono::steady_clock>
std::int64_t millis_since(typename Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int run_search(const SearchCmd& c, OutputFormat format, std::ostream& out) {
  SearchConfig cfg;
  cfg.prime = c.prime;
  cfg.max_terms_per_side = c.max_terms;
  cfg.worker_count = c.workers;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = enumerate_and_verify(cfg);
  if (format == OutputFormat::Json) {
    write_json(out, json{{"config", config_json(cfg)},
                         {"results", reports},
                         {"elapsed_ms", millis_since(start)}});
  } else {
    for (const auto& r : reports) {
      out << to_string(r.statement) << "  [" << to_string(r.verdict) << ", bound "
          << r.bound << "]\n";
    }
  }
  return kOk;
}

int run_scan(const ScanCmd& c, OutputFormat format, std::ostream& out) {
  SearchConfig cfg;
  cfg.scan_prime_limit = c.prime_limit;
  cfg.scan_horizon = c.horizon;
  cfg.worker_count = c.workers;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = zero_scan(cfg);
  if (format == OutputFormat::Json) {
    write_json(out, json{{"config", config_json(cfg)},
                         {"results", rows},
                         {"elapsed_ms", millis_since(start)}});
  } else {
    out << "prime alpha horizon witness\n" << render_scan_table(rows);
    for (const auto& r : rows) {
      if (!r.witness) {
        out << fmt::format("no witness: pl_{0}({0}n+{1}) == 0 (mod {0}) for all n < {2}\n",
                           r.prime, r.alpha, r.horizon);
      }
    }
  }
  return kOk;
}

int run_oracle(const OracleCmd& c, OutputFormat format, std::ostream& out) {
  const auto limits = oracle_limits_from_env();
  std::uint64_t count = 0;
  if (c.kind == "plane") {
    count = enum_plane(c.n, c.k, limits);
  } else if (c.kind == "multi") {
    count = enum_multi(c.n, c.k, limits);
  } else {
    count = enum_restricted(c.n, c.parts, limits);
  }
  if (format == OutputFormat::Json) {
    json j{{"kind", c.kind}, {"n", c.n}, {"count", count}};
    if (c.kind == "restricted") {
      j["parts"] = c.parts;
    } else {
      j["k"] = c.k;
    }
    write_json(out, j);
  } else {
    out << count << '\n';
  }
  return kOk;
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& action) -> int {
          using T = std::decay_t<decltype(action)>;
          if constexpr (std::is_same_v<T, SeriesCmd>) return run_series(action, cmd.format, out);
          if constexpr (std::is_same_v<T, PeriodCmd>) return run_period(action, cmd.format, out);
          if constexpr (std::is_same_v<T, VerifyCmd>) return run_verify(action, cmd.format, out, err);
          if constexpr (std::is_same_v<T, WitnessCmd>) return run_witness(action, cmd.format, out);
          if constexpr (std::is_same_v<T, SearchCmd>) return run_search(action, cmd.format, out);
          if constexpr (std::is_same_v<T, ScanCmd>) return run_scan(action, cmd.format, out);
          if constexpr (std::is_same_v<T, OracleCmd>) return run_oracle(action, cmd.format, out);
        },
        cmd.action);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse(args);
  } catch (const UsageError& e) {
    if (e.is_help()) {
      out << e.what();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kError;
  }
  return execute(cmd, out, err);
}

}  // namespace planecong::cli
