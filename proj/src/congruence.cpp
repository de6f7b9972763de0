#include "planecong/congruence.hpp"

#include <algorithm>
#include <iterator>

#include <fmt/core.h>
#include <fmt/format.h>

#include "planecong/arith.hpp"
#include "planecong/partitions.hpp"

namespace planecong {

CongruenceStatement make_statement(unsigned k, Modulus modulus,
                                   std::vector<unsigned> lhs,
                                   std::vector<unsigned> rhs) {
  return {k, modulus, modulus, std::move(lhs), std::move(rhs)};
}

bool residues_reduced(const CongruenceStatement& st) {
  auto in_range = [&](unsigned r) { return r < st.stride; };
  return std::all_of(st.lhs.begin(), st.lhs.end(), in_range) &&
         std::all_of(st.rhs.begin(), st.rhs.end(), in_range);
}

CongruenceStatement canonicalize(CongruenceStatement raw) {
  if (raw.k < 1) throw std::invalid_argument("k must be >= 1");
  if (raw.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (raw.stride < 1) throw std::invalid_argument("stride must be >= 1");
  for (auto* side : {&raw.lhs, &raw.rhs}) {
    for (auto& r : *side) r %= raw.stride;
    std::sort(side->begin(), side->end());
  }
  std::vector<unsigned> lhs, rhs;
  std::set_difference(raw.lhs.begin(), raw.lhs.end(), raw.rhs.begin(),
                      raw.rhs.end(), std::back_inserter(lhs));
  std::set_difference(raw.rhs.begin(), raw.rhs.end(), raw.lhs.begin(),
                      raw.lhs.end(), std::back_inserter(rhs));
  if (lhs.empty() || (!rhs.empty() && rhs < lhs)) std::swap(lhs, rhs);
  raw.lhs = std::move(lhs);
  raw.rhs = std::move(rhs);
  return raw;
}

bool is_trivial(const CongruenceStatement& st) {
  const auto c = canonicalize(st);
  return c.lhs.empty() && c.rhs.empty();
}

std::string to_string(const CongruenceStatement& st) {
  auto term = [&](unsigned r) {
    return r == 0 ? fmt::format("pl_{}({}n)", st.k, st.stride)
                  : fmt::format("pl_{}({}n+{})", st.k, st.stride, r);
  };
  auto side = [&](const std::vector<unsigned>& rs) {
    if (rs.empty()) return std::string("0");
    std::vector<std::string> terms;
    std::transform(rs.begin(), rs.end(), std::back_inserter(terms), term);
    return fmt::format("{}", fmt::join(terms, " + "));
  };
  return fmt::format("{} == {} (mod {})", side(st.lhs), side(st.rhs), st.modulus);
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::TheoremBound: return "theorem-bound";
    case Method::AlphaBeta: return "alpha-beta";
    case Method::Empirical: return "empirical";
    case Method::Multipartition: return "multipartition";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedForAllN: return "proved-for-all-n";
    case Verdict::HoldsToHorizon: return "holds-to-horizon";
    case Verdict::Refuted: return "refuted";
  }
  return "unknown";
}

Method parse_method(std::string_view s) {
  for (auto m : {Method::TheoremBound, Method::AlphaBeta, Method::Empirical,
                 Method::Multipartition}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument(fmt::format("unknown method '{}'", s));
}

Verdict parse_verdict(std::string_view s) {
  for (auto v : {Verdict::ProvedForAllN, Verdict::HoldsToHorizon, Verdict::Refuted}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument(fmt::format("unknown verdict '{}'", s));
}

std::shared_ptr<const ResidueSeries> SeriesCache::get(Kind kind, unsigned k,
                                                      Modulus modulus,
                                                      std::size_t order) {
  const Key key{kind, k, modulus, order};
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto built = std::make_shared<const ResidueSeries>(
      kind == Kind::Plane ? pl_series(k, modulus, order) : f_series(k, modulus, order));
  std::lock_guard lock(mutex_);
  return entries_.emplace(key, std::move(built)).first->second;
}

Residue side_value(const ResidueSeries& s, unsigned stride, std::uint64_t n,
                   const std::vector<unsigned>& residues) {
  std::uint64_t total = 0;
  for (unsigned r : residues) {
    total = (total + s.at(stride * n + r)) % s.modulus();
  }
  return static_cast<Residue>(total);
}

std::uint64_t theorem_bound(unsigned ell) {
  const auto period = f_ell_period(ell, 1);
  return std::max<std::uint64_t>(1, (period + ell - 1) / ell);
}

std::size_t theorem_series_terms(const CongruenceStatement& st) {
  unsigned top = 0;
  for (const auto* side : {&st.lhs, &st.rhs}) {
    for (unsigned r : *side) top = std::max(top, r);
  }
  return st.stride * (theorem_bound(st.stride) - 1) + top + 1;
}

namespace {

void require_theorem_scope(const CongruenceStatement& st) {
  if (st.k != st.modulus || st.stride != st.modulus || !is_prime(st.modulus)) {
    throw ScopeError(fmt::format(
        "{} is outside the finite-check theorem (needs k = m = stride prime); "
        "use the empirical check",
        to_string(st)));
  }
  if (!residues_reduced(st)) {
    throw std::invalid_argument(fmt::format(
        "residues of {} must lie in [0, {}); canonicalize first", to_string(st),
        st.stride));
  }
}

// Compares both sides on n = 0, 1, ..., limit - 1, stopping at the first
// mismatch.
void compare_sides(const ResidueSeries& s, VerificationReport& report,
                   std::uint64_t limit, Verdict success) {
  const auto& st = report.statement;
  for (std::uint64_t n = 0; n < limit; ++n) {
    ++report.checks;
    const auto lhs = side_value(s, st.stride, n, st.lhs);
    const auto rhs = side_value(s, st.stride, n, st.rhs);
    if (lhs != rhs) {
      report.verdict = Verdict::Refuted;
      report.counterexample = Counterexample{n, lhs, rhs};
      return;
    }
  }
  report.verdict = success;
}

VerificationReport bounded_check(const CongruenceStatement& st, SeriesCache* cache,
                                 SeriesCache::Kind kind, Method method) {
  require_theorem_scope(st);
  const unsigned ell = st.modulus;
  const auto terms = theorem_series_terms(st);
  std::shared_ptr<const ResidueSeries> series;
  if (cache) {
    series = cache->get(kind, ell, ell, terms);
  } else {
    series = std::make_shared<const ResidueSeries>(
        kind == SeriesCache::Kind::Plane ? pl_series(ell, ell, terms)
                                         : f_series(ell, ell, terms));
  }
  VerificationReport report;
  report.statement = st;
  report.method = method;
  report.bound = theorem_bound(ell);
  compare_sides(*series, report, report.bound, Verdict::ProvedForAllN);
  if (report.verdict == Verdict::ProvedForAllN) {
    report.certificate = kwong_period(ell, 1, s_k_multiset(ell));
  }
  return report;
}

}  // namespace

VerificationReport verify_bounded(const CongruenceStatement& st, SeriesCache* cache) {
  return bounded_check(st, cache, SeriesCache::Kind::Plane, Method::TheoremBound);
}

VerificationReport alpha_check(const CongruenceStatement& st, SeriesCache* cache) {
  return bounded_check(st, cache, SeriesCache::Kind::Head, Method::AlphaBeta);
}

VerificationReport empirical_check(const CongruenceStatement& st,
                                   std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (!residues_reduced(st)) {
    throw std::invalid_argument(fmt::format(
        "residues of {} must lie in [0, {})", to_string(st), st.stride));
  }
  const auto series = pl_series(st.k, st.modulus, st.stride * horizon);
  VerificationReport report;
  report.statement = st;
  report.method = Method::Empirical;
  report.bound = horizon;
  compare_sides(series, report, horizon, Verdict::HoldsToHorizon);
  return report;
}

// ---------------------------------------------------------------------------

std::string_view to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::Mod4Triple: return "mod4-triple";
    case WitnessCase::Mod4Odd: return "mod4-odd";
    case WitnessCase::Mod8Triple: return "mod8-triple";
  }
  return "unknown";
}

WitnessCase parse_witness_case(std::string_view s) {
  for (auto c : {WitnessCase::Mod4Triple, WitnessCase::Mod4Odd, WitnessCase::Mod8Triple}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument(fmt::format("unknown witness case '{}'", s));
}

bool WitnessReport::holds() const noexcept {
  return polynomial_claim && identity_claim &&
         std::all_of(congruences.begin(), congruences.end(),
                     [](const auto& r) { return r.holds(); });
}

DensePoly mod4_reference_polynomial() {
  return DensePoly(4, {1, 1, 2, 1, 0, 3, 2, 3, 3});
}

namespace {

IntPoly expand(std::initializer_list<std::pair<std::size_t, unsigned>> factors) {
  IntPoly p{1};
  for (auto [stride, exponent] : factors) p = mul(p, binomial_int_poly(stride, exponent));
  return p;
}

// prod_{i>=1} 1/(1 - q^{step i}) mod m.
ResidueSeries strided_partitions(unsigned step, Modulus m, std::size_t order) {
  auto s = one(m, order);
  for (std::size_t j = step; j < order; j += step) s = apply_inverse_factor(std::move(s), j, 1);
  return s;
}

// Spreads c_n to exponent step * n.
ResidueSeries dilate(const ResidueSeries& s, unsigned step, std::size_t order) {
  std::vector<Residue> c(order, 0);
  for (std::size_t n = 0; n * step < order && n < s.order(); ++n) c[n * step] = s[n];
  return ResidueSeries(s.modulus(), std::move(c));
}

bool parity_claim(const IntPoly& p, unsigned step, std::initializer_list<unsigned> classes,
                  WitnessReport& report) {
  bool even = true;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (std::find(classes.begin(), classes.end(), e % step) == classes.end()) continue;
    report.inspected.emplace_back(e, p[e]);
    even = even && p[e] % 2 == 0;
  }
  return even;
}

}  // namespace

WitnessReport prime_power_witness(WitnessCase which, std::uint64_t horizon) {
  WitnessReport report{which, {}, {}, false, false, 0, {}};
  switch (which) {
    case WitnessCase::Mod4Triple: {
      // PL_4 == (1+q)^3 (1-q)^2 (1-q^3) * sum pl_2(n) q^{2n}  (mod 4)
      IntPoly one_plus_q_cubed = mul(mul(IntPoly{1, 1}, IntPoly{1, 1}), IntPoly{1, 1});
      report.polynomial = mul(one_plus_q_cubed, expand({{1, 2}, {3, 1}}));
      for (std::size_t e = 0; e < report.polynomial.size(); ++e) {
        report.inspected.emplace_back(e, report.polynomial[e]);
      }
      report.polynomial_claim = reduce(report.polynomial, 4) == mod4_reference_polynomial();
      const std::size_t order = 4 * horizon;
      const auto pl2 = pl_series(2, 4, order / 2 + 1);
      const auto rhs = mul_poly(dilate(pl2, 2, order), reduce(report.polynomial, 4));
      report.identity_claim = rhs == pl_series(4, 4, order);
      report.identity_horizon = order;
      report.congruences.push_back(
          empirical_check({4, 4, 4, {1}, {2, 3}}, horizon));
      break;
    }
    case WitnessCase::Mod4Odd: {
      // PL_4 == (1-q)^3 (1-q^2)^2 (1-q^3) * prod 1/(1-q^{4i})  (mod 2)
      report.polynomial = expand({{1, 3}, {2, 2}, {3, 1}});
      report.polynomial_claim = parity_claim(report.polynomial, 4, {3}, report);
      const std::size_t order = 4 * horizon;
      const auto rhs = mul_poly(strided_partitions(4, 2, order), reduce(report.polynomial, 2));
      report.identity_claim = rhs == pl_series(4, 2, order);
      report.identity_horizon = order;
      report.congruences.push_back(empirical_check({4, 2, 4, {3}, {}}, horizon));
      break;
    }
    case WitnessCase::Mod8Triple: {
      // PL_8 == prod_{i<8} (1-q^i)^{8-i} * prod 1/(1-q^{8i})  (mod 2)
      report.polynomial = expand({{1, 7}, {2, 6}, {3, 5}, {4, 4}, {5, 3}, {6, 2}, {7, 1}});
      report.polynomial_claim = parity_claim(report.polynomial, 8, {5, 6, 7}, report);
      const std::size_t order = 8 * horizon;
      const auto rhs = mul_poly(strided_partitions(8, 2, order), reduce(report.polynomial, 2));
      report.identity_claim = rhs == pl_series(8, 2, order);
      report.identity_horizon = order;
      for (unsigned r : {5u, 6u, 7u}) {
        report.congruences.push_back(empirical_check({8, 2, 8, {r}, {}}, horizon));
      }
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

int legendre(std::int64_t a, std::uint64_t ell) {
  if (ell % 2 == 0 || !is_prime(ell)) {
    throw std::invalid_argument(fmt::format("Legendre symbol needs an odd prime, got {}", ell));
  }
  const auto m = static_cast<std::int64_t>(ell);
  const auto reduced = static_cast<std::uint64_t>(((a % m) + m) % m);
  const auto r = pow_mod(reduced, (ell - 1) / 2, ell);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

bool kiming_olsson_holds(std::uint64_t ell, unsigned a) {
  if (ell < 5 || !is_prime(ell)) {
    throw std::invalid_argument(fmt::format("criterion needs a prime >= 5, got {}", ell));
  }
  if (a >= ell) throw std::invalid_argument("residue must lie in [0, ell)");
  return legendre(8 * static_cast<std::int64_t>(a) + 1, ell) != 1;
}

bool MultipartitionReport::holds() const noexcept {
  return multipartition_vanishing && difference_identity &&
         std::all_of(congruences.begin(), congruences.end(),
                     [](const auto& r) { return r.holds(); });
}

MultipartitionReport pl2_mod5_via_multipartition(std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  constexpr Modulus m = 5;
  const std::size_t order = 5 * horizon;
  const auto p2 = multipartition_series(2, m, order);
  const auto pl2 = pl_series(2, m, order);
  auto difference = [&](std::size_t n) -> Residue {
    return n == 0 ? p2[0] : (p2[n] + m - p2[n - 1]) % m;
  };

  MultipartitionReport report;
  report.horizon = horizon;
  report.multipartition_vanishing = true;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    for (unsigned a : {2u, 3u, 4u}) {
      report.multipartition_vanishing = report.multipartition_vanishing && p2[5 * n + a] == 0;
    }
  }
  report.difference_identity = true;
  for (std::size_t n = 0; n < order; ++n) {
    report.difference_identity = report.difference_identity && pl2[n] == difference(n);
  }
  for (unsigned a : {3u, 4u}) {
    VerificationReport r;
    r.statement = make_statement(2, m, {a}, {});
    r.method = Method::Multipartition;
    r.bound = horizon;
    r.verdict = Verdict::HoldsToHorizon;
    for (std::uint64_t n = 0; n < horizon; ++n) {
      ++r.checks;
      if (const auto v = difference(5 * n + a); v != 0) {
        r.verdict = Verdict::Refuted;
        r.counterexample = Counterexample{n, v, 0};
        break;
      }
    }
    report.congruences.push_back(std::move(r));
  }
  return report;
}

}  // namespace planecong
