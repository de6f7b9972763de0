#pragma once

// Congruences between plane-partition counts on arithmetic progressions,
//
//   sum_i pl_k(stride*n + a_i) == sum_j pl_k(stride*n + b_j)  (mod m),
//
// and the ways this library decides them:
//
//  * theorem-bound: for k = m = stride = ell prime, checking n < B with
//    B = max(1, ceil(pi_ell(F_ell) / ell)) proves the statement for all n.
//  * alpha-beta: the same bound applied to the coefficients of F_ell alone.
//    Modulo ell, PL_ell = F_ell * sum_m beta_m q^{m ell}, and beta_0 = 1, so
//    the two checks fail first at the same n.
//  * empirical: any k, m, stride; checks n < horizon only.
//  * multipartition: pl_2 mod 5 through pl_2(n) = p_2(n) - p_2(n - 1).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "planecong/modseries.hpp"
#include "planecong/periodicity.hpp"

namespace planecong {

struct CongruenceStatement {
  unsigned k = 1;
  Modulus modulus = 2;
  /// Progression step; equals the modulus for every theorem-bound case.
  unsigned stride = 2;
  std::vector<unsigned> lhs;
  /// Empty means the right-hand side is 0.
  std::vector<unsigned> rhs;

  friend bool operator==(const CongruenceStatement&, const CongruenceStatement&) = default;
  friend auto operator<=>(const CongruenceStatement&, const CongruenceStatement&) = default;
};

/// Convenience constructor with stride = modulus.
CongruenceStatement make_statement(unsigned k, Modulus modulus,
                                   std::vector<unsigned> lhs,
                                   std::vector<unsigned> rhs);

/// True if every residue already lies in [0, stride).
bool residues_reduced(const CongruenceStatement& st);

/// Reduces residues mod stride, cancels terms common to both sides, sorts
/// each side and fixes orientation: an empty side goes on the right,
/// otherwise (lhs, rhs) <= (rhs, lhs).
CongruenceStatement canonicalize(CongruenceStatement raw);

/// Both sides identical after canonicalization (0 == 0).
bool is_trivial(const CongruenceStatement& st);

std::string to_string(const CongruenceStatement& st);

enum class Method { TheoremBound, AlphaBeta, Empirical, Multipartition };
enum class Verdict { ProvedForAllN, HoldsToHorizon, Refuted };

std::string_view to_string(Method m);
std::string_view to_string(Verdict v);
Method parse_method(std::string_view s);
Verdict parse_verdict(std::string_view s);

struct Counterexample {
  std::uint64_t n;
  Residue lhs_value;
  Residue rhs_value;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  CongruenceStatement statement;
  Method method = Method::Empirical;
  /// Number of values of n actually compared.
  std::uint64_t checks = 0;
  /// Proof bound B for theorem-bound/alpha-beta, horizon otherwise.
  std::uint64_t bound = 0;
  Verdict verdict = Verdict::Refuted;
  std::optional<Counterexample> counterexample;
  std::optional<PeriodCertificate> certificate;

  bool holds() const noexcept { return verdict != Verdict::Refuted; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Statement is outside the finite-check theorem (k != m, stride != m, or
/// m not prime).
class ScopeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thread-safe memo of built series keyed by (kind, k, modulus, order).
/// Racing builders for one key produce identical values; the first stored
/// wins.
class SeriesCache {
public:
  enum class Kind { Plane, Head };

  std::shared_ptr<const ResidueSeries> get(Kind kind, unsigned k,
                                           Modulus modulus, std::size_t order);

private:
  using Key = std::tuple<Kind, unsigned, Modulus, std::size_t>;
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const ResidueSeries>> entries_;
};

/// B = max(1, ceil(pi_ell(F_ell) / ell)).
std::uint64_t theorem_bound(unsigned ell);

/// Coefficients of PL_ell needed to check n < theorem_bound(ell):
/// ell * (B - 1) + largest residue + 1.
std::size_t theorem_series_terms(const CongruenceStatement& st);

VerificationReport verify_bounded(const CongruenceStatement& st,
                                  SeriesCache* cache = nullptr);

VerificationReport alpha_check(const CongruenceStatement& st,
                               SeriesCache* cache = nullptr);

VerificationReport empirical_check(const CongruenceStatement& st,
                                   std::uint64_t horizon);

/// Sum of series coefficients at stride*n + r over one side, mod the
/// series modulus.
Residue side_value(const ResidueSeries& s, unsigned stride, std::uint64_t n,
                   const std::vector<unsigned>& residues);

// ---------------------------------------------------------------------------
// Prime-power witnesses

enum class WitnessCase { Mod4Triple, Mod4Odd, Mod8Triple };

std::string_view to_string(WitnessCase c);
WitnessCase parse_witness_case(std::string_view s);

struct WitnessReport {
  WitnessCase which;
  /// The finite product, expanded over Z.
  IntPoly polynomial;
  /// (exponent, coefficient) pairs the parity or equality claim is about.
  std::vector<std::pair<std::size_t, std::int64_t>> inspected;
  /// Finite polynomial claim holds.
  bool polynomial_claim = false;
  /// PL_k agrees with polynomial * (remaining product) mod the case modulus
  /// for all exponents below identity_horizon.
  bool identity_claim = false;
  std::size_t identity_horizon = 0;
  /// The congruences themselves, checked empirically.
  std::vector<VerificationReport> congruences;

  bool holds() const noexcept;
};

/// The polynomial 1 + q + 2q^2 + q^3 + 3q^5 + 2q^6 + 3q^7 + 3q^8 (mod 4).
DensePoly mod4_reference_polynomial();

WitnessReport prime_power_witness(WitnessCase which, std::uint64_t horizon = 500);

// ---------------------------------------------------------------------------
// Multipartition route

/// Legendre symbol via Euler's criterion; ell must be an odd prime.
int legendre(std::int64_t a, std::uint64_t ell);

/// p_{ell-3}(ell n + a) == 0 (mod ell) for all n iff (8a + 1 | ell) != 1.
bool kiming_olsson_holds(std::uint64_t ell, unsigned a);

struct MultipartitionReport {
  std::uint64_t horizon = 0;
  /// p_2(5n + a) == 0 (mod 5) for a in {2, 3, 4} and n < horizon.
  bool multipartition_vanishing = false;
  /// pl_2(n) == p_2(n) - p_2(n - 1) (mod 5) for n < 5 * horizon.
  bool difference_identity = false;
  /// pl_2(5n + 3) == 0 and pl_2(5n + 4) == 0, evaluated through p_2.
  std::vector<VerificationReport> congruences;

  bool holds() const noexcept;
};

MultipartitionReport pl2_mod5_via_multipartition(std::uint64_t horizon = 500);

}  // namespace planecong
