#include "planecong/json.hpp"

namespace planecong {

using nlohmann::json;

void to_json(json& j, const ColoredPartMultiset& s) {
  j = json::array();
  for (const auto& e : s.entries()) j.push_back({e.part, e.colors});
}

void from_json(const json& j, ColoredPartMultiset& s) {
  std::vector<ColoredPart> entries;
  for (const auto& e : j) entries.push_back({e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()});
  s = ColoredPartMultiset(std::move(entries));
}

void to_json(json& j, const PeriodCertificate& c) {
  j = json{{"prime", c.prime}, {"exponent", c.exponent}, {"parts", c.parts},
           {"m_of_s", c.m_of_s}, {"b_of_s", c.b_of_s},   {"period", c.period}};
}

void from_json(const json& j, PeriodCertificate& c) {
  j.at("prime").get_to(c.prime);
  j.at("exponent").get_to(c.exponent);
  j.at("parts").get_to(c.parts);
  j.at("m_of_s").get_to(c.m_of_s);
  j.at("b_of_s").get_to(c.b_of_s);
  j.at("period").get_to(c.period);
}

void to_json(json& j, const CongruenceStatement& st) {
  j = json{{"k", st.k},           {"m", st.modulus}, {"stride", st.stride},
           {"lhs", st.lhs},       {"rhs", st.rhs}};
}

void from_json(const json& j, CongruenceStatement& st) {
  j.at("k").get_to(st.k);
  j.at("m").get_to(st.modulus);
  st.stride = j.value("stride", st.modulus);
  j.at("lhs").get_to(st.lhs);
  j.at("rhs").get_to(st.rhs);
}

void to_json(json& j, const Counterexample& c) {
  j = json{{"n", c.n}, {"lhs", c.lhs_value}, {"rhs", c.rhs_value}};
}

void from_json(const json& j, Counterexample& c) {
  j.at("n").get_to(c.n);
  j.at("lhs").get_to(c.lhs_value);
  j.at("rhs").get_to(c.rhs_value);
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"statement", r.statement},
           {"method", to_string(r.method)},
           {"bound", r.bound},
           {"checks", r.checks},
           {"verdict", to_string(r.verdict)}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.certificate) j["certificate"] = *r.certificate;
}

void from_json(const json& j, VerificationReport& r) {
  j.at("statement").get_to(r.statement);
  r.method = parse_method(j.at("method").get<std::string>());
  j.at("bound").get_to(r.bound);
  j.at("checks").get_to(r.checks);
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.counterexample.reset();
  r.certificate.reset();
  if (j.contains("counterexample")) r.counterexample = j.at("counterexample").get<Counterexample>();
  if (j.contains("certificate")) r.certificate = j.at("certificate").get<PeriodCertificate>();
}

void to_json(json& j, const WitnessReport& r) {
  json inspected = json::array();
  for (const auto& [e, c] : r.inspected) inspected.push_back({e, c});
  j = json{{"case", to_string(r.which)},
           {"polynomial", r.polynomial},
           {"inspected", inspected},
           {"polynomial_claim", r.polynomial_claim},
           {"identity_claim", r.identity_claim},
           {"identity_horizon", r.identity_horizon},
           {"congruences", r.congruences},
           {"holds", r.holds()}};
}

void from_json(const json& j, WitnessReport& r) {
  r.which = parse_witness_case(j.at("case").get<std::string>());
  j.at("polynomial").get_to(r.polynomial);
  r.inspected.clear();
  for (const auto& e : j.at("inspected")) {
    r.inspected.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::int64_t>());
  }
  j.at("polynomial_claim").get_to(r.polynomial_claim);
  j.at("identity_claim").get_to(r.identity_claim);
  j.at("identity_horizon").get_to(r.identity_horizon);
  j.at("congruences").get_to(r.congruences);
}

void to_json(json& j, const MultipartitionReport& r) {
  j = json{{"horizon", r.horizon},
           {"multipartition_vanishing", r.multipartition_vanishing},
           {"difference_identity", r.difference_identity},
           {"congruences", r.congruences},
           {"holds", r.holds()}};
}

void from_json(const json& j, MultipartitionReport& r) {
  j.at("horizon").get_to(r.horizon);
  j.at("multipartition_vanishing").get_to(r.multipartition_vanishing);
  j.at("difference_identity").get_to(r.difference_identity);
  j.at("congruences").get_to(r.congruences);
}

}  // namespace planecong
