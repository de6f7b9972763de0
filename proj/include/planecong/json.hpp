#pragma once

// JSON encoding of statements, certificates and reports. Field names are
// stable; docs/report-schema.md describes them and tests/golden freezes them.

#include <json.hpp>

#include "planecong/congruence.hpp"
#include "planecong/periodicity.hpp"

namespace planecong {

void to_json(nlohmann::json& j, const ColoredPartMultiset& s);
void from_json(const nlohmann::json& j, ColoredPartMultiset& s);

void to_json(nlohmann::json& j, const PeriodCertificate& c);
void from_json(const nlohmann::json& j, PeriodCertificate& c);

void to_json(nlohmann::json& j, const CongruenceStatement& st);
void from_json(const nlohmann::json& j, CongruenceStatement& st);

void to_json(nlohmann::json& j, const Counterexample& c);
void from_json(const nlohmann::json& j, Counterexample& c);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

void to_json(nlohmann::json& j, const WitnessReport& r);
void from_json(const nlohmann::json& j, WitnessReport& r);

void to_json(nlohmann::json& j, const MultipartitionReport& r);
void from_json(const nlohmann::json& j, MultipartitionReport& r);

}  // namespace planecong
