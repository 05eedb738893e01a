#pragma once

// JSON encoding of the verification reports. Integers that fit in 64 bits
// are JSON numbers, larger ones decimal strings; decoding accepts both.

#include <json.hpp>

#include "etaphi/analysis.hpp"

namespace etaphi {

nlohmann::json int_to_json(Int v);
nlohmann::json int_to_json(const BigInt& v);
Int int_from_json(const nlohmann::json& j);
BigInt big_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);
void to_json(nlohmann::json& j, const PrimePowerMargin& m);
void from_json(const nlohmann::json& j, PrimePowerMargin& m);
void to_json(nlohmann::json& j, const PositivityReport& r);
void from_json(const nlohmann::json& j, PositivityReport& r);
void to_json(nlohmann::json& j, const UniquenessWitness& w);
void from_json(const nlohmann::json& j, UniquenessWitness& w);
void to_json(nlohmann::json& j, const NondecompWitness& w);
void from_json(const nlohmann::json& j, NondecompWitness& w);
void to_json(nlohmann::json& j, const ScanEntry& e);
void from_json(const nlohmann::json& j, ScanEntry& e);

}  // namespace etaphi
