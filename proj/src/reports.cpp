#include "etaphi/reports.hpp"

#include <limits>

namespace etaphi {

using nlohmann::json;

json int_to_json(Int v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json int_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  return j.get<std::int64_t>();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(std::to_string(j.get<std::int64_t>()));
}

namespace {

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

void to_json(json& j, const IdentityReport& r) {
  j = json{{"n_max", r.n_max},
           {"holds", r.holds},
           {"first_mismatch", optional_to_json(r.first_mismatch)},
           {"mismatch_count", r.mismatch_count}};
}

void from_json(const json& j, IdentityReport& r) {
  r.n_max = j.at("n_max").get<std::int64_t>();
  r.holds = j.at("holds").get<bool>();
  r.first_mismatch = optional_from_json<std::int64_t>(j.at("first_mismatch"));
  r.mismatch_count = j.at("mismatch_count").get<std::int64_t>();
}

void to_json(json& j, const PrimePowerMargin& m) {
  j = json{{"p", m.p}, {"k", m.k}, {"class", to_string(m.cls)}, {"a", int_to_json(m.a)}, {"abs_b", int_to_json(m.abs_b)}, {"holds", m.holds}};
}

void from_json(const json& j, PrimePowerMargin& m) {
  m.p = j.at("p").get<std::uint64_t>();
  m.k = j.at("k").get<int>();
  m.cls = prime_class_from_string(j.at("class").get<std::string>());
  m.a = big_from_json(j.at("a"));
  m.abs_b = big_from_json(j.at("abs_b"));
  m.holds = j.at("holds").get<bool>();
}

void to_json(json& j, const PositivityReport& r) {
  j = json{{"n_max", r.n_max}, {"verified", r.verified()}, {"failures", r.failures}, {"casewise", r.casewise}};
}

void from_json(const json& j, PositivityReport& r) {
  r.n_max = j.at("n_max").get<std::int64_t>();
  r.failures = j.at("failures").get<std::vector<std::int64_t>>();
  r.casewise = j.at("casewise").get<std::vector<PrimePowerMargin>>();
}

void to_json(json& j, const UniquenessWitness& w) {
  json coeffs = json::array();
  for (const Int c : w.coeffs) coeffs.push_back(int_to_json(c));
  j = json{{"c1_zero", w.c1_zero},
           {"found", w.found()},
           {"indices", w.indices},
           {"coeffs", coeffs},
           {"search_bound", w.search_bound}};
}

void from_json(const json& j, UniquenessWitness& w) {
  w.c1_zero = j.at("c1_zero").get<bool>();
  w.indices = j.at("indices").get<std::vector<std::int64_t>>();
  w.coeffs.clear();
  for (const auto& c : j.at("coeffs")) w.coeffs.push_back(int_from_json(c));
  w.search_bound = j.at("search_bound").get<std::int64_t>();
}

void to_json(json& j, const NondecompWitness& w) {
  j = json{{"p", w.p},
           {"bound", w.bound},
           {"m", optional_to_json(w.m)},
           {"zero_range_ok", w.zero_range_ok},
           {"nonzero_range_ok", w.nonzero_range_ok},
           {"c2_zero", w.c2_zero},
           {"c2m_nonzero", w.c2m_nonzero},
           {"first_violation", optional_to_json(w.first_violation)},
           {"failed_condition", w.failed_condition},
           {"valid", w.valid()}};
}

void from_json(const json& j, NondecompWitness& w) {
  w.p = j.at("p").get<std::int64_t>();
  w.bound = j.at("bound").get<std::int64_t>();
  w.m = optional_from_json<std::int64_t>(j.at("m"));
  w.zero_range_ok = j.at("zero_range_ok").get<bool>();
  w.nonzero_range_ok = j.at("nonzero_range_ok").get<bool>();
  w.c2_zero = j.at("c2_zero").get<bool>();
  w.c2m_nonzero = j.at("c2m_nonzero").get<bool>();
  w.first_violation = optional_from_json<std::int64_t>(j.at("first_violation"));
  w.failed_condition = j.at("failed_condition").get<std::string>();
}

void to_json(json& j, const ScanEntry& e) {
  j = json{{"h", e.h},
           {"n_max", e.n_max},
           {"order24", e.order24},
           {"first_negative_index", optional_to_json(e.first_negative_index)},
           {"truncation_limited", e.truncation_limited}};
}

void from_json(const json& j, ScanEntry& e) {
  e.h = j.at("h").get<std::int64_t>();
  e.n_max = j.at("n_max").get<std::int64_t>();
  e.order24 = j.at("order24").get<std::int64_t>();
  e.first_negative_index = optional_from_json<std::int64_t>(j.at("first_negative_index"));
  e.truncation_limited = j.at("truncation_limited").get<bool>();
}

}  // namespace etaphi
