#include "test_main.hpp"

#include "etaphi/reports.hpp"

using namespace etaphi;
using nlohmann::json;

template <class T>
T round_trip(const T& v) {
  return json::parse(json(v).dump()).get<T>();
}

TEST_CASE("integers beyond 64 bits serialize as strings") {
  const Int big = (Int(1) << 100) + 7;
  CHECK(int_to_json(big).is_string());
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_to_json(Int(-5)).is_number_integer());
  CHECK(int_from_json(int_to_json(Int(-5))) == -5);
  const BigInt huge("123456789012345678901234567890123456789012345678901234567890");
  CHECK(big_from_json(int_to_json(huge)) == huge);
}

TEST_CASE("reports round-trip losslessly") {
  const PositivityReport pos = check_positivity(200);
  CHECK(round_trip(pos) == pos);

  PositivityReport with_failures = pos;
  with_failures.failures = {17, 23};
  with_failures.casewise.push_back(prime_power_margin<BigInt>(991, 20));
  CHECK(round_trip(with_failures) == with_failures);

  const IdentityReport id = verify_identity(300);
  CHECK(round_trip(id) == id);
  IdentityReport broken{100, false, 41, 3};
  CHECK(round_trip(broken) == broken);

  const UniquenessWitness uw = uniqueness_hypotheses(c_from_expansion(50));
  CHECK(round_trip(uw) == uw);

  const NondecompWitness nw = nondecomp_witness(13);
  CHECK(round_trip(nw) == nw);

  for (const auto& e : conjecture_scan(6, 100)) CHECK(round_trip(e) == e);
  ScanEntry neg{9, 100, 30, 17, true};
  CHECK(round_trip(neg) == neg);
}

TEST_CASE("json keys are snake_case") {
  const json j = nondecomp_witness(11);
  CHECK(j.at("bound") == 5);
  CHECK(j.at("m") == 3);
  CHECK(j.at("valid") == true);
  for (const auto& [key, value] : j.items())
    for (const char ch : key) CHECK(((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_'));
}
