#include "test_main.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "etaphi/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "etaphi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = etaphi::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand phi7 as json carries the discrepancy annotation") {
  const Outcome o = invoke({"expand", "--h", "7", "--n-max", "50", "--format", "json"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j.at("order24") == 48);
  CHECK(j.at("integral") == true);
  const auto& rows = j.at("coefficients");
  REQUIRE(rows.size() == 49);
  CHECK(rows.front().at("n") == 2);
  CHECK(rows.front().at("coefficient") == 1);
  CHECK(rows.at(41 - 2).at("coefficient") == 210);
  REQUIRE(j.at("paper_discrepancy").size() == 1);
  CHECK(j.at("paper_discrepancy")[0].at("n") == 41);
  CHECK(j.at("paper_discrepancy")[0].at("published") == 21);
  CHECK(j.at("paper_discrepancy")[0].at("computed") == 210);
}

TEST_CASE("expand text and csv") {
  const Outcome text = invoke({"expand", "--h", "7", "--n-max", "50"});
  CHECK(text.code == 0);
  CHECK(text.out.find("\n41 210  # paper_discrepancy: published 21\n") != std::string::npos);
  CHECK(text.out.find("\n50 385\n") != std::string::npos);
  const Outcome csv = invoke({"expand", "--spec", "7:7,1:-1", "--n-max", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,coefficient\n2,1\n3,1\n4,2\n");
  const Outcome frac = invoke({"expand", "--spec", "1:1", "--n-max", "2", "--format", "csv"});
  CHECK(frac.code == 0);
  CHECK(frac.out == "exponent24,coefficient\n1,1\n25,-1\n");
  const Outcome corpus = invoke({"expand", "--corpus", "eta48_cubed_over_eta24", "--n-max", "29", "--format", "csv"});
  CHECK(corpus.code == 0);
  CHECK(corpus.out.rfind("n,coefficient\n5,1\n", 0) == 0);
}

TEST_CASE("coeffs rows") {
  const Outcome o = invoke({"coeffs", "--n-max", "12", "--format", "csv"});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("n,a,b,c\n1,1,1,0\n2,5,-3,1\n", 0) == 0);
  CHECK(o.out.find("\n12,168,0,21\n") != std::string::npos);
  const json j = json::parse(invoke({"coeffs", "--n-max", "3", "--format", "json"}).out);
  CHECK(j.at("rows")[2] == json{{"n", 3}, {"a", 8}, {"b", 0}, {"c", 1}});
}

TEST_CASE("verify summary") {
  const Outcome o = invoke({"verify", "--n-max", "100000"});
  CHECK(o.code == 0);
  CHECK(o.out == "identity c=(a-b)/8 holds on [1,100000]\n");
}

TEST_CASE("nondecomp") {
  const Outcome o = invoke({"nondecomp", "--p", "11", "--format", "json"});
  CHECK(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j.at("bound") == 5);
  CHECK(j.at("m") == 3);
  CHECK(invoke({"nondecomp", "--p", "7"}).code == 2);
  CHECK(invoke({"nondecomp"}).code == 2);
}

TEST_CASE("positivity, uniqueness, scan") {
  CHECK(invoke({"positivity", "--n-max", "2000"}).code == 0);
  const Outcome u = invoke({"uniqueness", "--format", "json"});
  CHECK(u.code == 0);
  CHECK(json::parse(u.out).at("witness").at("indices") == json{2, 3, 5, 7, 11});
  CHECK(invoke({"uniqueness", "--spec", "1:1,2:-1", "--n-max", "20"}).code != 0);
  const Outcome s = invoke({"scan", "--h-max", "8", "--n-max", "300", "--format", "csv"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("h,n_max,order24,first_negative_index,truncation_limited\n2,300,3,,true\n", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"expand", "--h", "7", "--bogus"}).code == 2);
  CHECK(invoke({"expand", "--h", "7", "--format", "xml"}).code == 2);
  CHECK(invoke({"expand", "--h", "seven"}).code == 2);
  CHECK(invoke({"expand"}).code == 2);
  CHECK(invoke({"expand", "--h", "7", "--spec", "1:1"}).code == 2);
  CHECK(invoke({"expand", "--h", "1"}).code == 2);
  CHECK(invoke({"expand", "--h", "7", "--n-max", "0"}).code == 2);
}

TEST_CASE("overflow exits 2 with a message") {
  // partition numbers pass 2^127 well before n = 3000
  const Outcome o = invoke({"expand", "--spec", "1:-1", "--n-max", "3000"});
  CHECK(o.code == 2);
  CHECK(o.err.find("overflow") != std::string::npos);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args = {"positivity", "--n-max", "500", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);
  const auto path = std::filesystem::temp_directory_path() / "etaphi_cli_test.json";
  const Outcome o = invoke({"nondecomp", "--p", "13", "--format", "json", "--output", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == invoke({"nondecomp", "--p", "13", "--format", "json"}).out);
  CHECK(content.back() == '\n');
  std::filesystem::remove(path);
}

TEST_CASE("environment default for n_max") {
  ::setenv(etaphi::cli::kNMaxEnv, "5", 1);
  const Outcome o = invoke({"expand", "--h", "7", "--format", "csv"});
  ::unsetenv(etaphi::cli::kNMaxEnv);
  CHECK(o.out == "n,coefficient\n2,1\n3,1\n4,2\n5,3\n");
  ::setenv(etaphi::cli::kNMaxEnv, "abc", 1);
  CHECK(invoke({"expand", "--h", "7"}).code == 2);
  ::unsetenv(etaphi::cli::kNMaxEnv);
}
