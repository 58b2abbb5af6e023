#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "holo/cli_app.hpp"

using namespace holo;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("analyze reports the headline quantities") {
  CliResult r = run({"analyze", "alt:5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["order"] == 60);
  CHECK(j["is_perfect"] == true);
  CHECK(j["center_order"] == 1);
  CHECK(j["aut_order"] == 120);
  CHECK(j["hol_order"] == 7200);
  CHECK(j["inn_krs_n"] == 1);
}

TEST_CASE("analyze of a non-perfect group omits the factor count") {
  CliResult r = run({"analyze", "cyclic:4"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["order"] == 4);
  CHECK(j["is_perfect"] == false);
  CHECK(j["aut_order"] == 2);
  CHECK(j["hol_order"] == 8);
  CHECK(!j.contains("inn_krs_n"));
}

TEST_CASE("identical invocations produce byte-identical output") {
  CliResult a = run({"enumerate-normal-regular", "sl:2,5"});
  CliResult b = run({"enumerate-normal-regular", "sl:2,5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["count"] == 2);
  CHECK(j["all_in_H"] == true);
  CHECK(j["t_group_type"] == "C2");
  CHECK(j["decomposition"]["n"] == 1);
  CHECK(j["decomposition"]["center_order"] == 2);
  CHECK(j["records"].size() == 2);
  for (const json& rec : j["records"]) {
    CHECK(rec["in_J"] == true);
    CHECK(rec["in_I"] == true);
    CHECK(rec["in_H"] == true);
    CHECK(rec["iso_witness"] == rec["conjugator"]);
    CHECK(rec.contains("gamma_inner_of"));
  }
}

TEST_CASE("the normal enumeration rejects non-perfect groups") {
  CliResult r = run({"enumerate-normal-regular", "sym:4"});
  CHECK(r.code == 4);
  CHECK(r.err.find("perfect groups only") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("parse errors exit with code 2") {
  CHECK(run({"analyze", "bogus:1"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--case", "no-such-case"}).code == 2);
  CHECK(run({"pairing", "sl:2,5", "--subset", "7"}).code == 2);
}

TEST_CASE("budget violations exit with code 3") {
  CliResult oracle = run({"enumerate-regular", "--oracle", "alt:5"});
  CHECK(oracle.code == 3);
  CHECK(oracle.err.find("budget") != std::string::npos);
  CHECK(run({"analyze", "dihedral:16", "--max-order", "8"}).code == 3);
}

TEST_CASE("the oracle enumeration classifies every subgroup") {
  CliResult r = run({"enumerate-regular", "--oracle", "quaternion:8"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["oracle"] == true);
  CHECK(j["count"] == 28);
  CHECK(j["budget_used"].get<std::size_t>() > 0);
  std::size_t in_j = 0;
  for (const json& rec : j["records"])
    if (rec["in_J"] == true) ++in_j;
  CHECK(in_j == 2);
}

TEST_CASE("the oracle flag is required") {
  CHECK(run({"enumerate-regular", "quaternion:8"}).code == 2);
}

TEST_CASE("t-group reports the quotient type and table") {
  CliResult r = run({"t-group", "alt:5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["type"] == "C2");
  CHECK(j["order"] == 2);
  CHECK(j["table"] == json::parse("[[0,1],[1,0]]"));
}

TEST_CASE("pairing pairs a subset with its complement") {
  CliResult r = run({"pairing", "sl:2,5", "--subset", "0"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["subset"] == json::parse("[0]"));
  CHECK(j["complement"] == json::parse("[]"));
  CHECK(j["inversion_conjugates"] == true);
  CHECK(j["inversion_is_circ_iso"] == true);
  CHECK(j["centralizer_matches"] == true);
  CHECK(j["centralizer_checked"] == true);
}

TEST_CASE("opposite replacement of an abelian factor keeps the table") {
  CliResult r = run({"opposite-replace", "direct(alt:5,cyclic:3)", "--factor", "1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["table_unchanged"] == true);
  CHECK(j["iso_found"] == true);
  CHECK(j["replacement"]["order"] == 180);
}

TEST_CASE("opposite replacement needs a product-built group") {
  CHECK(run({"opposite-replace", "alt:5", "--factor", "0"}).code == 4);
}

TEST_CASE("verify runs a single case and reports it") {
  CliResult r = run({"verify", "--case", "cyclic-four-chain"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["cases"].size() == 1);
  CHECK(j["cases"][0]["name"] == "cyclic-four-chain");
  CHECK(j["cases"][0]["pass"] == true);
}

TEST_CASE("text format renders the same data as key/value lines") {
  CliResult r = run({"analyze", "sl:2,5", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("order: 120") != std::string::npos);
  CHECK(r.out.find("hol_order: 14400") != std::string::npos);
  CHECK(r.out.find("{") == std::string::npos);
}

TEST_CASE("help exits zero and lists the subcommands") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate-normal-regular") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}
