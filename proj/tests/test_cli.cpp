#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MTP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

// every JSON record must carry the fixed schema
void validate_schema(const json& j, const std::string& command) {
  REQUIRE(j.is_object());
  REQUIRE(j.contains("schema_version"));
  CHECK(j["schema_version"].is_number_integer());
  CHECK(j["schema_version"].get<int>() == 1);
  REQUIRE(j.contains("command"));
  CHECK(j["command"].get<std::string>() == command);
  REQUIRE(j.contains("inputs"));
  CHECK(j["inputs"].is_object());
  REQUIRE(j.contains("results"));
  CHECK(j["results"].is_object());
  REQUIRE(j.contains("diagnostics"));
  CHECK(j["diagnostics"].is_array());
}

json parse_record(const std::string& out, const std::string& command) {
  json j = json::parse(out);
  validate_schema(j, command);
  return j;
}

} // namespace

TEST_CASE("rootsys command") {
  auto r = run_cli("rootsys A2 --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "rootsys");
  CHECK(j["results"]["num_roots"] == 6);
  CHECK(j["results"]["num_positive"] == 3);
  CHECK(j["results"]["n_phi"] == 1);
  CHECK(j["results"]["num_metaplectic"] == 6);
  CHECK(j["results"]["weyl_order"] == 6);

  auto g2 = run_cli("rootsys G2 --json");
  REQUIRE(g2.exit_code == 0);
  json jg = parse_record(g2.out, "rootsys");
  CHECK(jg["results"]["num_roots"] == 12);
  CHECK(jg["results"]["num_metaplectic"] == 12);

  CHECK(run_cli("rootsys Z9").exit_code == 2);
  CHECK(run_cli("rootsys Z9 --json").exit_code == 2);
}

TEST_CASE("mgroup command") {
  auto r = run_cli("mgroup A1 --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "mgroup");
  CHECK(j["results"]["order"] == 4);
  CHECK(j["results"]["pseudospherical_dim"] == 1);
  CHECK(j["results"]["genuine_character_count"] == 2);
  CHECK(j["results"]["pseudospherical_character_count"] == 2);

  auto a2 = run_cli("mgroup A2 --json");
  json ja = parse_record(a2.out, "mgroup");
  CHECK(ja["results"]["order"] == 8);
  CHECK(ja["results"]["pseudospherical_dim"] == 2);

  auto b2 = run_cli("mgroup B2 --json");
  json jb = parse_record(b2.out, "mgroup");
  CHECK(jb["results"]["order"] == 8);
  CHECK(jb["results"]["abelian"] == true);
  CHECK(jb["results"]["pseudospherical_dim"] == 1);

  CHECK(run_cli("mgroup A17").exit_code == 2);
}

TEST_CASE("cfun command") {
  auto r = run_cli("cfun --n 0 --s 1 --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "cfun");
  CHECK(j["results"]["closed_form"]["kind"] == "finite");
  CHECK(std::abs(j["results"]["closed_form"]["re"].get<double>() - 3.14159265358979) < 1e-10);

  auto o = run_cli("cfun --n 1 --s 1 --oracle --json");
  REQUIRE(o.exit_code == 0);
  json jo = parse_record(o.out, "cfun");
  CHECK(jo["results"]["rel_diff"].get<double>() < 1e-8);
  CHECK(std::abs(jo["results"]["closed_form"]["re"].get<double>() - 2.8284271247461903) < 1e-10);

  // a pole is a value, not a failure
  auto p = run_cli("cfun --n 2 --s 0 --json");
  REQUIRE(p.exit_code == 0);
  json jp = parse_record(p.out, "cfun");
  CHECK(jp["results"]["closed_form"]["kind"] == "pole");

  CHECK(run_cli("cfun --n 0 --s nonsense").exit_code == 2);
  CHECK(run_cli("cfun --s 1").exit_code == 2); // missing required --n
}

TEST_CASE("cfactor command") {
  auto r = run_cli("cfactor --type B2 --word \"1 2 1 2\" --s 0.7,1.3 --all-words --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "cfactor");
  CHECK(j["results"]["value"]["kind"] == "finite");
  CHECK(j["results"]["max_pairwise_rel_deviation"].get<double>() < 1e-10);
  CHECK(j["results"]["all_words"].size() == 2);
  CHECK(j["results"]["trace"].size() == 4);

  auto a2 = run_cli("cfactor --type A2 --word 1 --s 1,2 --json");
  REQUIRE(a2.exit_code == 0);
  json ja = parse_record(a2.out, "cfactor");
  CHECK(std::abs(ja["results"]["value"]["re"].get<double>() - 2.8284271247461903) < 1e-10);

  // non-reduced word is a usage error
  CHECK(run_cli("cfactor --type A2 --word \"1 1\" --s 1,2").exit_code == 2);
  // wrong parameter arity
  CHECK(run_cli("cfactor --type A2 --word 1 --s 1").exit_code == 2);
}

TEST_CASE("verify command") {
  auto r = run_cli("verify kubota --json");
  CHECK(r.exit_code == 0);
  json j = parse_record(r.out, "verify");
  CHECK(j["results"]["all_passed"] == true);
  for (const auto& c : j["results"]["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c["pass"] == true);
  }
  CHECK(run_cli("verify nosuch").exit_code == 2);
  CHECK(run_cli("verify intertwine").exit_code == 0);
}

TEST_CASE("table command") {
  auto r = run_cli("table --type A1 --re 0.1:3:30");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(r.out) == 31); // header + 30 rows
  CHECK(r.out.substr(0, r.out.find('\n')) == "s1_re,s1_im,c_re,c_im,pole");

  auto b2 = run_cli("table --type B2 --word \"1 2 1 2\" --re 0.5:2:5,0.5:2:5");
  REQUIRE(b2.exit_code == 0);
  CHECK(count_lines(b2.out) == 26); // header + 25 rows

  CHECK(run_cli("table --type A1 --re 1:0:5").exit_code == 2); // empty range
  CHECK(run_cli("table --type A1 --re 0:1:0").exit_code == 2); // zero count
  CHECK(run_cli("table --type A1 --re 0.1:3:4 --format xml").exit_code == 2);

  auto js = run_cli("table --type A1 --re 0.5:1.5:3 --format json");
  REQUIRE(js.exit_code == 0);
  json j = parse_record(js.out, "table");
  CHECK(j["results"]["rows"].size() == 3);
}

TEST_CASE("verify --seed is honored and echoed") {
  auto r = run_cli("verify torus --seed 12345 --json");
  CHECK(r.exit_code == 0);
  json j = parse_record(r.out, "verify");
  CHECK(j["inputs"]["seed"] == 12345);
  CHECK(j["results"]["all_passed"] == true);
}

TEST_CASE("table with imaginary grids") {
  auto r = run_cli("table --type A1 --re 1:1:1 --im 0:2:3");
  REQUIRE(r.exit_code == 0);
  CHECK(count_lines(r.out) == 4); // header + 3 rows
  // per-coordinate grids on rank 2: 2 x (1*1) x (2*1) = re 2 x 1, im 1 x 2
  auto b2 = run_cli("table --type B2 --re 0.5:1:2,0.7:0.7:1 --im 0:0:1,0:1:2");
  REQUIRE(b2.exit_code == 0);
  CHECK(count_lines(b2.out) == 5); // header + 2*2 rows
}

TEST_CASE("cfun oracle outside the convergence region is skipped with a note") {
  auto r = run_cli("cfun --n 0 --s -1 --oracle --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "cfun");
  CHECK(j["results"]["closed_form"]["kind"] == "pole");
  CHECK(j["diagnostics"].size() == 1);
  CHECK_FALSE(j["results"].contains("quadrature"));
}

TEST_CASE("mgroup suppresses the character table when the center is huge") {
  auto r = run_cli("mgroup C16 --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "mgroup");
  CHECK(j["results"]["center_order"] == 131072);
  CHECK(j["results"]["genuine_character_count"] == 65536);
  CHECK_FALSE(j["results"].contains("genuine_characters"));
  CHECK(j["diagnostics"].size() == 1);
}

TEST_CASE("rootsys omits |W| when it exceeds 64 bits") {
  auto r = run_cli("rootsys A25 --json");
  REQUIRE(r.exit_code == 0);
  json j = parse_record(r.out, "rootsys");
  CHECK(j["results"]["num_roots"] == 650);
  CHECK_FALSE(j["results"].contains("weyl_order"));
  CHECK(j["diagnostics"].size() == 1);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::string& args :
       {std::string("rootsys B2 --json"), std::string("verify cfun --json"),
        std::string("table --type A1 --re 0.1:2:7"),
        std::string("cfactor --type G2 --word \"1 2\" --s 0.9,1.1 --all-words --json")}) {
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    CHECK(r1.exit_code == r2.exit_code);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("json output round-trips") {
  auto r = run_cli("mgroup B2 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  // reserialize and reparse: structurally identical
  json j2 = json::parse(j.dump());
  CHECK(j == j2);
}
