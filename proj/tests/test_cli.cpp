#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ajcable/cli.hpp"
#include "support.hpp"

using namespace ajcable;
using ajcable::testing::data_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ajcable");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ajcable_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string fixture_text() {
  std::ifstream in(data_path("fixtures/knots.kdb"));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("range") {
  const Run r = run({"range", "--eta-plus", "4", "--eta-minus", "2", "--test", "15"});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
  CHECK(run({"range", "--eta-plus", "4", "--eta-minus", "2", "--test", "-9"}).out == "true\n");
  const Run w = run({"range", "--eta-plus", "4", "--eta-minus", "2"});
  CHECK(w.out == "(r - 16)(r + 8) > 0, r odd\nr > 16 or r < -8, r odd\n");
  CHECK(run({"range", "--eta-plus", "-1", "--eta-minus", "2"}).code == 2);
}

TEST_CASE("verify the bundled 6_2 record") {
  const Run r = run({"verify", "--db", data_path("fixtures/knots.kdb"), "--knot", "6_2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Theorem hypotheses verified") != std::string::npos);
  CHECK(r.out.find("r > 16 or r < -8, r odd") != std::string::npos);

  const Run j = run({"verify", "--db", data_path("fixtures/knots.kdb"), "--emit", "-"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  const auto& k = doc["knots"][0];
  CHECK(k["verdict"] == "Theorem hypotheses verified");
  CHECK(k["admissible_r"]["condition"] == "(r - 16)(r + 8) > 0, r odd");
  CHECK(k["detN_L_free_degree"].get<int>() > 0);
  for (const auto& c : k["checks"]) {
    if (c["status"] == "attested") CHECK(c["name"] == "condition_ii_irreducible_C");
  }
}

TEST_CASE("even L-powers make det N vanish") {
  const std::string db =
      temp_file("even.kdb", "name = even\np = 5\nm = 2\neta_plus = 2\neta_minus = 2\naprime = L^2 - M^2 + 1\n");
  const Run r = run({"verify", "--db", db, "--emit", "-"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : doc["knots"][0]["checks"]) {
    if (c["name"] == "condition_iii_detN") {
      found = true;
      CHECK(c["status"] == "fail");
    }
  }
  CHECK(found);
}

TEST_CASE("mutated fixtures never exit 0 unless every check passes") {
  const std::string base = fixture_text();
  const std::vector<std::pair<std::string, std::string>> mutations{
      {"attest_irreducible_C = true", "attest_irreducible_C = false"},
      {"p = 11", "p = 13"},
      {"aprime = -L^5*M^26", "aprime = -L^5*M^27"},
      {"aprime = -L^5*M^26", "aprime = -L^6*M^26 - L^5*M^26"},
  };
  for (const auto& [from, to] : mutations) {
    std::string text = base;
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
    const Run r = run({"verify", "--db", temp_file("mutant.kdb", text), "--emit", "-"});
    CHECK_MESSAGE(r.code != 0, to);
    if (r.code == 0) continue;
    if (r.code == 1) {
      const auto doc = nlohmann::json::parse(r.out);
      bool any_bad = false;
      for (const auto& c : doc["knots"][0]["checks"]) {
        any_bad = any_bad || (c["status"] != "pass" && c["status"] != "attested");
      }
      CHECK(any_bad);
    }
  }
}

TEST_CASE("reports are byte-identical and independent of worker count") {
  const std::vector<std::string> args{"verify", "--db", data_path("tests/data/table31.kdb"), "--emit", "-"};
  setenv("AJCABLE_WORKERS", "1", 1);
  const Run a = run(args);
  setenv("AJCABLE_WORKERS", "3", 1);
  const Run b = run(args);
  unsetenv("AJCABLE_WORKERS");
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(a.out.find("timestamp") == std::string::npos);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["knots"].size() == 31);
  CHECK(doc["knots"][0]["name"] == "6_2");
  CHECK(doc["knots"][0]["verdict"] == "Theorem hypotheses verified");
}

TEST_CASE("bad worker count is a usage error") {
  setenv("AJCABLE_WORKERS", "zero", 1);
  CHECK(run({"verify", "--db", data_path("fixtures/knots.kdb")}).code == 2);
  unsetenv("AJCABLE_WORKERS");
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--db", "/nonexistent/file.kdb"}).code == 2);
  CHECK(run({"verify", "--db", temp_file("bad.kdb", "name = x\n")}).code == 2);
  CHECK(run({"verify", "--db", data_path("fixtures/knots.kdb"), "--knot", "3_1"}).code == 2);
  CHECK(run({"cable-apoly", "--db", data_path("fixtures/knots.kdb"), "--knot", "6_2", "-r", "4"}).code == 2);
}

TEST_CASE("cable-apoly") {
  const Run r = run({"cable-apoly", "--db", data_path("tests/data/figure_eight.kdb"), "--knot", "4_1", "-r", "-3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-L^4*M^16", 0) == 0);
  const Run s = run({"cable-apoly", "--db", data_path("fixtures/knots.kdb"), "--knot", "6_2", "-r", "17"});
  CHECK(s.code == 0);
  CHECK(s.out.find("L^7") != std::string::npos);
  CHECK(s.out.find("L^8") == std::string::npos);
}

TEST_CASE("annihilator subcommand") {
  const Run r = run({"annihilator", "--db", data_path("tests/data/figure_eight.kdb"), "--knot", "4_1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minor_identity") != std::string::npos);
  CHECK(r.out.find("square_identity") != std::string::npos);
  CHECK(r.out.find("beta = ") != std::string::npos);
  const Run g =
      run({"annihilator", "--db", data_path("tests/data/figure_eight.kdb"), "--knot", "4_1", "--general-t"});
  CHECK(g.code == 0);
  CHECK(g.out.find("symbolic t") != std::string::npos);

  const std::string singular =
      temp_file("singular.kdb", "name = s\np = 5\nm = 2\neta_plus = 2\neta_minus = 2\naprime = L^2 - M^2 + 1\n");
  CHECK(run({"annihilator", "--db", singular, "--knot", "s"}).code == 3);
}

TEST_CASE("fnv1a") {
  CHECK(cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
