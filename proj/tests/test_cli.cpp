#include "doctest.h"

#include "support/oracles.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace oracles = mitosiskit::oracles;
using Json = nlohmann::ordered_json;

std::string cli_path() { return MITOSISKIT_CLI_PATH; }
std::string fixture_dir() { return MITOSISKIT_FIXTURE_DIR; }

oracles::CommandResult run_cli(const std::string& args) {
  return oracles::run_command("\"" + cli_path() + "\" " + args + " 2>/dev/null");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture file: ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("identical invocations produce identical bytes") {
  for (const char* args :
       {"volpoly --family sgz --n 2", "build --family gz-a --n 3",
        "mitosis --family ddo-c2 --ops 2,1,2", "ring-ranks --family gz-a --n 3"}) {
    CAPTURE(args);
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.output == b.output);
    CHECK_FALSE(a.output.empty());
  }
}

TEST_CASE("thread cap does not change the output") {
  auto plain = run_cli("ring-ranks --family gz-a --n 3");
  auto capped = oracles::run_command("MITOSIS_KIT_THREADS=1 \"" + cli_path() +
                                     "\" ring-ranks --family gz-a --n 3 2>/dev/null");
  CHECK(plain.status == 0);
  CHECK(capped.status == 0);
  CHECK(plain.output == capped.output);
}

TEST_CASE("golden outputs") {
  const std::pair<const char*, const char*> cases[] = {
      {"build --family gz-a --n 3", "build_gz_a_3.json"},
      {"volpoly --family sgz --n 2", "volpoly_sgz_2.json"},
      {"mitosis --family ddo-c2 --ops 2,1,2 --render text", "mitosis_ddo_c2_212.txt"},
      {"degree-check --family gz-a --n 3 --word 1,2 --lambda 3,0,-3",
       "degree_check_gz_a_3_word_1_2.json"},
      {"structconst --family gz-a --n 3 --u 1,2 --v 2,1", "structconst_gz_a_3.json"},
      {"ring-ranks --family gz-a --n 3", "ring_ranks_gz_a_3.json"},
  };
  for (const auto& [args, fixture] : cases) {
    CAPTURE(args);
    auto r = run_cli(args);
    CHECK(r.status == 0);
    CHECK(r.output == slurp(fixture_dir() + "/" + fixture));
  }
}

TEST_CASE("volpoly emits the symplectic closed form") {
  auto r = run_cli("volpoly --family sgz --n 2");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.output);
  CHECK(j.at("family") == "sgz");
  const auto& terms = j.at("volume_polynomial").at("terms");
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].at("exponents") == Json::array({1, 3}));
  CHECK(terms[0].at("coeff") == "-1/6");
  CHECK(terms[1].at("exponents") == Json::array({3, 1}));
  CHECK(terms[1].at("coeff") == "1/6");
}

TEST_CASE("degree-check reports an exact match at a pinned weight") {
  auto r = run_cli("degree-check --family gz-a --n 3 --word 1,2 --lambda 3,0,-3");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.output);
  CHECK(j.at("match") == true);
  CHECK(j.at("length") == 2);
  REQUIRE(j.at("rows").size() == 1);
  CHECK(j.at("rows")[0].at("degree") == "27");
  CHECK(j.at("rows")[0].at("scaled_sum") == "27");
  CHECK(j.at("rows")[0].at("match") == true);
}

TEST_CASE("mitosis renders faces as json and text") {
  auto j = run_cli("mitosis --family ddo-c2 --ops 2,1,2");
  REQUIRE(j.status == 0);
  const Json parsed = Json::parse(j.output);
  REQUIRE(parsed.at("faces").size() == 3);
  CHECK(parsed.at("faces")[0].at("cells") == Json::array({Json::array({2, 1})}));
  CHECK(parsed.at("faces")[1].at("cells") == Json::array({Json::array({3, 2})}));
  CHECK(parsed.at("faces")[2].at("cells") == Json::array({Json::array({2, 2})}));

  auto t = run_cli("mitosis --family ddo-c2 --ops 2,1,2 --render text");
  REQUIRE(t.status == 0);
  CHECK(t.output ==
        "  .\n+ .\n  .\n"
        "\n"
        "  .\n. .\n  +\n"
        "\n"
        "  .\n. +\n  .\n");
}

TEST_CASE("ring-ranks carries the rank vector and its total") {
  auto r = run_cli("ring-ranks --family gz-a --n 3");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.output);
  CHECK(j.at("ranks") == Json::array({1, 2, 2, 1}));
  CHECK(j.at("total") == 6);
}

TEST_CASE("conjecture-report covers the full rank-two Weyl group") {
  auto r = run_cli("conjecture-report --n 2 --rows 2");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.output);
  CHECK(j.at("verified") == true);
  CHECK(j.at("entries").size() == 8);
}

TEST_CASE("exit codes distinguish usage and mathematical failures") {
  CHECK(run_cli("--help").status == 0);
  // Missing required option.
  CHECK(run_cli("degree-check --family gz-a --n 3").status == 1);
  // Unknown family name.
  CHECK(run_cli("build --family nope --n 2").status == 1);
  // Non-reduced word.
  CHECK(run_cli("degree-check --family gz-a --n 3 --word 1,1").status == 1);
  // Self-intersection is not transverse: a mathematical failure.
  auto r = run_cli("structconst --family gz-a --n 3 --u 1,2 --v 1,2");
  CHECK(r.status == 2);
  const Json j = Json::parse(r.output);
  CHECK(j.contains("error"));
  // Cone-only family has no polytope members.
  CHECK(run_cli("volpoly --family string-c --n 2").status == 2);
}
