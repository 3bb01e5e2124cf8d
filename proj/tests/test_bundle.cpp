#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"

using namespace osps;

namespace {

std::string write_temp(const std::string& content) {
  static int counter = 0;
  std::string path = "test_bundle_tmp_" + std::to_string(counter++) + ".json";
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("example bundle parses to the paper's system") {
  const auto& ex = test::example();
  CHECK(ex.sps.num_states() == 6);
  CHECK(ex.sps.lattice.size() == 10);
  CHECK(validate_sps(ex.sps).ok());
  CHECK(validate_property_ortho(ex.sps, ex.rel).ok());
  // include_bottom_pairs injected the bottom row
  CHECK(ex.rel.rows[static_cast<std::size_t>(ex.sps.lattice.bottom())] == full_mask(10));
}

TEST_CASE("triv2 bundle is the two-element chain") {
  const auto& t = test::triv2();
  CHECK(t.sps.lattice.size() == 2);
  CHECK(validate_sps(t.sps).ok());
}

TEST_CASE("round trip: parse after canonical dump is the identity") {
  for (const auto& [name, bundle] : bundled_fixtures()) {
    auto doc = bundle_to_json(bundle);
    auto reparsed = parse_bundle(nlohmann::json::parse(canonical_dump(doc)));
    CHECK(canonical_dump(bundle_to_json(reparsed)) == canonical_dump(doc));
    CAPTURE(name);
  }
}

TEST_CASE("canonical dump is deterministic and LF-only") {
  auto a = canonical_dump(bundle_to_json(example_bundle()));
  auto b = canonical_dump(bundle_to_json(example_bundle()));
  CHECK(a == b);
  CHECK(a.find('\r') == std::string::npos);
  CHECK(a.back() == '\n');
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] == '\n') CHECK(a[i - 1] != ' ');
}

TEST_CASE("dangling names are E-PARSE with a field path") {
  std::string path = write_temp(R"({
    "states": ["p"], "properties": ["0", "1"], "bottom": "0", "top": "1",
    "order": {"pairs": [["0", "1"]]},
    "xi": {"p": ["11"]}
  })");
  CHECK_THROWS_WITH_AS(load_bundle(path), doctest::Contains("xi.p"), Error);
  std::remove(path.c_str());
}

TEST_CASE("malformed json is E-PARSE") {
  std::string path = write_temp("{ not json");
  CHECK_THROWS_WITH_AS(load_bundle(path), doctest::Contains("E-PARSE"), Error);
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(load_bundle("no_such_file.ossp"), doctest::Contains("E-PARSE"), Error);
}

TEST_CASE("declared bottom must match the derived order") {
  std::string path = write_temp(R"({
    "states": ["p"], "properties": ["0", "1"], "bottom": "1", "top": "0",
    "order": {"pairs": [["0", "1"]]},
    "xi": {"p": ["1"]}
  })");
  CHECK_THROWS_WITH_AS(bundle_to_osps(load_bundle(path)),
                       doctest::Contains("not the lattice bottom"), Error);
  std::remove(path.c_str());
}

TEST_CASE("missing xi entry for a state is rejected") {
  std::string path = write_temp(R"({
    "states": ["p", "q"], "properties": ["0", "1"], "bottom": "0", "top": "1",
    "order": {"pairs": [["0", "1"]]},
    "xi": {"p": ["1"]}
  })");
  CHECK_THROWS_WITH_AS(load_bundle(path), doctest::Contains("missing entry for state 'q'"), Error);
  std::remove(path.c_str());
}

TEST_CASE("report emission") {
  Report rep;
  rep.command = "demo";
  rep.add("alpha", true);
  rep.add("beta", false, {"w1"});
  rep.skip("gamma", "not applicable");
  SUBCASE("text format is one prefixed line per check") {
    auto text = emit_report_text(rep);
    CHECK(text.find("PASS alpha\n") != std::string::npos);
    CHECK(text.find("FAIL beta\n") != std::string::npos);
    CHECK(text.find("SKIP gamma\n") != std::string::npos);
    CHECK(text.find("witness: w1") != std::string::npos);
  }
  SUBCASE("json format round-trips") {
    auto doc = nlohmann::json::parse(emit_report_json(rep));
    CHECK(doc["command"] == "demo");
    CHECK(doc["checks"].size() == 3);
    CHECK(doc["checks"][1]["status"] == "FAIL");
  }
  SUBCASE("empty report is a minimal document") {
    Report empty;
    auto doc = nlohmann::json::parse(emit_report_json(empty));
    CHECK(doc["checks"].empty());
    CHECK(doc["derived"].empty());
  }
}
