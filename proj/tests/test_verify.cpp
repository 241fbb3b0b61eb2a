#include <fstream>

#include "doctest.h"
#include "penonlab/scenarios.hpp"

using namespace penonlab;
using verify::Report;
using verify::RunConfig;

namespace {

RunConfig quick_config() {
  RunConfig c;
  c.pasting_cap = 4;  // keep the oracle scenario fast in unit tests
  c.pasting_universe_cap = 4;
  c.braid_pairs = 40;
  c.braid_max_strands = 3;
  c.braid_max_len = 6;
  return c;
}

}  // namespace

TEST_CASE("every named scenario passes with the default presentation") {
  RunConfig c = quick_config();
  for (const auto& name : verify::kScenarioNames) {
    Report r = verify::run_scenario(name, c);
    CAPTURE(name);
    CHECK(r.verdict == Report::Verdict::Pass);
    CHECK(verify::exit_code(r) == 0);
    std::string why;
    CHECK_MESSAGE(verify::matches_report_schema(verify::to_json(r), &why), why);
  }
}

TEST_CASE("unknown scenario and bad configuration exit with code 2") {
  Report r = verify::run_scenario("does-not-exist", quick_config());
  CHECK(r.verdict == Report::Verdict::Error);
  CHECK(verify::exit_code(r) == 2);

  RunConfig c = quick_config();
  c.mode_override = glob::Mode::Reflexive;
  Report sketch = verify::run_scenario("braiding-sketch", c);
  CHECK(sketch.verdict == Report::Verdict::Error);
  CHECK(verify::exit_code(sketch) == 2);
}

TEST_CASE("run-all aggregates and stays deterministic for a fixed seed") {
  RunConfig c = quick_config();
  Report a = verify::run_all(c);
  CHECK(a.verdict == Report::Verdict::Pass);
  CHECK(verify::exit_code(a) == 0);
  Report b = verify::run_all(c);
  CHECK(verify::to_json(a).dump() == verify::to_json(b).dump());

  // every scenario result is embedded in fixed order
  for (const auto& name : verify::kScenarioNames)
    CHECK(a.details["scenarios"].contains(name));
}

TEST_CASE("run-all propagates a scenario error as exit 2") {
  RunConfig c = quick_config();
  c.mode_override = glob::Mode::Reflexive;  // braiding-sketch cannot run reflexive
  Report all = verify::run_all(c);
  CHECK(all.verdict == Report::Verdict::Error);
  CHECK(verify::exit_code(all) == 2);
}

TEST_CASE("reports validate against the published schema file") {
  std::ifstream in(std::string(PENONLAB_SOURCE_DIR) + "/docs/report.schema.json");
  REQUIRE_MESSAGE(bool(in), "schema file present");
  nlohmann::json schema;
  in >> schema;
  // keep the structural checker aligned with the published schema
  CHECK(schema["required"] ==
        nlohmann::json({"scenario", "verdict", "config", "witnesses", "details"}));
  CHECK(schema["properties"]["verdict"]["enum"] == nlohmann::json({"pass", "fail", "error"}));

  nlohmann::json good = {{"scenario", "x"},
                         {"verdict", "pass"},
                         {"config", nlohmann::json::object()},
                         {"witnesses", nlohmann::json::array()},
                         {"details", nlohmann::json::object()}};
  CHECK(verify::matches_report_schema(good));
  nlohmann::json failing = good;
  failing["verdict"] = "fail";
  CHECK_FALSE(verify::matches_report_schema(failing));  // fail without witnesses
  failing["witnesses"].push_back({{"w", 1}});
  CHECK(verify::matches_report_schema(failing));
  nlohmann::json unknown = good;
  unknown["other"] = 1;
  CHECK_FALSE(verify::matches_report_schema(unknown));
}

TEST_CASE("user-supplied presentations flow through the scenarios") {
  RunConfig c = quick_config();
  // a doubly degenerate presentation with three 2-cells and fresh names
  glob::Presentation p(3, glob::Mode::NonReflexive);
  p.add_cell(0, "o");
  p.add_cell(1, "u");
  p.set_src(1, "u", "o");
  p.set_tgt(1, "u", "o");
  for (const char* g : {"x", "y", "z"}) {
    p.add_cell(2, g);
    p.set_src(2, g, "u");
    p.set_tgt(2, g, "u");
  }
  c.input = p;
  Report r = verify::run_scenario("clockface-nonreflexive", c);
  CHECK(r.verdict == Report::Verdict::Pass);

  // mismatched mode is a configuration error
  Report bad = verify::run_scenario("eckmann-hilton-reflexive", c);
  CHECK(bad.verdict == Report::Verdict::Error);
  CHECK(verify::exit_code(bad) == 2);
}
