#include <doctest.h>

#include "qrf/scenario.hpp"

using namespace qrf;

TEST_CASE("builtin scenarios are listed and parse") {
  const auto names = builtin_scenario_names();
  REQUIRE(names.size() == 2);
  CHECK(is_builtin_scenario("example1"));
  CHECK(is_builtin_scenario("example2"));
  CHECK_FALSE(is_builtin_scenario("example3"));
  for (const auto& name : names) {
    Scenario sc = parse_scenario(builtin_scenario(name), name);
    CHECK(sc.group_name == "Z2");
    CHECK(sc.frames == 2);
    CHECK(sc.physical.size() == 2);
    CHECK_FALSE(builtin_scenario_summary(name).empty());
  }
}

TEST_CASE("the first builtin scenario reproduces its expected outputs") {
  Scenario sc = parse_scenario(builtin_scenario("example1"), "example1");
  RunReport report = run_scenario(sc);
  CHECK(report.passed);
  // the transform entry carries the resulting state
  bool saw_transform = false;
  for (const auto& a : report.actions)
    if (a.value("action", "") == "transform") {
      saw_transform = true;
      CHECK(a.contains("state"));
    }
  CHECK(saw_transform);
}

TEST_CASE("the second builtin scenario reproduces its expected outputs") {
  Scenario sc = parse_scenario(builtin_scenario("example2"), "example2");
  RunReport report = run_scenario(sc);
  CHECK(report.passed);

  const std::string human = emit_report(report, "human");
  CHECK(human.find("concurrence") != std::string::npos);
  CHECK(human.find("PASS") != std::string::npos);

  // machine form round-trips to an equal report
  const std::string machine = emit_report(report, "machine");
  RunReport back = run_report_from_machine(machine);
  CHECK(back.scenario == report.scenario);
  CHECK(back.passed == report.passed);
  CHECK(back.actions == report.actions);
  CHECK(emit_report(back, "machine") == machine);
}

TEST_CASE("identical runs give byte-identical machine reports") {
  Scenario sc = parse_scenario(builtin_scenario("example2"), "example2");
  const std::string a = emit_report(run_scenario(sc), "machine");
  const std::string b = emit_report(run_scenario(sc), "machine");
  CHECK(a == b);
}

TEST_CASE("unknown groups are reported by name") {
  ojson doc = builtin_scenario("example1");
  doc["group"] = "Z5x";
  try {
    parse_scenario(doc, "bad");
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ValidationError);
    CHECK(std::string(e.what()).find("Z5x") != std::string::npos);
  }
}

TEST_CASE("scenario validation catches malformed documents") {
  ojson doc = builtin_scenario("example1");

  ojson bad_schema = doc;
  bad_schema["schema"] = "something/9";
  CHECK_THROWS_AS(parse_scenario(bad_schema, "x"), Error);

  ojson bad_action = doc;
  bad_action["actions"].push_back(ojson{{"frobnicate", 1}});
  CHECK_THROWS_AS(parse_scenario(bad_action, "x"), Error);

  ojson bad_cut = doc;
  bad_cut["actions"][0]["check"]["cut"] = ojson::array({ojson::array({1}), ojson::array({1})});
  CHECK_THROWS_AS(parse_scenario(bad_cut, "x"), Error);

  ojson bad_frame = doc;
  bad_frame["actions"].push_back(
      ojson{{"transform", {{"kind", "passive"}, {"from", 1}, {"to", 7}}}});
  CHECK_THROWS_AS(parse_scenario(bad_frame, "x"), Error);

  ojson same_frames = doc;
  same_frames["actions"].push_back(
      ojson{{"transform", {{"kind", "passive"}, {"from", 2}, {"to", 2}}}});
  CHECK_THROWS_AS(parse_scenario(same_frames, "x"), Error);

  ojson bad_state = doc;
  bad_state["state"] = "example9";
  CHECK_THROWS_AS(parse_scenario(bad_state, "x"), Error);
}

TEST_CASE("custom scenarios: inline table, basis state, passive hop, suite action") {
  ojson doc = {
      {"schema", "qrflab.scenario/1"},
      {"group", {{"table", {{0, 1}, {1, 0}}}}},
      {"frames", 2},
      {"physical", {{{"rep", "qubit"}}, {{"rep", "qubit"}}}},
      {"state", {{"basis", {0, 1, 0, 0}}}},
      {"actions",
       {{{"transform", {{"kind", "passive"}, {"from", 1}, {"to", 2}}}},
        {{"check", {{"kind", "conditionals"}, {"expect_any_nonseparable", false}}}},
        {{"check",
          {{"kind", "suite"}, {"suite", "theorem"}, {"trials", 10}, {"seed", 4}}}}}}};
  // inline tables have no builtin qubit action; use explicit matrices instead
  doc["physical"] = ojson::array();
  ojson sx = {{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}};
  ojson id = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};
  doc["physical"].push_back(ojson{{"rep", {{"matrices", {id, sx}}}}});
  doc["physical"].push_back(ojson{{"rep", {{"matrices", {id, sx}}}}});

  Scenario sc = parse_scenario(doc, "custom");
  CHECK(sc.group_name == "custom");
  CHECK(sc.physical_names == std::vector<std::string>{"inline", "inline"});
  RunReport report = run_scenario(sc);
  CHECK(report.passed);

  // the embedded suite report is attached
  bool saw_suite = false;
  for (const auto& a : report.actions)
    if (a.value("kind", "") == "suite") {
      saw_suite = true;
      CHECK(a["report"]["suite"] == "theorem");
      CHECK(a["report"]["trials_run"] == 10);
      CHECK(a["report"]["passed"] == true);
    }
  CHECK(saw_suite);
}

TEST_CASE("overrides replace suite parameters") {
  ojson doc = builtin_scenario("example1");
  doc["actions"] = ojson::array(
      {ojson{{"check", {{"kind", "suite"}, {"suite", "no-creation"}, {"trials", 50}}}}});
  Scenario sc = parse_scenario(doc, "with-suite");
  ScenarioOverrides ov;
  ov.trials = 5;
  ov.seed = 99;
  RunReport report = run_scenario(sc, ov);
  CHECK(report.passed);
  CHECK(report.actions[0]["report"]["trials_run"] == 5);
  CHECK(report.actions[0]["report"]["seed"] == 99);
}

TEST_CASE("representation specs resolve and reject unknowns") {
  FiniteGroup z3 = builtin_group("Z3");
  std::string name;
  Representation r1 = representation_from_spec(ojson("regular"), "Z3", z3, name);
  CHECK(name == "regular");
  CHECK(r1.dim() == 3);
  Representation r2 = representation_from_spec(ojson{{"trivial", 4}}, "Z3", z3, name);
  CHECK(name == "trivial:4");
  CHECK(r2.dim() == 4);
  CHECK_THROWS_AS(representation_from_spec(ojson("nonsense"), "Z3", z3, name), Error);
}

TEST_CASE("named example states require the four-qubit layout") {
  ojson doc = builtin_scenario("example1");
  doc["group"] = "Z3";
  try {
    parse_scenario(doc, "bad-layout");
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ValidationError);
  }
}

TEST_CASE("passive transforms on out-of-domain states surface as errors") {
  ojson doc = builtin_scenario("example1");
  doc["state"] = ojson{{"basis", {1, 0, 0, 0}}};  // frame 1 off the identity
  doc["actions"] = ojson::array(
      {ojson{{"transform", {{"kind", "passive"}, {"from", 1}, {"to", 2}}}}});
  Scenario sc = parse_scenario(doc, "off-domain");
  try {
    run_scenario(sc);
    FAIL("expected DomainViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Err::DomainViolation);
  }
}
