#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrf/serialize.hpp"
#include "qrf/verify.hpp"

namespace qrf {

/// CLI-level overrides applied to suite actions inside a scenario.
struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<long> trials;
  std::optional<double> tol;
};

struct TransformAction {
  bool perspectival = false;
  int from = 0, to = 0;
};

struct CheckAction {
  std::string kind;  // negativity | concurrence | standard_form | conditionals | state | suite
  double tol = 1e-9;
  std::vector<int> cut_a, cut_b;  // 1-based physical system indices (negativity)
  std::optional<double> expect_value;
  std::optional<bool> expect_standard;            // standard_form
  std::optional<bool> expect_any_nonseparable;    // conditionals
  int frame = 0;                                  // standard_form
  ojson expected_state;                           // state: [[re,im],...]
  SuiteKind suite = SuiteKind::Theorem;
  long suite_trials = 100;
  std::uint64_t suite_seed = 0;
  double suite_tol = 1e-9;
};

struct Action {
  std::optional<TransformAction> transform;
  std::optional<CheckAction> check;
};

struct Scenario {
  std::string name;
  std::string group_name;  // "custom" for inline tables
  FiniteGroup group;
  int frames = 2;
  std::vector<Representation> physical;
  std::vector<std::string> physical_names;
  PureState initial;
  std::vector<Action> actions;
};

/// Parses and validates a scenario document; every reference must resolve
/// and the initial state must match the declared layout.
Scenario parse_scenario(const ojson& doc, const std::string& name);

struct RunReport {
  std::string scenario;
  bool passed = true;
  ojson actions = ojson::array();
};

RunReport run_scenario(const Scenario& sc, const ScenarioOverrides& ov = {},
                       Execution exec = Execution::Parallel);

/// format is "human" or "machine". Machine output has a versioned schema tag
/// and deterministic bytes for a fixed scenario.
std::string emit_report(const RunReport& report, const std::string& format);

RunReport run_report_from_machine(const std::string& text);

std::vector<std::string> builtin_scenario_names();
bool is_builtin_scenario(const std::string& name);
ojson builtin_scenario(const std::string& name);
std::string builtin_scenario_summary(const std::string& name);

/// Representation named in a scenario: "qubit", "regular", {"trivial": d},
/// or {"matrices": [...]} with [re, im] entries.
Representation representation_from_spec(const ojson& spec, const std::string& group_name,
                                        const FiniteGroup& group, std::string& name_out);

}  // namespace qrf
