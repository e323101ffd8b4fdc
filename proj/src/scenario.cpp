#include "qrf/scenario.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace qrf {

namespace {

constexpr const char* kScenarioSchema = "qrflab.scenario/1";
constexpr const char* kRunReportSchema = "qrflab.run-report/1";

// ---------------------------------------------------------------- builtins

// Four qubits over Z2: two frames, two described systems. The initial
// coherence sits in frame 2; changing to frame 2 entangles the old frame
// with everything while A,B stay separable.
constexpr const char* kExample1 = R"json({
  "schema": "qrflab.scenario/1",
  "description": "frame coherence becomes frame entanglement; described systems stay separable",
  "group": "Z2",
  "frames": 2,
  "physical": [{"rep": "qubit"}, {"rep": "qubit"}],
  "state": "example1",
  "actions": [
    {"check": {"kind": "negativity", "cut": [[1], [2]], "expect": 0.0, "tol": 1e-9}},
    {"transform": {"kind": "perspectival", "from": 1, "to": 2}},
    {"check": {"kind": "state", "tol": 1e-12, "amplitudes": [
      [0.7071067811865476, 0], [0, 0], [0, 0], [0, 0],
      [0, 0], [0, 0], [0, 0], [0, 0],
      [0, 0], [0, 0], [0, 0], [0.7071067811865476, 0],
      [0, 0], [0, 0], [0, 0], [0, 0]]}},
    {"check": {"kind": "negativity", "cut": [[1], [2]], "expect": 0.0, "tol": 1e-9}},
    {"check": {"kind": "concurrence", "expect": 0.0, "tol": 1e-9}}
  ]
})json";

// Same layout; the frames start correlated with A,B, so the frame change
// leaves A,B in a Bell state.
constexpr const char* kExample2 = R"json({
  "schema": "qrflab.scenario/1",
  "description": "frame change creating entanglement between the described systems",
  "group": "Z2",
  "frames": 2,
  "physical": [{"rep": "qubit"}, {"rep": "qubit"}],
  "state": "example2",
  "actions": [
    {"check": {"kind": "concurrence", "expect": 0.0, "tol": 1e-9}},
    {"check": {"kind": "negativity", "cut": [[1], [2]], "expect": 0.0, "tol": 1e-9}},
    {"transform": {"kind": "perspectival", "from": 1, "to": 2}},
    {"check": {"kind": "state", "tol": 1e-12, "amplitudes": [
      [0.5, 0], [0, 0], [0, 0], [0, 0.5],
      [0, 0], [0, 0], [0, 0], [0, 0],
      [0.5, 0], [0, 0], [0, 0], [0, 0.5],
      [0, 0], [0, 0], [0, 0], [0, 0]]}},
    {"check": {"kind": "concurrence", "expect": 1.0, "tol": 1e-9}},
    {"check": {"kind": "standard_form", "frame": 2, "expect": true, "tol": 1e-9}}
  ]
})json";

const std::map<std::string, const char*>& builtin_table() {
  static const std::map<std::string, const char*> table = {
      {"example1", kExample1},
      {"example2", kExample2},
  };
  return table;
}

// ---------------------------------------------------------------- states

PureState named_state(const std::string& name, const Scenario& sc) {
  const FactorSpec spec = FrameConfig(sc.group, sc.frames, sc.physical).spec();
  const bool four_qubits = sc.group.order() == 2 && sc.frames == 2 &&
                           spec.physical_count() == 2 && spec.physical_dim() == 4;
  if (!four_qubits)
    fail(Err::ValidationError,
         "state \"" + name + "\" needs two Z2 frames and two qubit systems");
  const double s = std::sqrt(0.5);
  Vec amps = Vec::Zero(16);
  if (name == "example1") {
    // |0>_1 |+>_2 |00>_AB
    amps(spec.flatten({0, 0, 0, 0})) = s;
    amps(spec.flatten({0, 1, 0, 0})) = s;
  } else if (name == "example2") {
    // (|00> Phi_{+i} + i |01> Phi_{-i})/sqrt(2), Phi_a = (|00> + a|11>)/sqrt(2)
    amps(spec.flatten({0, 0, 0, 0})) = 0.5;
    amps(spec.flatten({0, 0, 1, 1})) = cxd(0.0, 0.5);
    amps(spec.flatten({0, 1, 0, 0})) = cxd(0.0, 0.5);
    amps(spec.flatten({0, 1, 1, 1})) = 0.5;  // i * (-i) = 1
  } else {
    fail(Err::ValidationError, "unknown named state \"" + name + "\"");
  }
  return PureState(spec, std::move(amps));
}

Mat matrix_from_json(const ojson& rows) {
  if (!rows.is_array() || rows.empty()) fail(Err::ParseError, "matrix must be a nonempty array");
  Mat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) fail(Err::ParseError, "ragged matrix");
    for (size_t c = 0; c < rows[r].size(); ++c) {
      const auto& z = rows[r][c];
      if (!z.is_array() || z.size() != 2) fail(Err::ParseError, "matrix entries are [re, im]");
      m(r, c) = cxd(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

}  // namespace

Representation representation_from_spec(const ojson& spec, const std::string& group_name,
                                        const FiniteGroup& group, std::string& name_out) {
  ojson rep = spec;
  if (rep.is_object() && rep.contains("rep")) rep = rep["rep"];
  if (rep.is_string()) {
    const std::string s = rep.get<std::string>();
    if (s == "qubit") {
      name_out = "qubit";
      return builtin_qubit_representation(group_name, group);
    }
    if (s == "regular") {
      name_out = "regular";
      return Representation::regular(group);
    }
    fail(Err::ParseError, "unknown representation \"" + s + "\"");
  }
  if (rep.is_object() && rep.contains("trivial")) {
    const int d = rep["trivial"].get<int>();
    name_out = "trivial:" + std::to_string(d);
    return Representation::trivial(group, d);
  }
  if (rep.is_object() && rep.contains("matrices")) {
    const auto& mats_json = rep["matrices"];
    std::vector<Mat> mats;
    for (const auto& mj : mats_json) mats.push_back(matrix_from_json(mj));
    name_out = "inline";
    return Representation::from_matrices(group, std::move(mats));
  }
  fail(Err::ParseError, "representation must be \"qubit\", \"regular\", {\"trivial\": d} or "
                        "{\"matrices\": [...]}");
}

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : builtin_table()) names.push_back(name);
  return names;
}

bool is_builtin_scenario(const std::string& name) { return builtin_table().count(name) > 0; }

ojson builtin_scenario(const std::string& name) {
  auto it = builtin_table().find(name);
  if (it == builtin_table().end())
    fail(Err::ValidationError, "unknown builtin scenario \"" + name + "\"");
  return ojson::parse(it->second);
}

std::string builtin_scenario_summary(const std::string& name) {
  return builtin_scenario(name).value("description", "");
}

namespace {

CheckAction parse_check(const ojson& j, const Scenario& sc) {
  CheckAction c;
  if (!j.is_object() || !j.contains("kind")) fail(Err::ParseError, "check needs a \"kind\"");
  c.kind = j["kind"].get<std::string>();
  c.tol = j.value("tol", 1e-9);
  const int n_phys = static_cast<int>(sc.physical.size());

  if (c.kind == "negativity") {
    const auto& cut = j.at("cut");
    if (!cut.is_array() || cut.size() != 2) fail(Err::ParseError, "cut must be [side_a, side_b]");
    std::vector<int> seen(n_phys, 0);
    for (int side = 0; side < 2; ++side)
      for (const auto& idx : cut[side]) {
        const int p = idx.get<int>();
        if (p < 1 || p > n_phys)
          fail(Err::ValidationError, "cut names physical system " + std::to_string(p));
        ++seen[p - 1];
        (side == 0 ? c.cut_a : c.cut_b).push_back(p);
      }
    for (int p = 0; p < n_phys; ++p)
      if (seen[p] != 1)
        fail(Err::ValidationError,
             "cut must name each physical system exactly once (system " + std::to_string(p + 1) +
                 " appears " + std::to_string(seen[p]) + " times)");
    if (j.contains("expect")) c.expect_value = j["expect"].get<double>();
  } else if (c.kind == "concurrence") {
    if (j.contains("expect")) c.expect_value = j["expect"].get<double>();
  } else if (c.kind == "standard_form") {
    c.frame = j.at("frame").get<int>();
    if (c.frame < 1 || c.frame > sc.frames)
      fail(Err::ValidationError, "standard_form frame " + std::to_string(c.frame));
    if (j.contains("expect")) c.expect_standard = j["expect"].get<bool>();
  } else if (c.kind == "conditionals") {
    if (j.contains("expect_any_nonseparable"))
      c.expect_any_nonseparable = j["expect_any_nonseparable"].get<bool>();
  } else if (c.kind == "state") {
    c.expected_state = j.at("amplitudes");
    c.tol = j.value("tol", 1e-12);
  } else if (c.kind == "suite") {
    try {
      c.suite = suite_from_name(j.at("suite").get<std::string>());
    } catch (const Error&) {
      fail(Err::ParseError, "unknown suite \"" + j.at("suite").get<std::string>() + "\"");
    }
    c.suite_trials = j.value("trials", 100L);
    c.suite_seed = j.value("seed", 0ULL);
    c.suite_tol = j.value("tol", c.suite == SuiteKind::Oracle ? 1e-12 : 1e-9);
  } else {
    fail(Err::ParseError, "unknown check kind \"" + c.kind + "\"");
  }
  return c;
}

}  // namespace

Scenario parse_scenario(const ojson& doc, const std::string& name) {
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kScenarioSchema)
    fail(Err::ParseError, std::string("expected schema \"") + kScenarioSchema + "\"");
  Scenario sc;
  sc.name = name;

  const auto& g = doc.at("group");
  if (g.is_string()) {
    sc.group_name = g.get<std::string>();
    sc.group = builtin_group(sc.group_name);
  } else if (g.is_object() && g.contains("table")) {
    sc.group_name = "custom";
    sc.group = FiniteGroup::from_table(g["table"].get<std::vector<std::vector<int>>>());
  } else {
    fail(Err::ParseError, "group must be a builtin name or {\"table\": [...]}");
  }

  sc.frames = doc.at("frames").get<int>();
  if (sc.frames < 1) fail(Err::ValidationError, "frames must be >= 1");

  if (!doc.contains("physical") || !doc["physical"].is_array() || doc["physical"].empty())
    fail(Err::ValidationError, "at least one physical system is required");
  for (const auto& p : doc["physical"]) {
    std::string rep_name;
    sc.physical.push_back(representation_from_spec(p, sc.group_name, sc.group, rep_name));
    sc.physical_names.push_back(rep_name);
  }

  const FactorSpec spec = FrameConfig(sc.group, sc.frames, sc.physical).spec();
  const auto& st = doc.at("state");
  if (st.is_string()) {
    sc.initial = named_state(st.get<std::string>(), sc);
  } else if (st.is_object() && st.contains("amplitudes")) {
    const auto& amps_json = st["amplitudes"];
    Vec amps(amps_json.size());
    for (size_t i = 0; i < amps_json.size(); ++i) {
      if (!amps_json[i].is_array() || amps_json[i].size() != 2)
        fail(Err::ParseError, "amplitudes are [re, im] pairs");
      amps(i) = cxd(amps_json[i][0].get<double>(), amps_json[i][1].get<double>());
    }
    sc.initial = PureState(spec, std::move(amps));
  } else if (st.is_object() && st.contains("basis")) {
    sc.initial = basis_state(spec, st["basis"].get<std::vector<int>>());
  } else {
    fail(Err::ParseError, "state must be a builtin name, {\"amplitudes\": ...} or {\"basis\": ...}");
  }

  if (!doc.contains("actions") || !doc["actions"].is_array())
    fail(Err::ParseError, "actions must be an array");
  for (const auto& a : doc["actions"]) {
    Action act;
    if (a.is_object() && a.contains("transform")) {
      const auto& t = a["transform"];
      TransformAction ta;
      const std::string kind = t.at("kind").get<std::string>();
      if (kind == "perspectival")
        ta.perspectival = true;
      else if (kind == "passive")
        ta.perspectival = false;
      else
        fail(Err::ParseError, "transform kind must be \"perspectival\" or \"passive\"");
      ta.from = t.at("from").get<int>();
      ta.to = t.at("to").get<int>();
      if (ta.from < 1 || ta.from > sc.frames || ta.to < 1 || ta.to > sc.frames)
        fail(Err::ValidationError, "transform frame indices out of range");
      if (ta.from == ta.to) fail(Err::ValidationError, "transform needs two distinct frames");
      act.transform = ta;
    } else if (a.is_object() && a.contains("check")) {
      act.check = parse_check(a["check"], sc);
    } else {
      fail(Err::ParseError, "action must contain \"transform\" or \"check\"");
    }
    sc.actions.push_back(std::move(act));
  }
  return sc;
}

namespace {

double min_factor_purity(const PureState& s) {
  double mn = 1.0;
  for (int p = 0; p < s.spec.size(); ++p) {
    DensityOp r = reduced_state(s, {p});
    mn = std::min(mn, (r.rho * r.rho).trace().real());
  }
  return mn;
}

}  // namespace

RunReport run_scenario(const Scenario& sc, const ScenarioOverrides& ov, Execution exec) {
  RunReport report;
  report.scenario = sc.name;
  FrameConfig config(sc.group, sc.frames, sc.physical);
  PureState state = sc.initial;
  const auto phys_positions = state.spec.physical_positions();

  for (const auto& act : sc.actions) {
    ojson entry;
    if (act.transform) {
      const auto& ta = *act.transform;
      QrfTransform t = ta.perspectival ? build_perspectival_transform(config, ta.from, ta.to)
                                       : build_passive_transform(config, ta.from, ta.to);
      state = apply_transform(t, state);
      entry["action"] = "transform";
      entry["kind"] = ta.perspectival ? "perspectival" : "passive";
      entry["from"] = ta.from;
      entry["to"] = ta.to;
      entry["state"] = state_to_json(state);
      report.actions.push_back(std::move(entry));
      continue;
    }

    const CheckAction& c = *act.check;
    entry["action"] = "check";
    entry["kind"] = c.kind;
    bool passed = true;

    if (c.kind == "negativity") {
      DensityOp rho_phys = reduced_state(state, phys_positions);
      Bipartition cut;
      for (int p : c.cut_a) cut.side_a.push_back(p - 1);
      for (int p : c.cut_b) cut.side_b.push_back(p - 1);
      const double value = negativity(rho_phys, cut);
      entry["cut"] = ojson::array({c.cut_a, c.cut_b});
      entry["value"] = value;
      if (c.expect_value) {
        passed = std::abs(value - *c.expect_value) <= c.tol;
        entry["expect"] = *c.expect_value;
      }
    } else if (c.kind == "concurrence") {
      DensityOp rho_phys = reduced_state(state, phys_positions);
      const double value = concurrence(rho_phys);
      entry["value"] = value;
      if (c.expect_value) {
        passed = std::abs(value - *c.expect_value) <= c.tol;
        entry["expect"] = *c.expect_value;
      }
    } else if (c.kind == "standard_form") {
      PureFormResult res = standard_form_check(state, c.frame, c.tol, sc.group.identity());
      entry["frame"] = c.frame;
      entry["standard"] = res.standard();
      if (res.standard()) {
        entry["frame_part"] = state_to_json(res.form->frame_part);
        entry["physical_part"] = state_to_json(res.form->physical_part);
      } else {
        entry["reason"] = res.reason;
      }
      if (c.expect_standard) passed = res.standard() == *c.expect_standard;
    } else if (c.kind == "conditionals") {
      const auto dec = conditional_decomposition(state);
      ojson list = ojson::array();
      bool any_nonsep = false;
      for (const auto& e : dec.entries) {
        ojson je;
        je["tuple"] = e.tuple;
        je["weight"] = ojson::array({e.weight.real(), e.weight.imag()});
        if (e.state) {
          const bool sep = min_factor_purity(*e.state) >= 1.0 - c.tol;
          je["separable"] = sep;
          any_nonsep = any_nonsep || !sep;
        } else {
          je["separable"] = nullptr;
        }
        list.push_back(std::move(je));
      }
      entry["conditionals"] = std::move(list);
      entry["any_nonseparable"] = any_nonsep;
      if (c.expect_any_nonseparable) passed = any_nonsep == *c.expect_any_nonseparable;
    } else if (c.kind == "state") {
      Vec expected(c.expected_state.size());
      for (size_t i = 0; i < c.expected_state.size(); ++i)
        expected(i) =
            cxd(c.expected_state[i][0].get<double>(), c.expected_state[i][1].get<double>());
      if (expected.size() != state.amps.size())
        fail(Err::ValidationError, "expected state has wrong dimension");
      const double err = phase_aligned_max_error(expected, state.amps);
      entry["max_error"] = err;
      passed = err <= c.tol;
    } else if (c.kind == "suite") {
      SuiteSpec spec;
      spec.kind = c.suite;
      spec.group_name = sc.group_name;
      spec.group = sc.group;
      spec.frames = sc.frames;
      spec.physical = sc.physical;
      spec.physical_names = sc.physical_names;
      spec.trials = ov.trials.value_or(c.suite_trials);
      spec.seed = ov.seed.value_or(c.suite_seed);
      spec.tol = ov.tol.value_or(c.suite_tol);
      VerificationReport vr = run_suite(spec, exec);
      entry["suite"] = suite_name(spec.kind);
      entry["report"] = ojson::parse(report_to_machine(vr));
      passed = vr.passed();
    }

    entry["passed"] = passed;
    report.passed = report.passed && passed;
    report.actions.push_back(std::move(entry));
  }
  return report;
}

std::string emit_report(const RunReport& report, const std::string& format) {
  if (format == "machine") {
    ojson j;
    j["schema"] = kRunReportSchema;
    j["scenario"] = report.scenario;
    j["passed"] = report.passed;
    j["actions"] = report.actions;
    return j.dump(2) + "\n";
  }
  if (format != "human") fail(Err::ValidationError, "format must be \"human\" or \"machine\"");

  std::ostringstream os;
  os << "scenario  " << report.scenario << "\n";
  int i = 0;
  for (const auto& a : report.actions) {
    ++i;
    os << "  [" << i << "] ";
    const std::string action = a.value("action", "?");
    if (action == "transform") {
      os << "transform " << a.value("kind", "?") << " " << a.value("from", 0) << "->"
         << a.value("to", 0) << "\n";
      continue;
    }
    const std::string kind = a.value("kind", "?");
    os << "check " << kind;
    if (a.contains("value")) os << "  value " << a["value"].get<double>();
    if (a.contains("expect")) os << "  expect " << a["expect"].get<double>();
    if (a.contains("max_error")) os << "  max_error " << a["max_error"].get<double>();
    if (a.contains("standard")) os << "  standard " << (a["standard"].get<bool>() ? "yes" : "no");
    if (a.contains("any_nonseparable"))
      os << "  any_nonseparable " << (a["any_nonseparable"].get<bool>() ? "yes" : "no");
    if (kind == "suite" && a.contains("report"))
      os << "  trials " << a["report"].value("trials_run", 0L) << "  failures "
         << a["report"]["failures"].size();
    os << "  " << (a.value("passed", false) ? "PASS" : "FAIL") << "\n";
  }
  os << "result    " << (report.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

RunReport run_report_from_machine(const std::string& text) {
  const ojson j = ojson::parse(text);
  if (!j.is_object() || j.value("schema", "") != kRunReportSchema)
    fail(Err::ParseError, std::string("expected schema \"") + kRunReportSchema + "\"");
  RunReport r;
  r.scenario = j.value("scenario", "");
  r.passed = j.value("passed", false);
  r.actions = j.value("actions", ojson::array());
  return r;
}

}  // namespace qrf
