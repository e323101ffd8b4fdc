#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "qrf/scenario.hpp"

namespace {

int error_exit_code(const qrf::Error& e) {
  switch (e.code()) {
    case qrf::Err::ParseError:
    case qrf::Err::ValidationError:
    case qrf::Err::ConfigError:
      return 2;
    default:
      return 1;
  }
}

qrf::ojson phys_token_to_spec(const std::string& token) {
  if (token.rfind("trivial:", 0) == 0) {
    return qrf::ojson{{"trivial", std::stoi(token.substr(8))}};
  }
  return qrf::ojson(token);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) qrf::fail(qrf::Err::ValidationError, "cannot open \"" + out_path + "\" for writing");
  os << text;
}

long default_trials(qrf::SuiteKind kind) {
  switch (kind) {
    case qrf::SuiteKind::Corollary: return 200;
    case qrf::SuiteKind::Mixed: return 300;
    case qrf::SuiteKind::Oracle: return 100;
    default: return 500;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrflab: quantum reference frame transformations over finite groups"};
  app.require_subcommand(1);

  std::string scenario_arg, format = "human", out_path;
  bool serial = false;
  std::optional<std::uint64_t> seed_opt;
  std::optional<long> trials_opt;
  std::optional<double> tol_opt;

  auto* run_cmd = app.add_subcommand("run", "run a scenario file or a builtin scenario");
  run_cmd->add_option("scenario", scenario_arg, "scenario file path or builtin name")->required();
  run_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"human", "machine"}));
  run_cmd->add_option("--out", out_path, "write the report to a file");
  run_cmd->add_option("--seed", seed_opt, "override suite seeds");
  run_cmd->add_option("--trials", trials_opt, "override suite trial counts");
  run_cmd->add_option("--tol", tol_opt, "override suite tolerances");
  run_cmd->add_flag("--serial", serial, "disable parallel trial execution");

  std::string suite_arg, group_name = "Z2", phys_arg = "qubit,qubit";
  int frames = 2;
  std::optional<std::uint64_t> v_seed;
  std::optional<long> v_trials;
  std::optional<double> v_tol;
  auto* verify_cmd = app.add_subcommand("verify", "run one randomized verification suite");
  verify_cmd
      ->add_option("suite", suite_arg,
                   "theorem | corollary | no-creation | monotonicity | mixed | oracle")
      ->required();
  verify_cmd->add_option("--group", group_name, "builtin group name (default Z2)");
  verify_cmd->add_option("--frames", frames, "number of reference frames (default 2)");
  verify_cmd->add_option("--phys", phys_arg,
                         "comma list of physical systems: qubit, regular, trivial:<d>");
  verify_cmd->add_option("--trials", v_trials, "trial count (default depends on suite)");
  verify_cmd->add_option("--seed", v_seed, "master seed (default 0)");
  verify_cmd->add_option("--tol", v_tol, "tolerance (default 1e-9, oracle 1e-12)");
  verify_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"human", "machine"}));
  verify_cmd->add_option("--out", out_path, "write the report to a file");
  verify_cmd->add_flag("--serial", serial, "disable parallel trial execution");

  std::string show_name;
  auto* examples_cmd = app.add_subcommand("examples", "list builtin scenarios");
  examples_cmd->add_option("--show", show_name, "print one builtin scenario as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const qrf::Execution exec = serial ? qrf::Execution::Serial : qrf::Execution::Parallel;

  try {
    if (*run_cmd) {
      qrf::ojson doc;
      std::string name;
      if (qrf::is_builtin_scenario(scenario_arg)) {
        doc = qrf::builtin_scenario(scenario_arg);
        name = scenario_arg;
      } else {
        std::ifstream is(scenario_arg);
        if (!is) qrf::fail(qrf::Err::ParseError, "cannot read scenario \"" + scenario_arg + "\"");
        try {
          doc = qrf::ojson::parse(is);
        } catch (const std::exception& ex) {
          qrf::fail(qrf::Err::ParseError, std::string("scenario JSON: ") + ex.what());
        }
        const auto slash = scenario_arg.find_last_of('/');
        name = slash == std::string::npos ? scenario_arg : scenario_arg.substr(slash + 1);
      }
      qrf::Scenario sc = qrf::parse_scenario(doc, name);
      qrf::ScenarioOverrides ov{seed_opt, trials_opt, tol_opt};
      qrf::RunReport report = qrf::run_scenario(sc, ov, exec);
      emit(qrf::emit_report(report, format), out_path);
      return report.passed ? 0 : 1;
    }

    if (*verify_cmd) {
      qrf::SuiteSpec spec;
      spec.kind = qrf::suite_from_name(suite_arg);
      spec.group_name = group_name;
      spec.group = qrf::builtin_group(group_name);
      spec.frames = frames;
      for (const auto& token : split_csv(phys_arg)) {
        std::string rep_name;
        spec.physical.push_back(qrf::representation_from_spec(phys_token_to_spec(token),
                                                              group_name, spec.group, rep_name));
        spec.physical_names.push_back(rep_name);
      }
      spec.trials = v_trials.value_or(default_trials(spec.kind));
      spec.seed = v_seed.value_or(0);
      spec.tol = v_tol.value_or(spec.kind == qrf::SuiteKind::Oracle ? 1e-12 : 1e-9);
      qrf::VerificationReport report = qrf::run_suite(spec, exec);
      emit(format == "machine" ? qrf::report_to_machine(report) : qrf::report_to_human(report),
           out_path);
      return report.passed() ? 0 : 1;
    }

    if (*examples_cmd) {
      if (!show_name.empty()) {
        std::cout << qrf::builtin_scenario(show_name).dump(2) << "\n";
        return 0;
      }
      for (const auto& name : qrf::builtin_scenario_names())
        std::cout << name << "  -  " << qrf::builtin_scenario_summary(name) << "\n";
      return 0;
    }
  } catch (const qrf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
