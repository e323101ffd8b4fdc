// Acceptance suite: each exit criterion is checked at its stated tolerance
// and prints one verdict line. The process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "qrf/scenario.hpp"

using namespace qrf;

namespace {

int failed = 0;

void verdict(bool pass, const std::string& label, const std::string& detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", label.c_str(), detail.c_str());
  std::fflush(stdout);
  failed += !pass;
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FrameConfig four_qubit_config() {
  FiniteGroup z2 = builtin_group("Z2");
  Representation q = builtin_qubit_representation("Z2", z2);
  return FrameConfig(z2, 2, {q, q});
}

SuiteSpec qubit_suite(SuiteKind kind, const char* group, int frames, long trials,
                      std::uint64_t seed, double tol) {
  SuiteSpec spec;
  spec.kind = kind;
  spec.group_name = group;
  spec.group = builtin_group(group);
  spec.frames = frames;
  Representation q = builtin_qubit_representation(group, spec.group);
  spec.physical = {q, q};
  spec.physical_names = {"qubit", "qubit"};
  spec.trials = trials;
  spec.seed = seed;
  spec.tol = tol;
  return spec;
}

char buf[512];

}  // namespace

int main() {
  const double s = std::sqrt(0.5);

  {  // 1: first worked example, exact reproduction
    const auto t0 = std::chrono::steady_clock::now();
    FrameConfig config = four_qubit_config();
    QrfTransform t = build_perspectival_transform(config, 1, 2);
    Vec in = Vec::Zero(16);
    in(0) = s;
    in(4) = s;
    PureState out = apply_transform(t, PureState(config.spec(), in));
    Vec expected = Vec::Zero(16);
    expected(0) = s;
    expected(11) = s;
    const double err = phase_aligned_max_error(expected, out.amps);
    const double neg = negativity(reduced_state(out, {2, 3}), {{0}, {1}});
    const double dt = elapsed(t0);
    std::snprintf(buf, sizeof buf,
                  "amplitude error %.2e <= 1e-12, residual negativity %.2e <= 1e-12, %.3f s < 1 s",
                  err, neg, dt);
    verdict(err <= 1e-12 && neg <= 1e-12 && dt < 1.0, "C1 example-1 reproduction", buf);
  }

  {  // 2: second worked example, exact reproduction and concurrence jump
    const auto t0 = std::chrono::steady_clock::now();
    FrameConfig config = four_qubit_config();
    QrfTransform t = build_perspectival_transform(config, 1, 2);
    Vec in = Vec::Zero(16);
    in(0) = 0.5;
    in(3) = cxd(0.0, 0.5);
    in(4) = cxd(0.0, 0.5);
    in(7) = 0.5;
    PureState psi(config.spec(), in);
    const double conc_before = concurrence(reduced_state(psi, {2, 3}));
    PureState out = apply_transform(t, psi);
    Vec expected = Vec::Zero(16);
    expected(0) = 0.5;
    expected(3) = cxd(0.0, 0.5);
    expected(8) = 0.5;
    expected(11) = cxd(0.0, 0.5);
    const double err = phase_aligned_max_error(expected, out.amps);
    const double conc_after = concurrence(reduced_state(out, {2, 3}));
    const double dt = elapsed(t0);
    std::snprintf(buf, sizeof buf,
                  "amplitude error %.2e <= 1e-12, concurrence %.2e -> %.12f (1 +/- 1e-9), %.3f s < 1 s",
                  err, conc_before, conc_after, dt);
    verdict(err <= 1e-12 && conc_before <= 1e-9 && std::abs(conc_after - 1.0) <= 1e-9 && dt < 1.0,
            "C2 example-2 reproduction", buf);
  }

  {  // 3: theorem suite, 500 trials per group
    const auto t0 = std::chrono::steady_clock::now();
    long fail_count = 0, trials = 0;
    for (const char* group : {"Z2", "Z3", "Z2xZ2"}) {
      VerificationReport r = run_suite(qubit_suite(SuiteKind::Theorem, group, 2, 500, 7, 1e-9));
      fail_count += static_cast<long>(r.failures.size());
      trials += r.trials_run;
    }
    const double dt = elapsed(t0);
    std::snprintf(buf, sizeof buf, "%ld trials over Z2, Z3, Z2xZ2, %ld failures, %.1f s < 60 s",
                  trials, fail_count, dt);
    verdict(trials == 1500 && fail_count == 0 && dt < 60.0, "C3 theorem suite", buf);
  }

  {  // 4: corollary suite, 200 accepted trials
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r = run_suite(qubit_suite(SuiteKind::Corollary, "Z2", 2, 200, 11, 1e-9));
    const double dt = elapsed(t0);
    std::snprintf(buf, sizeof buf, "%ld accepted trials (%ld attempts), %zu failures, %.1f s < 60 s",
                  r.trials_run, r.attempts, r.failures.size(), dt);
    verdict(r.trials_run == 200 && r.passed() && dt < 60.0, "C4 corollary suite", buf);
  }

  {  // 5: no entanglement created from separable standard forms
    VerificationReport r = run_suite(qubit_suite(SuiteKind::NoCreation, "Z2", 2, 500, 3, 1e-9));
    std::snprintf(buf, sizeof buf, "%ld trials, %zu failures", r.trials_run, r.failures.size());
    verdict(r.trials_run == 500 && r.passed(), "C5 no-creation suite", buf);
  }

  {  // 6: entanglement monotonicity with unitary-equality subcases
    VerificationReport r =
        run_suite(qubit_suite(SuiteKind::Monotonicity, "Z2", 2, 500, 5, 1e-9));
    std::snprintf(buf, sizeof buf, "%ld trials incl. single-branch equality checks, %zu failures",
                  r.trials_run, r.failures.size());
    verdict(r.trials_run == 500 && r.passed(), "C6 monotonicity suite", buf);
  }

  {  // 7: mixed states with separable diagonal blocks stay PPT
    VerificationReport r = run_suite(qubit_suite(SuiteKind::Mixed, "Z2", 2, 300, 13, 1e-9));
    std::snprintf(buf, sizeof buf, "%ld trials, %zu failures", r.trials_run, r.failures.size());
    verdict(r.trials_run == 300 && r.passed(), "C7 mixed-state suite", buf);
  }

  {  // 8: dense-construction equivalence and isometry identities
    long fail_count = 0;
    SuiteSpec a = qubit_suite(SuiteKind::Oracle, "Z2", 2, 100, 1, 1e-12);
    SuiteSpec b = qubit_suite(SuiteKind::Oracle, "Z3", 2, 100, 1, 1e-12);
    b.physical = {Representation::regular(b.group)};
    b.physical_names = {"regular"};
    SuiteSpec c = qubit_suite(SuiteKind::Oracle, "Z2xZ2", 3, 100, 1, 1e-12);
    for (const SuiteSpec* spec : {&a, &b, &c})
      fail_count += static_cast<long>(run_suite(*spec).failures.size());
    std::snprintf(buf, sizeof buf,
                  "300 states over three configurations at 1e-12, %ld failures", fail_count);
    verdict(fail_count == 0, "C8 dense-oracle equivalence", buf);
  }

  {  // 9: byte-identical reports for identical seeds
    SuiteSpec spec = qubit_suite(SuiteKind::Corollary, "Z2", 2, 60, 11, 1e-9);
    const std::string r1 = report_to_machine(run_suite(spec, Execution::Parallel));
    const std::string r2 = report_to_machine(run_suite(spec, Execution::Parallel));
    const std::string r3 = report_to_machine(run_suite(spec, Execution::Serial));
    Scenario sc = parse_scenario(builtin_scenario("example2"), "example2");
    const std::string m1 = emit_report(run_scenario(sc), "machine");
    const std::string m2 = emit_report(run_scenario(sc), "machine");
    const bool pass = r1 == r2 && r1 == r3 && m1 == m2;
    std::snprintf(buf, sizeof buf,
                  "suite reruns %s, serial equals parallel %s, scenario reruns %s",
                  r1 == r2 ? "identical" : "differ", r1 == r3 ? "yes" : "no",
                  m1 == m2 ? "identical" : "differ");
    verdict(pass, "C9 determinism", buf);
  }

  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
