// Compares the serial reference paths against the OpenMP ones on the
// data-parallel kernels (structured transform application, partial trace)
// and on whole verification suites, and checks that both produce identical
// results while timing them.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qrf/random.hpp"
#include "qrf/verify.hpp"

using namespace qrf;

namespace {

double time_best_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

void row(const std::string& name, long long size, double serial_ms, double parallel_ms,
         bool identical) {
  std::printf("%-28s %8lld %12.3f %12.3f %9.2fx   %s\n", name.c_str(), size, serial_ms,
              parallel_ms, serial_ms / parallel_ms, identical ? "identical" : "DIFFERS");
}

}  // namespace

int main() {
  std::printf("%-28s %8s %12s %12s %10s\n", "kernel", "dim", "serial ms", "omp ms", "speedup");

  {
    // structured application of a passive frame change, dim 4096
    FiniteGroup g = builtin_group("Z4xZ4");
    std::vector<Representation> phys(4, builtin_qubit_representation("Z4xZ4", g));
    FrameConfig config(g, 2, phys);
    QrfTransform t = build_passive_transform(config, 1, 2);

    TrialRng rng(12, 0);
    const FactorSpec spec = config.spec();
    Vec amps = Vec::Zero(spec.total_dim());
    const long long dp = config.physical_dim();
    // fill the domain {g_1 = e}: tuples 0..15 of the first frame label 0
    for (long long i = 0; i < g.order() * dp; ++i) amps(i) = rng.complex_gaussian();
    amps /= amps.norm();
    PureState psi(spec, amps);

    set_parallel(false);
    PureState out_serial = apply_transform(t, psi);
    const double serial_ms = time_best_ms([&] { apply_transform(t, psi); }, 5);
    set_parallel(true);
    PureState out_parallel = apply_transform(t, psi);
    const double parallel_ms = time_best_ms([&] { apply_transform(t, psi); }, 5);
    row("apply_transform", spec.total_dim(), serial_ms, parallel_ms,
        out_serial.amps == out_parallel.amps);
  }

  {
    // partial trace to the physical sector, dim 1024
    FiniteGroup g = builtin_group("Z4xZ4");
    std::vector<Representation> phys(2, builtin_qubit_representation("Z4xZ4", g));
    FrameConfig config(g, 2, phys);
    TrialRng rng(34, 0);
    PureState psi = random_state(rng, config.spec());
    DensityOp rho = projector(psi);
    const auto keep = config.spec().physical_positions();

    set_parallel(false);
    DensityOp out_serial = partial_trace(rho, keep);
    const double serial_ms = time_best_ms([&] { partial_trace(rho, keep); }, 5);
    set_parallel(true);
    DensityOp out_parallel = partial_trace(rho, keep);
    const double parallel_ms = time_best_ms([&] { partial_trace(rho, keep); }, 5);
    row("partial_trace", config.spec().total_dim(), serial_ms, parallel_ms,
        out_serial.rho == out_parallel.rho);
  }

  {
    // whole suite: 200 theorem trials on Z2xZ2
    SuiteSpec spec;
    spec.kind = SuiteKind::Theorem;
    spec.group_name = "Z2xZ2";
    spec.group = builtin_group("Z2xZ2");
    spec.frames = 2;
    spec.physical = {builtin_qubit_representation("Z2xZ2", spec.group),
                     builtin_qubit_representation("Z2xZ2", spec.group)};
    spec.physical_names = {"qubit", "qubit"};
    spec.trials = 200;
    spec.seed = 7;
    spec.tol = 1e-9;

    set_parallel(true);
    VerificationReport serial_report = run_suite(spec, Execution::Serial);
    const double serial_ms = time_best_ms([&] { run_suite(spec, Execution::Serial); }, 3);
    VerificationReport parallel_report = run_suite(spec, Execution::Parallel);
    const double parallel_ms = time_best_ms([&] { run_suite(spec, Execution::Parallel); }, 3);
    row("theorem suite (200 trials)", spec.group.order() * spec.group.order() * 4, serial_ms,
        parallel_ms, report_to_machine(serial_report) == report_to_machine(parallel_report));
  }

  return 0;
}
