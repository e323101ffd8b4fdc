#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrf/entanglement.hpp"
#include "qrf/random.hpp"
#include "qrf/transform.hpp"

namespace qrf {

enum class SuiteKind { Theorem, Corollary, NoCreation, Monotonicity, Mixed, Oracle };

const char* suite_name(SuiteKind kind);
SuiteKind suite_from_name(const std::string& name);

enum class Execution { Serial, Parallel };

/// Configuration of one randomized suite. Trial i draws from a stream keyed
/// on (seed, i); reports are identical for serial and parallel execution.
struct SuiteSpec {
  SuiteKind kind = SuiteKind::Theorem;
  std::string group_name;
  FiniteGroup group;
  int frames = 2;
  std::vector<Representation> physical;
  std::vector<std::string> physical_names;
  long trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct TrialFailure {
  long trial = 0;  // seed offset reproducing the trial
  std::string predicate;
  double measured = 0.0;
  int from = 0, to = 0;  // frame hop under test, 0 when not applicable
  std::string state_json;
};

struct VerificationReport {
  SuiteKind kind = SuiteKind::Theorem;
  std::string group_name;
  int frames = 2;
  std::vector<std::string> physical_names;
  long trials_requested = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  long trials_run = 0;
  long attempts = 0;
  std::vector<TrialFailure> failures;
  double wall_seconds = 0.0;  // not part of the canonical serialized form

  bool passed() const { return failures.empty(); }
};

VerificationReport run_suite(const SuiteSpec& spec, Execution exec = Execution::Parallel);

VerificationReport run_theorem_suite(SuiteSpec spec, Execution exec = Execution::Parallel);
VerificationReport run_corollary_suite(SuiteSpec spec, Execution exec = Execution::Parallel);
VerificationReport run_no_creation_suite(SuiteSpec spec, Execution exec = Execution::Parallel);
VerificationReport run_monotonicity_suite(SuiteSpec spec, Execution exec = Execution::Parallel);
VerificationReport run_mixed_suite(SuiteSpec spec, Execution exec = Execution::Parallel);
VerificationReport run_oracle_suite(SuiteSpec spec, Execution exec = Execution::Parallel);

/// Canonical machine form: stable key order, deterministic bytes for a given
/// spec and seed. Wall time is reported only in the human form.
std::string report_to_machine(const VerificationReport& report);
std::string report_to_human(const VerificationReport& report);

/// Re-evaluates a recorded failure from its serialized input state.
/// Returns true when the violation reproduces.
bool reproduce_failure(const SuiteSpec& spec, const TrialFailure& failure);

namespace detail {
/// Independent dense construction of the passive frame change: controlled
/// inverse on frame l, left action on the remaining frames, product action
/// on the physical sector, composed with the k,l slot swap and restricted to
/// the domain. Used as the cross-check oracle against the branch-sum form.
Mat swap_form_transform_matrix(const FrameConfig& config, int k, int l);
}  // namespace detail

}  // namespace qrf
