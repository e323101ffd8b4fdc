#pragma once

#include <optional>
#include <vector>

#include "qrf/errors.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

enum class Role { Reference, Physical };

struct Factor {
  int dim = 0;
  Role role = Role::Physical;
  int index = 0;  // 1-based within its role
  bool operator==(const Factor&) const = default;
};

/// Ordered tensor factorization of a Hilbert space, each factor tagged as a
/// reference frame or a physical system.
///
/// One global convention avoids permutation bugs: reference factors come
/// first (in frame order 1..m), physical factors after (in system order
/// 1..N), and flattening is row-major in factor order, leftmost factor
/// slowest.
class FactorSpec {
public:
  FactorSpec() = default;
  explicit FactorSpec(std::vector<Factor> factors);

  static FactorSpec frames_then_systems(int frame_count, int frame_dim,
                                        const std::vector<int>& physical_dims);

  int size() const { return static_cast<int>(factors_.size()); }
  const Factor& at(int pos) const;
  const std::vector<Factor>& factors() const { return factors_; }

  long long total_dim() const;
  int frame_count() const;
  int physical_count() const;
  long long reference_dim() const;
  long long physical_dim() const;

  /// Position of reference factor k (1-based k).
  int frame_position(int k) const;
  std::vector<int> reference_positions() const;
  std::vector<int> physical_positions() const;

  long long flatten(const std::vector<int>& labels) const;
  std::vector<int> unflatten(long long index) const;

  /// Spec of a subset of factors (positions, any order; they are sorted).
  /// Role indices are renumbered to stay contiguous from 1.
  FactorSpec subset(std::vector<int> positions) const;
  FactorSpec reference_subspec() const { return subset(reference_positions()); }
  FactorSpec physical_subspec() const { return subset(physical_positions()); }

  bool operator==(const FactorSpec&) const = default;

private:
  std::vector<Factor> factors_;
};

/// Normalized complex state vector over a declared factorization.
struct PureState {
  PureState() = default;
  PureState(FactorSpec spec, Vec amplitudes);

  FactorSpec spec;
  Vec amps;
};

/// Density operator: Hermitian, unit trace, nonnegative spectrum
/// (eigenvalues above -1e-10).
struct DensityOp {
  DensityOp() = default;
  DensityOp(FactorSpec spec, Mat matrix);

  FactorSpec spec;
  Mat rho;
};

/// Computational basis vector with one label per factor.
PureState basis_state(const FactorSpec& spec, const std::vector<int>& labels);

/// Kronecker product of states in argument order; specs are concatenated and
/// role indices renumbered.
PureState tensor(const std::vector<PureState>& parts);

DensityOp projector(const PureState& psi);

/// Trace out every factor not in keep. Trace is preserved.
DensityOp partial_trace(const DensityOp& rho, const std::vector<int>& keep);
/// partial_trace of |psi><psi|.
DensityOp reduced_state(const PureState& psi, const std::vector<int>& keep);

/// One branch of the relative-state decomposition over the reference sector:
/// the physical-sector component of psi at reference basis tuple gvec.
/// weight carries the branch norm and the branch phase; state is normalized
/// with its first nonzero amplitude real positive, and empty when the branch
/// vanishes. Summing weight*|gvec>x|state> over all tuples rebuilds psi.
struct Conditional {
  cxd weight{0.0, 0.0};
  std::optional<PureState> state;
};

Conditional conditional_state(const PureState& psi, const std::vector<int>& gvec);

struct ConditionalEntry {
  std::vector<int> tuple;
  cxd weight{0.0, 0.0};
  std::optional<PureState> state;
};

/// All conditional branches, ordered by flattened reference tuple.
struct ConditionalDecomposition {
  FactorSpec source_spec;
  std::vector<ConditionalEntry> entries;

  PureState reconstruct() const;
  double weight_norm_squared() const;
};

ConditionalDecomposition conditional_decomposition(const PureState& psi);

}  // namespace qrf
