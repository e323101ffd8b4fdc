#pragma once

#include <vector>

#include "qrf/group.hpp"
#include "qrf/linalg.hpp"

namespace qrf {

/// A unitary representation of a finite group, stored as one explicit matrix
/// per element. Construction checks unitarity of every matrix, that the
/// identity maps to the identity matrix, and the homomorphism property
/// U(g)U(h) = U(gh) over all |G|^2 pairs. Groups in scope are tiny, so the
/// exhaustive check is cheap and makes validation airtight.
class Representation {
public:
  /// Left-regular representation on the group algebra: U(g')|g> = |g'g>.
  /// Matrices are 0/1 permutation matrices.
  static Representation regular(const FiniteGroup& g);

  static Representation from_matrices(const FiniteGroup& g, std::vector<Mat> matrices);

  /// d-dimensional identity action for every element.
  static Representation trivial(const FiniteGroup& g, int dim);

  const FiniteGroup& group() const { return group_; }
  int dim() const { return dim_; }
  const Mat& matrix(int g) const;
  Mat matrix_dagger(int g) const { return matrix(g).adjoint(); }

private:
  Representation(FiniteGroup g, int dim, std::vector<Mat> mats);

  FiniteGroup group_;
  int dim_;
  std::vector<Mat> matrices_;
};

/// Kronecker product U_1(g) x ... x U_N(g) across a list of representations
/// of the same group. The result is itself a valid representation.
Mat combined_action(const std::vector<Representation>& reps, int g);
Mat combined_action_dagger(const std::vector<Representation>& reps, int g);

/// Qubit action for the builtin groups, used by scenarios naming a physical
/// system "qubit": Z2 gets {1, sigma_x}; cyclic and product groups get a
/// diagonal character action diag(1, chi(g)); S3 gets diag(1, parity(g)).
Representation builtin_qubit_representation(const std::string& group_name, const FiniteGroup& g);

}  // namespace qrf
