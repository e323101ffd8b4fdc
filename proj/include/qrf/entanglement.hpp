#pragma once

#include <vector>

#include "qrf/hilbert.hpp"

namespace qrf {

/// A two-sided split of factor positions: nonempty, disjoint, covering.
struct Bipartition {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

/// Every bipartition of n factors, side_a containing factor 0 so each split
/// appears once. n = 2 yields the single cut {0}|{1}.
std::vector<Bipartition> all_bipartitions(int n_factors);

/// Singular values of the amplitude matrix reshaped along the cut,
/// descending. Their squares sum to 1; a single coefficient 1 means product.
std::vector<double> schmidt_coefficients(const PureState& psi, const Bipartition& cut);

/// True iff each listed factor is uncorrelated with the rest of the state:
/// every single-factor reduced state has purity >= 1 - tol. Listing all
/// factors decides full product form.
bool is_pure_fully_separable(const PureState& psi, const std::vector<int>& factors, double tol);

/// Sum of |negative eigenvalues| of the partial transpose over side_b.
/// Zero exactly when the state is PPT; an entanglement monotone.
double negativity(const DensityOp& rho, const Bipartition& cut);

/// Wootters concurrence of a two-qubit state, in [0, 1].
double concurrence(const DensityOp& rho);

}  // namespace qrf
