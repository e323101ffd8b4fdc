#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qrf {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Tolerance for algebraic identities (unitarity, homomorphism, reconstruction).
inline constexpr double kAlgebraTol = 1e-12;
/// Eigenvalues within this of zero count as nonnegative.
inline constexpr double kZeroEigTol = 1e-10;

// Process-wide switch for the OpenMP kernel paths. All parallel kernels use
// disjoint writes and fixed per-entry summation order, so results are bitwise
// identical to the serial reference paths.
void set_parallel(bool on);
bool parallel_enabled();

Mat kron(const Mat& a, const Mat& b);
Vec kron_vec(const Vec& a, const Vec& b);

inline Mat dagger(const Mat& m) { return m.adjoint(); }

double max_abs(const Mat& m);
double max_abs_vec(const Vec& v);

bool is_unitary(const Mat& u, double tol = kAlgebraTol);
bool is_hermitian(const Mat& m, double tol = kAlgebraTol);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Mat& m);

/// Singular values, descending.
std::vector<double> singular_values(const Mat& m);

/// max_i |a_i - e^{i theta} b_i| minimized over the global phase theta.
double phase_aligned_max_error(const Vec& a, const Vec& b);

/// Physical equality of unit vectors: |<a|b>| = 1 within tol.
bool equal_up_to_phase(const Vec& a, const Vec& b, double tol = kAlgebraTol);

}  // namespace qrf
