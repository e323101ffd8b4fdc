#include "qrf/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace qrf {

namespace {

void check_bipartition(const FactorSpec& spec, const Bipartition& cut) {
  const int n = spec.size();
  std::vector<int> seen(n, 0);
  if (cut.side_a.empty() || cut.side_b.empty())
    fail(Err::InvalidBipartition, "both sides must be nonempty");
  for (int p : cut.side_a) {
    if (p < 0 || p >= n) fail(Err::InvalidBipartition, "position " + std::to_string(p));
    ++seen[p];
  }
  for (int p : cut.side_b) {
    if (p < 0 || p >= n) fail(Err::InvalidBipartition, "position " + std::to_string(p));
    ++seen[p];
  }
  for (int p = 0; p < n; ++p)
    if (seen[p] != 1)
      fail(Err::InvalidBipartition,
           "position " + std::to_string(p) + " appears " + std::to_string(seen[p]) + " times");
}

// flat index of the side's labels within the side's own row-major ordering
long long side_index(const FactorSpec& spec, const std::vector<int>& side,
                     const std::vector<int>& labels) {
  long long idx = 0;
  for (int p : side) idx = idx * spec.at(p).dim + labels[p];
  return idx;
}

long long side_dim(const FactorSpec& spec, const std::vector<int>& side) {
  long long d = 1;
  for (int p : side) d *= spec.at(p).dim;
  return d;
}

}  // namespace

std::vector<Bipartition> all_bipartitions(int n_factors) {
  std::vector<Bipartition> cuts;
  if (n_factors < 2) return cuts;
  const unsigned full = (1u << n_factors) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;  // factor 0 stays on side_a
    Bipartition cut;
    for (int p = 0; p < n_factors; ++p)
      (mask >> p & 1u ? cut.side_a : cut.side_b).push_back(p);
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

std::vector<double> schmidt_coefficients(const PureState& psi, const Bipartition& cut) {
  check_bipartition(psi.spec, cut);
  const long long da = side_dim(psi.spec, cut.side_a), db = side_dim(psi.spec, cut.side_b);
  Mat m(da, db);
  for (long long i = 0; i < psi.amps.size(); ++i) {
    const auto labels = psi.spec.unflatten(i);
    m(side_index(psi.spec, cut.side_a, labels), side_index(psi.spec, cut.side_b, labels)) =
        psi.amps(i);
  }
  return singular_values(m);
}

bool is_pure_fully_separable(const PureState& psi, const std::vector<int>& factors, double tol) {
  if (psi.spec.size() == 1) return true;
  for (int p : factors) {
    DensityOp r = reduced_state(psi, {p});
    const double purity = (r.rho * r.rho).trace().real();
    if (purity < 1.0 - tol) return false;
  }
  return true;
}

double negativity(const DensityOp& rho, const Bipartition& cut) {
  check_bipartition(rho.spec, cut);
  const long long dim = rho.rho.rows();
  Mat pt(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const auto li = rho.spec.unflatten(i);
    for (long long j = 0; j < dim; ++j) {
      auto lj = rho.spec.unflatten(j);
      // transpose side_b labels between row and column
      auto ri = li, rj = lj;
      for (int p : cut.side_b) std::swap(ri[p], rj[p]);
      pt(rho.spec.flatten(ri), rho.spec.flatten(rj)) = rho.rho(i, j);
    }
  }
  const auto evs = hermitian_eigenvalues(pt);
  double neg = 0.0;
  for (Eigen::Index i = 0; i < evs.size(); ++i)
    if (evs(i) < 0.0) neg -= evs(i);
  return neg;
}

double concurrence(const DensityOp& rho) {
  if (rho.spec.size() != 2 || rho.spec.at(0).dim != 2 || rho.spec.at(1).dim != 2)
    fail(Err::NotTwoQubit, "concurrence needs a two-qubit state");
  Mat yy(4, 4);  // sigma_y x sigma_y
  yy.setZero();
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  // The flipped spectrum {lambda_i} = sqrt(eig(rho * yy rho^* yy)) equals
  // the singular values of X = sqrt(rho)^T yy sqrt(rho). The SVD route has
  // absolute error ~eps; taking square roots of computed eigenvalues would
  // lose half the digits on the (generically degenerate) zeros.
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.rho);
  const Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Mat sqrt_rho = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  const auto lambda = singular_values(sqrt_rho.transpose() * yy * sqrt_rho);
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace qrf
