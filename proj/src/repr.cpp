#include "qrf/repr.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qrf {

Representation::Representation(FiniteGroup g, int dim, std::vector<Mat> mats)
    : group_(std::move(g)), dim_(dim), matrices_(std::move(mats)) {}

const Mat& Representation::matrix(int g) const {
  if (g < 0 || g >= group_.order())
    fail(Err::IndexOutOfRange,
         "element " + std::to_string(g) + " outside group of order " +
             std::to_string(group_.order()));
  return matrices_[g];
}

Representation Representation::regular(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Mat> mats(n);
  for (int gp = 0; gp < n; ++gp) {
    Mat u = Mat::Zero(n, n);
    for (int h = 0; h < n; ++h) u(g.product(gp, h), h) = 1.0;
    mats[gp] = std::move(u);
  }
  // permutation matrices from a validated table need no re-validation
  return Representation(g, n, std::move(mats));
}

Representation Representation::trivial(const FiniteGroup& g, int dim) {
  if (dim < 1) fail(Err::DimensionMismatch, "trivial representation needs dim >= 1");
  std::vector<Mat> mats(g.order(), Mat::Identity(dim, dim));
  return Representation(g, dim, std::move(mats));
}

Representation Representation::from_matrices(const FiniteGroup& g, std::vector<Mat> matrices) {
  const int n = g.order();
  if (static_cast<int>(matrices.size()) != n)
    fail(Err::DimensionMismatch, "expected " + std::to_string(n) + " matrices, got " +
                                     std::to_string(matrices.size()));
  const int d = static_cast<int>(matrices[0].rows());
  for (int e = 0; e < n; ++e) {
    if (matrices[e].rows() != d || matrices[e].cols() != d)
      fail(Err::DimensionMismatch, "matrix for element " + std::to_string(e) +
                                       " is not " + std::to_string(d) + "x" + std::to_string(d));
    if (!is_unitary(matrices[e])) {
      const double r = max_abs(matrices[e].adjoint() * matrices[e] - Mat::Identity(d, d));
      fail(Err::NotUnitary, "matrix for element " + std::to_string(e) +
                                " is not unitary, residual " + std::to_string(r));
    }
  }
  if (max_abs(matrices[g.identity()] - Mat::Identity(d, d)) > kAlgebraTol)
    fail(Err::IdentityNotMappedToIdentity,
         "U(e) differs from the identity matrix by " +
             std::to_string(max_abs(matrices[g.identity()] - Mat::Identity(d, d))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double r = max_abs(matrices[a] * matrices[b] - matrices[g.product(a, b)]);
      if (r > kAlgebraTol)
        fail(Err::NotHomomorphism, "U(" + std::to_string(a) + ")U(" + std::to_string(b) +
                                       ") != U(" + std::to_string(g.product(a, b)) +
                                       "), residual " + std::to_string(r));
    }
  return Representation(g, d, std::move(matrices));
}

Mat combined_action(const std::vector<Representation>& reps, int g) {
  if (reps.empty()) fail(Err::EmptyInput, "combined action of zero representations");
  for (const auto& r : reps)
    if (!(r.group() == reps[0].group()))
      fail(Err::GroupMismatch, "representations are over different groups");
  Mat out = reps[0].matrix(g);
  for (size_t i = 1; i < reps.size(); ++i) out = kron(out, reps[i].matrix(g));
  return out;
}

Mat combined_action_dagger(const std::vector<Representation>& reps, int g) {
  return combined_action(reps, g).adjoint();
}

Representation builtin_qubit_representation(const std::string& group_name, const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Mat> mats(n);
  if (group_name == "S3") {
    for (int e = 0; e < n; ++e) {
      Mat u = Mat::Identity(2, 2);
      u(1, 1) = static_cast<double>(s3_parity(e));
      mats[e] = std::move(u);
    }
    return Representation::from_matrices(g, std::move(mats));
  }
  auto [a, b] = cyclic_name_components(group_name);
  if (a == 0) fail(Err::ValidationError, "no builtin qubit action for group \"" + group_name + "\"");
  if (a == 2 && b == 0) {
    // Z2 qubits carry the shift action {1, sigma_x}
    Mat sx(2, 2);
    sx << 0, 1, 1, 0;
    mats[0] = Mat::Identity(2, 2);
    mats[1] = std::move(sx);
    return Representation::from_matrices(g, std::move(mats));
  }
  for (int e = 0; e < n; ++e) {
    // product of the fundamental characters of each cyclic component
    double angle = 0.0;
    if (b == 0) {
      angle = 2.0 * std::numbers::pi * e / a;
    } else {
      angle = 2.0 * std::numbers::pi * (e / b) / a + 2.0 * std::numbers::pi * (e % b) / b;
    }
    Mat u = Mat::Identity(2, 2);
    u(1, 1) = cxd(std::cos(angle), std::sin(angle));
    mats[e] = std::move(u);
  }
  return Representation::from_matrices(g, std::move(mats));
}

}  // namespace qrf
