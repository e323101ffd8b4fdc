#include "qrf/linalg.hpp"

#include <atomic>
#include <cmath>

namespace qrf {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs_vec(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Mat id = Mat::Identity(u.rows(), u.cols());
  return max_abs(u.adjoint() * u - id) <= tol && max_abs(u * u.adjoint() - id) <= tol;
}

bool is_hermitian(const Mat& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::vector<double> singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double phase_aligned_max_error(const Vec& a, const Vec& b) {
  cxd ov = b.dot(a);  // <b|a>; the minimizing phase for ||a - phase*b||
  cxd phase = std::abs(ov) > 0 ? ov / std::abs(ov) : cxd(1.0, 0.0);
  return max_abs_vec(a - phase * b);
}

bool equal_up_to_phase(const Vec& a, const Vec& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::abs(std::abs(a.dot(b)) - 1.0) <= tol;
}

}  // namespace qrf
