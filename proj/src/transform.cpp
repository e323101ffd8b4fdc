#include "qrf/transform.hpp"

#include <algorithm>
#include <cmath>

namespace qrf {

namespace {

constexpr double kDomainLeakTol = 1e-10;

std::vector<int> tuple_unflat(long long t, int m, int n) {
  std::vector<int> g(m);
  for (int i = m - 1; i >= 0; --i) {
    g[i] = static_cast<int>(t % n);
    t /= n;
  }
  return g;
}

long long tuple_flat(const std::vector<int>& g, int n) {
  long long t = 0;
  for (int gi : g) t = t * n + gi;
  return t;
}

void check_frame_index(const FrameConfig& c, int k) {
  if (k < 1 || k > c.frames)
    fail(Err::IndexOutOfRange, "frame index " + std::to_string(k) + " with m = " +
                                   std::to_string(c.frames));
}

void check_hop(const FrameConfig& c, int k, int l) {
  if (c.frames < 2) fail(Err::ConfigError, "frame changes need at least two frames");
  check_frame_index(c, k);
  check_frame_index(c, l);
  if (k == l) fail(Err::SameFrameIndices, "from and to are both frame " + std::to_string(k));
}

}  // namespace

FrameConfig::FrameConfig(FiniteGroup g, int frame_count, std::vector<Representation> physical_reps)
    : group(std::move(g)), frames(frame_count), physical(std::move(physical_reps)) {
  if (frames < 1) fail(Err::ConfigError, "frame count must be >= 1");
  for (const auto& rep : physical)
    if (!(rep.group() == group))
      fail(Err::GroupMismatch, "physical representation over a different group");
}

FactorSpec FrameConfig::spec() const {
  std::vector<int> dims;
  for (const auto& rep : physical) dims.push_back(rep.dim());
  return FactorSpec::frames_then_systems(frames, group.order(), dims);
}

long long FrameConfig::physical_dim() const {
  long long d = 1;
  for (const auto& rep : physical) d *= rep.dim();
  return d;
}

Mat FrameConfig::physical_action(int g) const {
  if (physical.empty()) return Mat::Identity(1, 1);
  return combined_action(physical, g);
}

namespace {

Mat frame_support_projector(const FrameConfig& c, int k) {
  const int n = c.group.order(), m = c.frames, e = c.group.identity();
  const long long dp = c.physical_dim(), ref_dim = [&] {
    long long d = 1;
    for (int i = 0; i < m; ++i) d *= n;
    return d;
  }();
  Mat p = Mat::Zero(ref_dim * dp, ref_dim * dp);
  for (long long t = 0; t < ref_dim; ++t) {
    if (tuple_unflat(t, m, n)[k - 1] != e) continue;
    for (long long q = 0; q < dp; ++q) p(t * dp + q, t * dp + q) = 1.0;
  }
  return p;
}

}  // namespace

Mat QrfTransform::domain_projector() const {
  if (kind == Kind::Perspectival) return Mat::Identity(matrix.rows(), matrix.cols());
  return frame_support_projector(config, from);
}

Mat QrfTransform::codomain_projector() const {
  if (kind == Kind::Perspectival) return Mat::Identity(matrix.rows(), matrix.cols());
  return frame_support_projector(config, to);
}

std::string QrfTransform::domain_description() const {
  if (kind == Kind::Perspectival) return "full space";
  return "frame " + std::to_string(from) + " supported on identity";
}

std::string QrfTransform::codomain_description() const {
  if (kind == Kind::Perspectival) return "full space";
  return "frame " + std::to_string(to) + " supported on identity";
}

namespace detail {

Mat passive_matrix(const FrameConfig& c, int k, int l) {
  const int n = c.group.order(), m = c.frames, e = c.group.identity();
  const long long dp = c.physical_dim();
  long long ref_dim = 1;
  for (int i = 0; i < m; ++i) ref_dim *= n;

  std::vector<Mat> udag(n);
  for (int g = 0; g < n; ++g) udag[g] = c.physical_action(g).adjoint();

  Mat t_mat = Mat::Zero(ref_dim * dp, ref_dim * dp);
  for (long long t = 0; t < ref_dim; ++t) {
    auto tup = tuple_unflat(t, m, n);
    if (tup[k - 1] != e) continue;
    const int gl = tup[l - 1];
    const int gl_inv = c.group.inverse(gl);
    std::vector<int> target(m);
    for (int i = 0; i < m; ++i) target[i] = c.group.product(gl_inv, tup[i]);
    t_mat.block(tuple_flat(target, n) * dp, t * dp, dp, dp) = udag[gl];
  }
  return t_mat;
}

}  // namespace detail

QrfTransform build_passive_transform(const FrameConfig& config, int k, int l) {
  check_hop(config, k, l);
  QrfTransform t{QrfTransform::Kind::Passive, k, l, config, detail::passive_matrix(config, k, l)};
  return t;
}

QrfTransform build_perspectival_transform(const FrameConfig& config, int from, int to) {
  check_hop(config, from, to);
  const int n = config.group.order(), m = config.frames;
  const long long dp = config.physical_dim();
  long long ref_dim = 1;
  for (int i = 0; i < m; ++i) ref_dim *= n;

  std::vector<Mat> udag(n);
  for (int g = 0; g < n; ++g) udag[g] = config.physical_action(g).adjoint();

  // controlled on the `to` frame: |g> control maps to |g^-1>, every other
  // frame i gets the regular left action of g^-1, the physical sector gets
  // the product U(g)^dag; the swap of the from/to slots is folded into the
  // target tuple
  Mat s_mat = Mat::Zero(ref_dim * dp, ref_dim * dp);
  for (long long t = 0; t < ref_dim; ++t) {
    auto tup = tuple_unflat(t, m, n);
    const int g = tup[to - 1];
    const int g_inv = config.group.inverse(g);
    std::vector<int> target(m);
    for (int i = 0; i < m; ++i) target[i] = config.group.product(g_inv, tup[i]);
    target[from - 1] = g_inv;
    target[to - 1] = tup[from - 1];
    s_mat.block(tuple_flat(target, n) * dp, t * dp, dp, dp) = udag[g];
  }
  QrfTransform t{QrfTransform::Kind::Perspectival, from, to, config, std::move(s_mat)};
  return t;
}

namespace {

void check_state_spec(const QrfTransform& t, const FactorSpec& spec) {
  if (!(spec == t.config.spec()))
    fail(Err::DimensionMismatch, "state factorization does not match the transform's layout");
}

double off_domain_norm(const QrfTransform& t, const Vec& amps) {
  const int n = t.config.group.order(), m = t.config.frames, e = t.config.group.identity();
  const long long dp = t.config.physical_dim();
  double leak2 = 0.0;
  for (long long tt = 0; tt < amps.size() / dp; ++tt)
    if (tuple_unflat(tt, m, n)[t.from - 1] != e)
      leak2 += amps.segment(tt * dp, dp).squaredNorm();
  return std::sqrt(leak2);
}

}  // namespace

PureState apply_transform(const QrfTransform& t, const PureState& psi) {
  check_state_spec(t, psi.spec);
  const int n = t.config.group.order(), m = t.config.frames, e = t.config.group.identity();
  const long long dp = t.config.physical_dim();
  long long ref_dim = psi.amps.size() / dp;

  std::vector<Mat> udag(n);
  for (int g = 0; g < n; ++g) udag[g] = t.config.physical_action(g).adjoint();

  if (t.kind == QrfTransform::Kind::Passive) {
    const double leak = off_domain_norm(t, psi.amps);
    if (leak > kDomainLeakTol)
      fail(Err::DomainViolation, "input has norm " + std::to_string(leak) + " outside {" +
                                     t.domain_description() + "}");
  }

  Vec out = Vec::Zero(psi.amps.size());
#pragma omp parallel for schedule(static) if (parallel_enabled() && ref_dim * dp > 2048)
  for (long long tt = 0; tt < ref_dim; ++tt) {
    auto tup = tuple_unflat(tt, m, n);
    if (t.kind == QrfTransform::Kind::Passive) {
      if (tup[t.from - 1] != e) continue;
      const int gl = tup[t.to - 1];
      const int gl_inv = t.config.group.inverse(gl);
      std::vector<int> target(m);
      for (int i = 0; i < m; ++i) target[i] = t.config.group.product(gl_inv, tup[i]);
      out.segment(tuple_flat(target, n) * dp, dp) = udag[gl] * psi.amps.segment(tt * dp, dp);
    } else {
      const int g = tup[t.to - 1];
      const int g_inv = t.config.group.inverse(g);
      std::vector<int> target(m);
      for (int i = 0; i < m; ++i) target[i] = t.config.group.product(g_inv, tup[i]);
      target[t.from - 1] = g_inv;
      target[t.to - 1] = tup[t.from - 1];
      out.segment(tuple_flat(target, n) * dp, dp) = udag[g] * psi.amps.segment(tt * dp, dp);
    }
  }
  out /= out.norm();
  return PureState(psi.spec, std::move(out));
}

DensityOp apply_transform_mixed(const QrfTransform& t, const DensityOp& rho) {
  check_state_spec(t, rho.spec);
  const int n = t.config.group.order(), m = t.config.frames, e = t.config.group.identity();
  const long long dp = t.config.physical_dim();
  const long long ref_dim = rho.rho.rows() / dp;

  if (t.kind == QrfTransform::Kind::Perspectival) {
    Mat out = t.matrix * rho.rho * t.matrix.adjoint();
    return DensityOp(rho.spec, std::move(out));
  }

  // domain tuples and their images
  std::vector<long long> dom, img;
  std::vector<int> acting;
  for (long long tt = 0; tt < ref_dim; ++tt) {
    auto tup = tuple_unflat(tt, m, n);
    if (tup[t.from - 1] != e) continue;
    const int gl = tup[t.to - 1];
    const int gl_inv = t.config.group.inverse(gl);
    std::vector<int> target(m);
    for (int i = 0; i < m; ++i) target[i] = t.config.group.product(gl_inv, tup[i]);
    dom.push_back(tt);
    img.push_back(tuple_flat(target, n));
    acting.push_back(gl);
  }

  double leak2 = 0.0;
  {
    // weight outside the domain block, rows or columns
    std::vector<bool> in_dom(ref_dim, false);
    for (long long d : dom) in_dom[d] = true;
    for (long long a = 0; a < ref_dim; ++a)
      for (long long b = 0; b < ref_dim; ++b) {
        if (in_dom[a] && in_dom[b]) continue;
        leak2 += rho.rho.block(a * dp, b * dp, dp, dp).squaredNorm();
      }
  }
  if (std::sqrt(leak2) > kDomainLeakTol)
    fail(Err::DomainViolation, "operator has weight " + std::to_string(std::sqrt(leak2)) +
                                   " outside {" + t.domain_description() + "}");

  std::vector<Mat> u(n), udag(n);
  for (int g = 0; g < n; ++g) {
    u[g] = t.config.physical_action(g);
    udag[g] = u[g].adjoint();
  }

  const long long nd = static_cast<long long>(dom.size());
  Mat out = Mat::Zero(rho.rho.rows(), rho.rho.cols());
#pragma omp parallel for schedule(static) if (parallel_enabled() && nd * nd * dp * dp > 4096)
  for (long long p = 0; p < nd * nd; ++p) {
    const long long a = p / nd, b = p % nd;
    out.block(img[a] * dp, img[b] * dp, dp, dp) =
        udag[acting[a]] * rho.rho.block(dom[a] * dp, dom[b] * dp, dp, dp) * u[acting[b]];
  }
  const double tr = out.trace().real();
  out /= tr;
  return DensityOp(rho.spec, std::move(out));
}

PureFormResult standard_form_check(const PureState& psi, int k, double tol,
                                   int identity_label) {
  const int m = psi.spec.frame_count();
  if (k < 1 || k > m) fail(Err::IndexOutOfRange, "frame index " + std::to_string(k));
  if (psi.spec.physical_count() == 0)
    fail(Err::ValidationError, "state has no physical factors");

  PureFormResult res;
  const int kpos = psi.spec.frame_position(k);
  // weight of the reference sector off the identity of frame k
  double off2 = 0.0;
  const long long dim = psi.amps.size();
  for (long long i = 0; i < dim; ++i) {
    if (psi.spec.unflatten(i)[kpos] != identity_label) off2 += std::norm(psi.amps(i));
  }
  if (std::sqrt(off2) > tol) {
    res.reason = "frame " + std::to_string(k) + " carries weight " +
                 std::to_string(std::sqrt(off2)) + " off the identity";
    return res;
  }

  DensityOp rho_phys = reduced_state(psi, psi.spec.physical_positions());
  const double purity = (rho_phys.rho * rho_phys.rho).trace().real();
  if (purity < 1.0 - tol) {
    res.reason = "reference and physical sectors are correlated, physical purity " +
                 std::to_string(purity);
    return res;
  }

  // rank-one split across the reference | physical cut
  const long long dp = psi.spec.physical_dim();
  const long long dr = psi.spec.reference_dim();
  long long t0 = 0;
  double best = -1.0;
  for (long long t = 0; t < dr; ++t) {
    const double w = psi.amps.segment(t * dp, dp).squaredNorm();
    if (w > best) {
      best = w;
      t0 = t;
    }
  }
  Vec phys = psi.amps.segment(t0 * dp, dp);
  Eigen::Index first = 0;
  while (first < phys.size() && std::abs(phys(first)) == 0.0) ++first;
  phys *= std::abs(phys(first)) / phys(first);
  phys /= phys.norm();
  Vec frame(dr);
  for (long long t = 0; t < dr; ++t) frame(t) = phys.dot(psi.amps.segment(t * dp, dp));
  frame /= frame.norm();
  first = 0;
  while (first < frame.size() && std::abs(frame(first)) == 0.0) ++first;
  frame *= std::abs(frame(first)) / frame(first);

  res.form = StandardFormPure{k, PureState(psi.spec.reference_subspec(), std::move(frame)),
                              PureState(psi.spec.physical_subspec(), std::move(phys))};
  return res;
}

MixedFormResult standard_form_check(const DensityOp& rho, int k, double tol,
                                    int identity_label) {
  const int m = rho.spec.frame_count();
  if (k < 1 || k > m) fail(Err::IndexOutOfRange, "frame index " + std::to_string(k));
  if (rho.spec.physical_count() == 0)
    fail(Err::ValidationError, "operator has no physical factors");

  MixedFormResult res;
  const int kpos = rho.spec.frame_position(k);
  const long long dim = rho.rho.rows();
  std::vector<bool> on_identity(dim);
  for (long long i = 0; i < dim; ++i)
    on_identity[i] = rho.spec.unflatten(i)[kpos] == identity_label;
  double off2 = 0.0;
  for (long long i = 0; i < dim; ++i)
    for (long long j = 0; j < dim; ++j)
      if (!on_identity[i] || !on_identity[j]) off2 += std::norm(rho.rho(i, j));
  if (std::sqrt(off2) > tol) {
    res.reason = "frame " + std::to_string(k) + " carries weight " +
                 std::to_string(std::sqrt(off2)) + " off the identity";
    return res;
  }

  DensityOp ref = partial_trace(rho, rho.spec.reference_positions());
  DensityOp phys = partial_trace(rho, rho.spec.physical_positions());
  const double resid = (rho.rho - kron(ref.rho, phys.rho)).norm();
  if (resid > tol) {
    res.reason = "sectors do not factorize, residual " + std::to_string(resid);
    return res;
  }
  res.form = StandardFormMixed{k, std::move(ref), std::move(phys)};
  return res;
}

LocalUnitaryMixture induced_channel(const FrameConfig& config, int k, int l,
                                    const PureState& frame_part) {
  check_frame_index(config, k);
  check_frame_index(config, l);
  if (!(frame_part.spec == config.spec().reference_subspec()))
    fail(Err::NotAFramePart, "state is not over the reference sector of this configuration");

  const int n = config.group.order(), m = config.frames, e = config.group.identity();
  double off2 = 0.0;
  std::vector<double> weight_by_element(n, 0.0);
  for (long long t = 0; t < frame_part.amps.size(); ++t) {
    auto tup = tuple_unflat(t, m, n);
    const double w = std::norm(frame_part.amps(t));
    if (tup[k - 1] != e) {
      off2 += w;
      continue;
    }
    weight_by_element[tup[l - 1]] += w;
  }
  if (std::sqrt(off2) > kAlgebraTol)
    fail(Err::NotAFramePart, "frame " + std::to_string(k) + " carries weight " +
                                 std::to_string(std::sqrt(off2)) + " off the identity");

  LocalUnitaryMixture mix;
  for (int h = 0; h < n; ++h) {
    if (weight_by_element[h] == 0.0) continue;
    mix.weights.push_back(weight_by_element[h]);
    mix.elements.push_back(h);
    mix.unitaries.push_back(config.physical_action(h).adjoint());
  }
  return mix;
}

Mat apply_mixture(const LocalUnitaryMixture& mix, const Mat& rho_phys) {
  if (mix.weights.empty()) fail(Err::EmptyInput, "mixture with no branches");
  Mat out = Mat::Zero(rho_phys.rows(), rho_phys.cols());
  for (size_t i = 0; i < mix.weights.size(); ++i)
    out += mix.weights[i] * (mix.unitaries[i] * rho_phys * mix.unitaries[i].adjoint());
  return out;
}

}  // namespace qrf
