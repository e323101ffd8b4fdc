#include "qrf/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qrf {

namespace {

std::string pos_str(int p) { return "factor position " + std::to_string(p); }

std::vector<long long> strides_of(const std::vector<Factor>& factors) {
  std::vector<long long> strides(factors.size(), 1);
  for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
    strides[i] = strides[i + 1] * factors[i + 1].dim;
  return strides;
}

}  // namespace

FactorSpec::FactorSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) fail(Err::ValidationError, "factor list is empty");
  int next_ref = 1, next_phys = 1;
  bool seen_physical = false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const Factor& f = factors_[i];
    if (f.dim < 1)
      fail(Err::ValidationError, "factor " + std::to_string(i) + " has dimension " +
                                     std::to_string(f.dim));
    if (f.role == Role::Reference) {
      if (seen_physical)
        fail(Err::ValidationError, "reference factors must precede physical factors");
      if (f.index != next_ref++)
        fail(Err::ValidationError, "reference factor indices must be contiguous from 1");
    } else {
      seen_physical = true;
      if (f.index != next_phys++)
        fail(Err::ValidationError, "physical factor indices must be contiguous from 1");
    }
  }
}

FactorSpec FactorSpec::frames_then_systems(int frame_count, int frame_dim,
                                           const std::vector<int>& physical_dims) {
  std::vector<Factor> fs;
  for (int k = 1; k <= frame_count; ++k) fs.push_back({frame_dim, Role::Reference, k});
  for (size_t j = 0; j < physical_dims.size(); ++j)
    fs.push_back({physical_dims[j], Role::Physical, static_cast<int>(j) + 1});
  return FactorSpec(std::move(fs));
}

const Factor& FactorSpec::at(int pos) const {
  if (pos < 0 || pos >= size()) fail(Err::IndexOutOfRange, pos_str(pos));
  return factors_[pos];
}

long long FactorSpec::total_dim() const {
  long long d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

int FactorSpec::frame_count() const {
  int m = 0;
  for (const auto& f : factors_) m += f.role == Role::Reference;
  return m;
}

int FactorSpec::physical_count() const { return size() - frame_count(); }

long long FactorSpec::reference_dim() const {
  long long d = 1;
  for (const auto& f : factors_)
    if (f.role == Role::Reference) d *= f.dim;
  return d;
}

long long FactorSpec::physical_dim() const {
  long long d = 1;
  for (const auto& f : factors_)
    if (f.role == Role::Physical) d *= f.dim;
  return d;
}

int FactorSpec::frame_position(int k) const {
  for (int i = 0; i < size(); ++i)
    if (factors_[i].role == Role::Reference && factors_[i].index == k) return i;
  fail(Err::IndexOutOfRange, "no reference factor with frame index " + std::to_string(k));
}

std::vector<int> FactorSpec::reference_positions() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (factors_[i].role == Role::Reference) out.push_back(i);
  return out;
}

std::vector<int> FactorSpec::physical_positions() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (factors_[i].role == Role::Physical) out.push_back(i);
  return out;
}

long long FactorSpec::flatten(const std::vector<int>& labels) const {
  if (static_cast<int>(labels.size()) != size())
    fail(Err::TupleLengthMismatch, "expected " + std::to_string(size()) + " labels, got " +
                                       std::to_string(labels.size()));
  long long idx = 0;
  for (int i = 0; i < size(); ++i) {
    if (labels[i] < 0 || labels[i] >= factors_[i].dim)
      fail(Err::LabelOutOfRange, "label " + std::to_string(labels[i]) + " at " + pos_str(i) +
                                     " of dimension " + std::to_string(factors_[i].dim));
    idx = idx * factors_[i].dim + labels[i];
  }
  return idx;
}

std::vector<int> FactorSpec::unflatten(long long index) const {
  if (index < 0 || index >= total_dim())
    fail(Err::IndexOutOfRange, "flat index " + std::to_string(index));
  std::vector<int> labels(size());
  for (int i = size() - 1; i >= 0; --i) {
    labels[i] = static_cast<int>(index % factors_[i].dim);
    index /= factors_[i].dim;
  }
  return labels;
}

FactorSpec FactorSpec::subset(std::vector<int> positions) const {
  if (positions.empty()) fail(Err::EmptyKeepSet, "subset of zero factors");
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  std::vector<Factor> fs;
  int next_ref = 1, next_phys = 1;
  for (int p : positions) {
    Factor f = at(p);
    f.index = f.role == Role::Reference ? next_ref++ : next_phys++;
    fs.push_back(f);
  }
  return FactorSpec(std::move(fs));
}

PureState::PureState(FactorSpec s, Vec amplitudes) : spec(std::move(s)), amps(std::move(amplitudes)) {
  if (amps.size() != spec.total_dim())
    fail(Err::DimensionMismatch, "amplitude vector of length " + std::to_string(amps.size()) +
                                     " over a space of dimension " +
                                     std::to_string(spec.total_dim()));
  const double n = amps.norm();
  if (std::abs(n - 1.0) > kAlgebraTol)
    fail(Err::ValidationError, "state norm " + std::to_string(n) + " is not 1");
}

DensityOp::DensityOp(FactorSpec s, Mat matrix) : spec(std::move(s)), rho(std::move(matrix)) {
  const long long d = spec.total_dim();
  if (rho.rows() != d || rho.cols() != d)
    fail(Err::DimensionMismatch, "operator is " + std::to_string(rho.rows()) + "x" +
                                     std::to_string(rho.cols()) + " over a space of dimension " +
                                     std::to_string(d));
  if (!is_hermitian(rho, kAlgebraTol)) fail(Err::ValidationError, "operator is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kAlgebraTol)
    fail(Err::ValidationError, "trace " + std::to_string(tr) + " is not 1");
  const auto evs = hermitian_eigenvalues(rho);
  if (evs(0) < -kZeroEigTol)
    fail(Err::ValidationError, "negative eigenvalue " + std::to_string(evs(0)));
}

PureState basis_state(const FactorSpec& spec, const std::vector<int>& labels) {
  Vec v = Vec::Zero(spec.total_dim());
  v(spec.flatten(labels)) = 1.0;
  return PureState(spec, std::move(v));
}

PureState tensor(const std::vector<PureState>& parts) {
  if (parts.empty()) fail(Err::EmptyInput, "tensor product of zero states");
  Vec amps = parts[0].amps;
  std::vector<Factor> fs = parts[0].spec.factors();
  for (size_t i = 1; i < parts.size(); ++i) {
    amps = kron_vec(amps, parts[i].amps);
    for (const auto& f : parts[i].spec.factors()) fs.push_back(f);
  }
  int next_ref = 1, next_phys = 1;
  for (auto& f : fs) f.index = f.role == Role::Reference ? next_ref++ : next_phys++;
  return PureState(FactorSpec(std::move(fs)), std::move(amps));
}

DensityOp projector(const PureState& psi) {
  return DensityOp(psi.spec, psi.amps * psi.amps.adjoint());
}

DensityOp partial_trace(const DensityOp& rho, const std::vector<int>& keep) {
  if (keep.empty()) fail(Err::EmptyKeepSet, "partial trace keeping no factors");
  FactorSpec out_spec = rho.spec.subset(keep);

  std::vector<int> kept(keep);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<int> traced;
  for (int i = 0; i < rho.spec.size(); ++i)
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);

  const auto strides = strides_of(rho.spec.factors());
  long long kept_dim = 1, traced_dim = 1;
  for (int p : kept) kept_dim *= rho.spec.at(p).dim;
  for (int p : traced) traced_dim *= rho.spec.at(p).dim;

  // base offset of each kept / traced sub-index in the full flat index
  auto offsets = [&](const std::vector<int>& positions, long long dim) {
    std::vector<long long> off(dim, 0);
    for (long long x = 0; x < dim; ++x) {
      long long rem = x, o = 0;
      for (int i = static_cast<int>(positions.size()) - 1; i >= 0; --i) {
        const int d = rho.spec.at(positions[i]).dim;
        o += (rem % d) * strides[positions[i]];
        rem /= d;
      }
      off[x] = o;
    }
    return off;
  };
  const auto kept_off = offsets(kept, kept_dim);
  const auto traced_off = offsets(traced, traced_dim);

  Mat out = Mat::Zero(kept_dim, kept_dim);
  const long long pairs = kept_dim * kept_dim;
#pragma omp parallel for schedule(static) if (parallel_enabled() && pairs * traced_dim > 4096)
  for (long long p = 0; p < pairs; ++p) {
    const long long i = p / kept_dim, j = p % kept_dim;
    cxd acc = 0.0;
    for (long long t = 0; t < traced_dim; ++t)
      acc += rho.rho(kept_off[i] + traced_off[t], kept_off[j] + traced_off[t]);
    out(i, j) = acc;
  }
  return DensityOp(std::move(out_spec), std::move(out));
}

DensityOp reduced_state(const PureState& psi, const std::vector<int>& keep) {
  return partial_trace(projector(psi), keep);
}

namespace {

// shared by conditional_state and conditional_decomposition: the physical
// block of psi at reference tuple gvec, split into weight and unit state
Conditional branch_at(const PureState& psi, const FactorSpec& phys_spec, long long ref_flat) {
  const long long dp = psi.spec.physical_dim();
  Vec block = psi.amps.segment(ref_flat * dp, dp);
  const double norm = block.norm();
  Conditional c;
  if (norm == 0.0) return c;
  // gauge: state has its first nonzero amplitude real positive, the branch
  // phase lives in the weight
  Eigen::Index first = 0;
  while (first < block.size() && std::abs(block(first)) == 0.0) ++first;
  cxd phase = block(first) / std::abs(block(first));
  c.weight = phase * norm;
  c.state = PureState(phys_spec, block / c.weight);
  return c;
}

}  // namespace

Conditional conditional_state(const PureState& psi, const std::vector<int>& gvec) {
  const int m = psi.spec.frame_count();
  if (m < 1) fail(Err::ValidationError, "state has no reference factors");
  if (static_cast<int>(gvec.size()) != m)
    fail(Err::TupleLengthMismatch, "tuple of length " + std::to_string(gvec.size()) +
                                       " for " + std::to_string(m) + " reference factors");
  if (psi.spec.physical_count() == 0)
    fail(Err::ValidationError, "state has no physical factors");
  long long ref_flat = 0;
  const auto refs = psi.spec.reference_positions();
  for (int i = 0; i < m; ++i) {
    const int d = psi.spec.at(refs[i]).dim;
    if (gvec[i] < 0 || gvec[i] >= d)
      fail(Err::LabelOutOfRange, "tuple entry " + std::to_string(gvec[i]) +
                                     " for reference factor of dimension " + std::to_string(d));
    ref_flat = ref_flat * d + gvec[i];
  }
  return branch_at(psi, psi.spec.physical_subspec(), ref_flat);
}

ConditionalDecomposition conditional_decomposition(const PureState& psi) {
  const int m = psi.spec.frame_count();
  if (m < 1) fail(Err::ValidationError, "state has no reference factors");
  if (psi.spec.physical_count() == 0)
    fail(Err::ValidationError, "state has no physical factors");
  const auto refs = psi.spec.reference_positions();
  const long long ref_dim = psi.spec.reference_dim();
  const FactorSpec phys_spec = psi.spec.physical_subspec();

  ConditionalDecomposition dec;
  dec.source_spec = psi.spec;
  dec.entries.resize(ref_dim);
  for (long long t = 0; t < ref_dim; ++t) {
    ConditionalEntry& e = dec.entries[t];
    long long rem = t;
    e.tuple.resize(m);
    for (int i = m - 1; i >= 0; --i) {
      const int d = psi.spec.at(refs[i]).dim;
      e.tuple[i] = static_cast<int>(rem % d);
      rem /= d;
    }
    Conditional c = branch_at(psi, phys_spec, t);
    e.weight = c.weight;
    e.state = std::move(c.state);
  }
  return dec;
}

PureState ConditionalDecomposition::reconstruct() const {
  const long long dp = source_spec.physical_dim();
  Vec amps = Vec::Zero(source_spec.total_dim());
  for (size_t t = 0; t < entries.size(); ++t) {
    if (!entries[t].state) continue;
    amps.segment(static_cast<long long>(t) * dp, dp) = entries[t].weight * entries[t].state->amps;
  }
  return PureState(source_spec, std::move(amps));
}

double ConditionalDecomposition::weight_norm_squared() const {
  double s = 0.0;
  for (const auto& e : entries) s += std::norm(e.weight);
  return s;
}

}  // namespace qrf
