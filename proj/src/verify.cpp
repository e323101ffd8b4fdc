#include "qrf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "qrf/serialize.hpp"

namespace qrf {

const char* suite_name(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::Theorem: return "theorem";
    case SuiteKind::Corollary: return "corollary";
    case SuiteKind::NoCreation: return "no-creation";
    case SuiteKind::Monotonicity: return "monotonicity";
    case SuiteKind::Mixed: return "mixed";
    case SuiteKind::Oracle: return "oracle";
  }
  return "?";
}

SuiteKind suite_from_name(const std::string& name) {
  for (SuiteKind k : {SuiteKind::Theorem, SuiteKind::Corollary, SuiteKind::NoCreation,
                      SuiteKind::Monotonicity, SuiteKind::Mixed, SuiteKind::Oracle})
    if (name == suite_name(k)) return k;
  fail(Err::ConfigError, "unknown suite \"" + name + "\"");
}

namespace {

constexpr double kCorollaryFilter = 0.05;

struct Context {
  FrameConfig config;
  FactorSpec spec;
  FactorSpec phys_spec;
  std::vector<int> phys_positions;      // positions in the full spec
  std::vector<int> phys_sub_positions;  // 0..N-1 within the physical subspec
  std::vector<Bipartition> cuts;        // bipartitions of the physical subspec
  long long dp = 1;
  std::vector<std::vector<long long>> domain;  // domain[k-1]: ref tuples with g_k = e
  std::vector<QrfTransform> hops;              // T^{1->l}, index l-2
  bool two_qubits = false;
};

std::vector<int> tuple_unflat(long long t, int m, int n) {
  std::vector<int> g(m);
  for (int i = m - 1; i >= 0; --i) {
    g[i] = static_cast<int>(t % n);
    t /= n;
  }
  return g;
}

Context make_context(const SuiteSpec& s, bool build_hops) {
  if (s.trials < 0) fail(Err::ConfigError, "negative trial count");
  if (s.frames < 2) fail(Err::ConfigError, "suites need at least two frames");
  if (s.physical.empty()) fail(Err::ConfigError, "suites need at least one physical system");
  FrameConfig config(s.group, s.frames, s.physical);
  Context ctx{config, config.spec(), config.spec().physical_subspec(), {}, {}, {}, 1, {}, {}, false};
  ctx.phys_positions = ctx.spec.physical_positions();
  const int np = ctx.phys_spec.size();
  for (int p = 0; p < np; ++p) ctx.phys_sub_positions.push_back(p);
  ctx.cuts = all_bipartitions(np);
  ctx.dp = ctx.spec.physical_dim();
  ctx.two_qubits = np == 2 && ctx.phys_spec.at(0).dim == 2 && ctx.phys_spec.at(1).dim == 2;

  const int n = s.group.order(), m = s.frames, e = s.group.identity();
  long long ref_dim = 1;
  for (int i = 0; i < m; ++i) ref_dim *= n;
  ctx.domain.resize(m);
  for (long long t = 0; t < ref_dim; ++t) {
    const auto tup = tuple_unflat(t, m, n);
    for (int k = 1; k <= m; ++k)
      if (tup[k - 1] == e) ctx.domain[k - 1].push_back(t);
  }
  if (build_hops)
    for (int l = 2; l <= m; ++l) ctx.hops.push_back(build_passive_transform(config, 1, l));
  return ctx;
}

Vec scatter_domain(const Context& ctx, int k, const Vec& dom_vec) {
  Vec amps = Vec::Zero(ctx.spec.total_dim());
  const auto& dom = ctx.domain[k - 1];
  for (size_t t = 0; t < dom.size(); ++t)
    amps.segment(dom[t] * ctx.dp, ctx.dp) = dom_vec.segment(t * ctx.dp, ctx.dp);
  return amps;
}

PureState assemble_branches(const Context& ctx, int k, const Vec& f,
                            const std::vector<Vec>& blocks) {
  Vec amps = Vec::Zero(ctx.spec.total_dim());
  const auto& dom = ctx.domain[k - 1];
  for (size_t t = 0; t < dom.size(); ++t)
    amps.segment(dom[t] * ctx.dp, ctx.dp) = f(t) * blocks[t];
  return PureState(ctx.spec, std::move(amps));
}

double min_single_factor_purity(const PureState& s) {
  double mn = 1.0;
  for (int p = 0; p < s.spec.size(); ++p) {
    DensityOp r = reduced_state(s, {p});
    mn = std::min(mn, (r.rho * r.rho).trace().real());
  }
  return mn;
}

double max_cut_negativity(const Context& ctx, const DensityOp& rho_phys) {
  double mx = 0.0;
  for (const auto& cut : ctx.cuts) mx = std::max(mx, negativity(rho_phys, cut));
  return mx;
}

void add_failure(std::vector<TrialFailure>& out, long trial, std::string predicate,
                 double measured, int from, int to, const std::string& state_json) {
  out.push_back(TrialFailure{trial, std::move(predicate), measured, from, to, state_json});
}

// ---------------------------------------------------------------- theorem

std::vector<TrialFailure> theorem_trial(const Context& ctx, const SuiteSpec& s, long i) {
  std::vector<TrialFailure> fs;
  TrialRng rng(s.seed, static_cast<std::uint64_t>(i));
  const auto& dom = ctx.domain[0];
  Vec f = random_unit_vector(rng, static_cast<long long>(dom.size()));
  std::vector<Vec> blocks;
  blocks.reserve(dom.size());
  for (size_t t = 0; t < dom.size(); ++t)
    blocks.push_back(random_product_state(rng, ctx.phys_spec).amps);
  PureState psi = assemble_branches(ctx, 1, f, blocks);
  std::string input;

  for (const auto& hop : ctx.hops) {
    PureState out = apply_transform(hop, psi);
    const auto dec = conditional_decomposition(out);
    for (const auto& entry : dec.entries) {
      if (!entry.state) continue;
      const double purity = min_single_factor_purity(*entry.state);
      if (purity < 1.0 - s.tol) {
        if (input.empty()) input = state_to_json(psi).dump();
        add_failure(fs, i, "conditional-separable", 1.0 - purity, hop.from, hop.to, input);
      }
    }
    DensityOp rho_phys = reduced_state(out, ctx.phys_positions);
    const double neg = max_cut_negativity(ctx, rho_phys);
    if (neg > s.tol) {
      if (input.empty()) input = state_to_json(psi).dump();
      add_failure(fs, i, "physical-ppt", neg, hop.from, hop.to, input);
    }
  }
  return fs;
}

// ---------------------------------------------------------------- corollary

struct AttemptOutcome {
  bool accepted = false;
  std::vector<TrialFailure> failures;
};

AttemptOutcome corollary_attempt(const Context& ctx, const SuiteSpec& s, long j) {
  AttemptOutcome out;
  TrialRng rng(s.seed, static_cast<std::uint64_t>(j));
  const long long dom_dim = static_cast<long long>(ctx.domain[0].size()) * ctx.dp;
  PureState psi(ctx.spec, scatter_domain(ctx, 1, random_unit_vector(rng, dom_dim)));

  DensityOp rho_phys = reduced_state(psi, ctx.phys_positions);
  const double neg = max_cut_negativity(ctx, rho_phys);
  if (neg <= kCorollaryFilter) return out;
  out.accepted = true;
  std::string input;

  for (int l = 1; l <= ctx.config.frames; ++l) {
    PureState view = l == 1 ? psi : apply_transform(ctx.hops[l - 2], psi);
    const auto dec = conditional_decomposition(view);
    bool any_nonseparable = false;
    for (const auto& entry : dec.entries) {
      if (!entry.state) continue;
      if (min_single_factor_purity(*entry.state) < 1.0 - s.tol) {
        any_nonseparable = true;
        break;
      }
    }
    if (!any_nonseparable) {
      if (input.empty()) input = state_to_json(psi).dump();
      add_failure(out.failures, j, "nonseparable-conditional-exists", neg, 1, l, input);
    }
  }
  return out;
}

// ---------------------------------------------------------------- no-creation

std::vector<TrialFailure> no_creation_trial(const Context& ctx, const SuiteSpec& s, long i) {
  std::vector<TrialFailure> fs;
  TrialRng rng(s.seed, static_cast<std::uint64_t>(i));
  const auto& dom = ctx.domain[0];
  Vec f = random_unit_vector(rng, static_cast<long long>(dom.size()));
  PureState psi_phys = random_product_state(rng, ctx.phys_spec);
  std::vector<Vec> blocks(dom.size(), psi_phys.amps);
  PureState psi = assemble_branches(ctx, 1, f, blocks);
  std::string input;

  for (const auto& hop : ctx.hops) {
    DensityOp rho_phys = reduced_state(apply_transform(hop, psi), ctx.phys_positions);
    const double neg = max_cut_negativity(ctx, rho_phys);
    if (neg > s.tol) {
      if (input.empty()) input = state_to_json(psi).dump();
      add_failure(fs, i, "negativity-zero", neg, hop.from, hop.to, input);
    }
    if (ctx.two_qubits) {
      const double c = concurrence(rho_phys);
      if (c > s.tol) {
        if (input.empty()) input = state_to_json(psi).dump();
        add_failure(fs, i, "concurrence-zero", c, hop.from, hop.to, input);
      }
    }
  }
  return fs;
}

// ---------------------------------------------------------------- monotonicity

std::vector<TrialFailure> monotonicity_trial(const Context& ctx, const SuiteSpec& s, long i) {
  std::vector<TrialFailure> fs;
  TrialRng rng(s.seed, static_cast<std::uint64_t>(i));
  const auto& dom = ctx.domain[0];
  const bool single_support = i % 5 == 0;
  Vec f;
  if (single_support) {
    f = Vec::Zero(static_cast<long long>(dom.size()));
    f(rng.uniform_int(static_cast<int>(dom.size()))) = 1.0;
  } else {
    f = random_unit_vector(rng, static_cast<long long>(dom.size()));
  }
  PureState psi_phys = random_state(rng, ctx.phys_spec);
  std::vector<Vec> blocks(dom.size(), psi_phys.amps);
  PureState psi = assemble_branches(ctx, 1, f, blocks);
  std::string input;

  DensityOp base_rho = projector(psi_phys);
  std::vector<double> base_neg;
  for (const auto& cut : ctx.cuts) base_neg.push_back(negativity(base_rho, cut));
  const double base_conc = ctx.two_qubits ? concurrence(base_rho) : 0.0;

  for (const auto& hop : ctx.hops) {
    DensityOp rho_phys = reduced_state(apply_transform(hop, psi), ctx.phys_positions);
    for (size_t c = 0; c < ctx.cuts.size(); ++c) {
      const double after = negativity(rho_phys, ctx.cuts[c]);
      if (after > base_neg[c] + s.tol) {
        if (input.empty()) input = state_to_json(psi).dump();
        add_failure(fs, i, "negativity-nonincreasing", after - base_neg[c], hop.from, hop.to,
                    input);
      }
      if (single_support && std::abs(after - base_neg[c]) > s.tol) {
        if (input.empty()) input = state_to_json(psi).dump();
        add_failure(fs, i, "negativity-unitary-equality", std::abs(after - base_neg[c]),
                    hop.from, hop.to, input);
      }
    }
    if (ctx.two_qubits) {
      const double after = concurrence(rho_phys);
      if (after > base_conc + s.tol) {
        if (input.empty()) input = state_to_json(psi).dump();
        add_failure(fs, i, "concurrence-nonincreasing", after - base_conc, hop.from, hop.to,
                    input);
      }
      if (single_support && std::abs(after - base_conc) > s.tol) {
        if (input.empty()) input = state_to_json(psi).dump();
        add_failure(fs, i, "concurrence-unitary-equality", std::abs(after - base_conc), hop.from,
                    hop.to, input);
      }
    }
  }
  return fs;
}

// ---------------------------------------------------------------- mixed

std::vector<TrialFailure> mixed_trial(const Context& ctx, const SuiteSpec& s, long i) {
  std::vector<TrialFailure> fs;
  TrialRng rng(s.seed, static_cast<std::uint64_t>(i));
  const auto& dom = ctx.domain[0];
  const int components = 3;

  std::vector<double> w(components);
  double wsum = 0.0;
  for (int a = 0; a < components; ++a) {
    w[a] = rng.uniform() + 1e-3;
    wsum += w[a];
  }

  // mixture of branch states with product physical blocks: the diagonal
  // reference blocks of rho are then mixtures of product projectors
  Mat rho_mat = Mat::Zero(ctx.spec.total_dim(), ctx.spec.total_dim());
  for (int a = 0; a < components; ++a) {
    Vec f = random_unit_vector(rng, static_cast<long long>(dom.size()));
    std::vector<Vec> blocks;
    blocks.reserve(dom.size());
    for (size_t t = 0; t < dom.size(); ++t)
      blocks.push_back(random_product_state(rng, ctx.phys_spec).amps);
    PureState phi = assemble_branches(ctx, 1, f, blocks);
    rho_mat += (w[a] / wsum) * (phi.amps * phi.amps.adjoint());
  }
  DensityOp rho(ctx.spec, std::move(rho_mat));
  std::string input;

  for (const auto& hop : ctx.hops) {
    DensityOp out = apply_transform_mixed(hop, rho);
    DensityOp rho_phys = partial_trace(out, ctx.phys_positions);
    const double neg = max_cut_negativity(ctx, rho_phys);
    if (neg > s.tol) {
      if (input.empty()) input = density_to_json(rho).dump();
      add_failure(fs, i, "transformed-physical-ppt", neg, hop.from, hop.to, input);
    }
  }

  if (i % 3 == 2) {
    // factorized mixed form: reference part on the domain tensor an
    // entangled physical operator; negativity must not increase
    Mat ref_mat = Mat::Zero(ctx.spec.reference_dim(), ctx.spec.reference_dim());
    for (int a = 0; a < 2; ++a) {
      Vec f = random_unit_vector(rng, static_cast<long long>(dom.size()));
      Vec full = Vec::Zero(ctx.spec.reference_dim());
      for (size_t t = 0; t < dom.size(); ++t) full(dom[t]) = f(t);
      ref_mat += 0.5 * (full * full.adjoint());
    }
    Mat phys_mat = Mat::Zero(ctx.dp, ctx.dp);
    for (int a = 0; a < 2; ++a) {
      Vec chi = random_unit_vector(rng, ctx.dp);
      phys_mat += 0.5 * (chi * chi.adjoint());
    }
    DensityOp rho_sf(ctx.spec, kron(ref_mat, phys_mat));
    DensityOp phys0(ctx.phys_spec, phys_mat);
    std::vector<double> base;
    for (const auto& cut : ctx.cuts) base.push_back(negativity(phys0, cut));

    std::string input_sf;
    for (const auto& hop : ctx.hops) {
      DensityOp out = apply_transform_mixed(hop, rho_sf);
      DensityOp rho_phys = partial_trace(out, ctx.phys_positions);
      for (size_t c = 0; c < ctx.cuts.size(); ++c) {
        const double after = negativity(rho_phys, ctx.cuts[c]);
        if (after > base[c] + s.tol) {
          if (input_sf.empty()) input_sf = density_to_json(rho_sf).dump();
          add_failure(fs, i, "mixed-negativity-nonincreasing", after - base[c], hop.from, hop.to,
                      input_sf);
        }
      }
    }
  }
  return fs;
}

// ---------------------------------------------------------------- oracle

struct OracleHop {
  int k = 0, l = 0;
  QrfTransform transform;
  Mat oracle;  // swap-form construction
};

struct OracleContext {
  Context base;
  std::vector<OracleHop> hops;      // all ordered pairs k != l
  std::vector<Mat> trivial;         // branch-sum matrix for k -> k, per k
};

OracleContext make_oracle_context(const SuiteSpec& s) {
  OracleContext octx{make_context(s, false), {}, {}};
  for (int k = 1; k <= s.frames; ++k) {
    for (int l = 1; l <= s.frames; ++l) {
      if (k == l) continue;
      octx.hops.push_back(OracleHop{k, l, build_passive_transform(octx.base.config, k, l),
                                    detail::swap_form_transform_matrix(octx.base.config, k, l)});
    }
    octx.trivial.push_back(detail::passive_matrix(octx.base.config, k, k));
  }
  return octx;
}

Mat domain_projector_for(const Context& ctx, int k) {
  Mat p = Mat::Zero(ctx.spec.total_dim(), ctx.spec.total_dim());
  for (long long t : ctx.domain[k - 1])
    for (long long q = 0; q < ctx.dp; ++q) p(t * ctx.dp + q, t * ctx.dp + q) = 1.0;
  return p;
}

std::vector<TrialFailure> oracle_trial(const OracleContext& octx, const SuiteSpec& s, long i) {
  std::vector<TrialFailure> fs;
  const Context& ctx = octx.base;
  TrialRng rng(s.seed, static_cast<std::uint64_t>(i));

  for (const auto& hop : octx.hops) {
    const long long dom_dim = static_cast<long long>(ctx.domain[hop.k - 1].size()) * ctx.dp;
    PureState psi(ctx.spec, scatter_domain(ctx, hop.k, random_unit_vector(rng, dom_dim)));
    const Vec structured = apply_transform(hop.transform, psi).amps;
    const Vec dense = hop.transform.matrix * psi.amps;
    const Vec oracle = hop.oracle * psi.amps;
    const double dev_sd = max_abs_vec(structured - dense);
    const double dev_do = max_abs_vec(dense - oracle);
    std::string input;
    if (dev_sd > s.tol) {
      input = state_to_json(psi).dump();
      add_failure(fs, i, "structured-vs-dense", dev_sd, hop.k, hop.l, input);
    }
    if (dev_do > s.tol) {
      if (input.empty()) input = state_to_json(psi).dump();
      add_failure(fs, i, "dense-vs-swap-form", dev_do, hop.k, hop.l, input);
    }
    if (i == 0) {
      const Mat& t = hop.transform.matrix;
      const double r_dom = max_abs(t.adjoint() * t - domain_projector_for(ctx, hop.k));
      const double r_cod = max_abs(t * t.adjoint() - domain_projector_for(ctx, hop.l));
      if (r_dom > s.tol) add_failure(fs, i, "isometry-domain", r_dom, hop.k, hop.l, "");
      if (r_cod > s.tol) add_failure(fs, i, "isometry-codomain", r_cod, hop.k, hop.l, "");
    }
  }

  for (int k = 1; k <= ctx.config.frames; ++k) {
    const long long dom_dim = static_cast<long long>(ctx.domain[k - 1].size()) * ctx.dp;
    PureState psi(ctx.spec, scatter_domain(ctx, k, random_unit_vector(rng, dom_dim)));
    const Vec out = octx.trivial[k - 1] * psi.amps;
    const double dev = max_abs_vec(out - psi.amps);
    if (dev > s.tol)
      add_failure(fs, i, "trivial-hop-identity", dev, k, k, state_to_json(psi).dump());
  }
  return fs;
}

// ---------------------------------------------------------------- runner

void sort_failures(std::vector<TrialFailure>& fs) {
  std::sort(fs.begin(), fs.end(), [](const TrialFailure& a, const TrialFailure& b) {
    if (a.trial != b.trial) return a.trial < b.trial;
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.predicate < b.predicate;
  });
}

// exceptions may not escape the parallel region; a throwing trial is
// recorded as a failure of its own kind
template <typename TrialFn>
std::vector<TrialFailure> guarded(const TrialFn& fn, long i) {
  try {
    return fn(i);
  } catch (const std::exception& ex) {
    return {TrialFailure{i, std::string("exception: ") + ex.what(), 0.0, 0, 0, ""}};
  }
}

template <typename TrialFn>
std::vector<TrialFailure> run_trials(long trials, Execution exec, const TrialFn& fn) {
  std::vector<std::vector<TrialFailure>> per(static_cast<size_t>(trials));
  const bool par = exec == Execution::Parallel && parallel_enabled();
#pragma omp parallel for schedule(dynamic) if (par)
  for (long i = 0; i < trials; ++i) per[static_cast<size_t>(i)] = guarded(fn, i);
  std::vector<TrialFailure> all;
  for (auto& v : per)
    for (auto& f : v) all.push_back(std::move(f));
  sort_failures(all);
  return all;
}

VerificationReport init_report(const SuiteSpec& s) {
  VerificationReport r;
  r.kind = s.kind;
  r.group_name = s.group_name;
  r.frames = s.frames;
  r.physical_names = s.physical_names;
  r.trials_requested = s.trials;
  r.seed = s.seed;
  r.tol = s.tol;
  return r;
}

}  // namespace

namespace detail {

Mat swap_form_transform_matrix(const FrameConfig& config, int k, int l) {
  const int n = config.group.order(), m = config.frames, e = config.group.identity();
  const FactorSpec spec = config.spec();
  const long long dim = spec.total_dim();
  Representation reg = Representation::regular(config.group);

  Mat acc = Mat::Zero(dim, dim);
  for (int g = 0; g < n; ++g) {
    Mat ctrl = Mat::Zero(n, n);
    ctrl(config.group.inverse(g), g) = 1.0;  // |g^-1><g| on frame l
    Mat term = Mat::Identity(1, 1);
    for (int i = 1; i <= m; ++i) {
      if (i == k)
        term = kron(term, Mat::Identity(n, n));
      else if (i == l)
        term = kron(term, ctrl);
      else
        term = kron(term, reg.matrix_dagger(g));
    }
    for (const auto& rep : config.physical) term = kron(term, rep.matrix_dagger(g));
    acc += term;
  }

  // swap the k and l slot labels, then keep only domain columns (g_k = e)
  const int kpos = spec.frame_position(k), lpos = spec.frame_position(l);
  Mat swapped(dim, dim);
  for (long long r = 0; r < dim; ++r) {
    auto labels = spec.unflatten(r);
    std::swap(labels[kpos], labels[lpos]);
    swapped.row(spec.flatten(labels)) = acc.row(r);
  }
  for (long long c = 0; c < dim; ++c)
    if (spec.unflatten(c)[kpos] != e) swapped.col(c).setZero();
  return swapped;
}

}  // namespace detail

VerificationReport run_suite(const SuiteSpec& spec, Execution exec) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report = init_report(spec);

  if (spec.kind == SuiteKind::Mixed) {
    // PPT is decisive only for 2x2 here
    FrameConfig probe(spec.group, spec.frames, spec.physical);
    const FactorSpec ps = probe.spec().physical_subspec();
    if (ps.size() != 2 || ps.at(0).dim != 2 || ps.at(1).dim != 2)
      fail(Err::ConfigError, "mixed suite needs a 2x2 physical sector");
  }

  if (spec.kind == SuiteKind::Corollary) {
    Context ctx = make_context(spec, true);
    const long target = spec.trials;
    const long max_attempts = spec.trials * 200 + 1024;
    long next = 0, accepted = 0;
    std::vector<TrialFailure> failures;
    while (accepted < target && next < max_attempts) {
      const long chunk =
          std::min(max_attempts - next, std::max<long>(target - accepted, 16) * 4);
      std::vector<AttemptOutcome> outcomes(static_cast<size_t>(chunk));
      const bool par = exec == Execution::Parallel && parallel_enabled();
#pragma omp parallel for schedule(dynamic) if (par)
      for (long j = 0; j < chunk; ++j) {
        try {
          outcomes[static_cast<size_t>(j)] = corollary_attempt(ctx, spec, next + j);
        } catch (const std::exception& ex) {
          AttemptOutcome o;
          o.accepted = true;
          o.failures.push_back(TrialFailure{next + j, std::string("exception: ") + ex.what(),
                                            0.0, 0, 0, ""});
          outcomes[static_cast<size_t>(j)] = std::move(o);
        }
      }
      long consumed = 0;
      for (long j = 0; j < chunk && accepted < target; ++j) {
        consumed = j + 1;
        auto& o = outcomes[static_cast<size_t>(j)];
        if (!o.accepted) continue;
        ++accepted;
        for (auto& f : o.failures) failures.push_back(std::move(f));
      }
      next += consumed;
    }
    sort_failures(failures);
    report.failures = std::move(failures);
    report.trials_run = accepted;
    report.attempts = next;
  } else if (spec.kind == SuiteKind::Oracle) {
    OracleContext octx = make_oracle_context(spec);
    report.failures =
        run_trials(spec.trials, exec, [&](long i) { return oracle_trial(octx, spec, i); });
    report.trials_run = spec.trials;
    report.attempts = spec.trials;
  } else {
    Context ctx = make_context(spec, true);
    auto fn = [&](long i) -> std::vector<TrialFailure> {
      switch (spec.kind) {
        case SuiteKind::Theorem: return theorem_trial(ctx, spec, i);
        case SuiteKind::NoCreation: return no_creation_trial(ctx, spec, i);
        case SuiteKind::Monotonicity: return monotonicity_trial(ctx, spec, i);
        case SuiteKind::Mixed: return mixed_trial(ctx, spec, i);
        default: return {};
      }
    };
    report.failures = run_trials(spec.trials, exec, fn);
    report.trials_run = spec.trials;
    report.attempts = spec.trials;
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

VerificationReport run_as(SuiteSpec spec, SuiteKind kind, Execution exec) {
  spec.kind = kind;
  return run_suite(spec, exec);
}

}  // namespace

VerificationReport run_theorem_suite(SuiteSpec spec, Execution exec) {
  return run_as(std::move(spec), SuiteKind::Theorem, exec);
}
VerificationReport run_corollary_suite(SuiteSpec spec, Execution exec) {
  return run_as(std::move(spec), SuiteKind::Corollary, exec);
}
VerificationReport run_no_creation_suite(SuiteSpec spec, Execution exec) {
  return run_as(std::move(spec), SuiteKind::NoCreation, exec);
}
VerificationReport run_monotonicity_suite(SuiteSpec spec, Execution exec) {
  return run_as(std::move(spec), SuiteKind::Monotonicity, exec);
}
VerificationReport run_mixed_suite(SuiteSpec spec, Execution exec) {
  return run_as(std::move(spec), SuiteKind::Mixed, exec);
}
VerificationReport run_oracle_suite(SuiteSpec spec, Execution exec) {
  return run_as(std::move(spec), SuiteKind::Oracle, exec);
}

std::string report_to_machine(const VerificationReport& report) {
  ojson j;
  j["schema"] = "qrflab.verify-report/1";
  j["suite"] = suite_name(report.kind);
  j["group"] = report.group_name;
  j["frames"] = report.frames;
  j["physical"] = report.physical_names;
  j["trials"] = report.trials_requested;
  j["seed"] = report.seed;
  j["tolerance"] = report.tol;
  j["trials_run"] = report.trials_run;
  j["attempts"] = report.attempts;
  ojson fails = ojson::array();
  for (const auto& f : report.failures) {
    ojson jf;
    jf["trial"] = f.trial;
    jf["predicate"] = f.predicate;
    jf["measured"] = f.measured;
    jf["hop"] = ojson::array({f.from, f.to});
    jf["state"] = f.state_json.empty() ? ojson(nullptr) : ojson::parse(f.state_json);
    fails.push_back(std::move(jf));
  }
  j["failures"] = std::move(fails);
  j["passed"] = report.passed();
  return j.dump(2) + "\n";
}

std::string report_to_human(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite      " << suite_name(report.kind) << "\n";
  os << "group      " << report.group_name << "   frames " << report.frames << "   physical ";
  for (size_t i = 0; i < report.physical_names.size(); ++i)
    os << (i ? "," : "") << report.physical_names[i];
  os << "\n";
  os << "trials     " << report.trials_run << "/" << report.trials_requested << " (attempts "
     << report.attempts << ")   seed " << report.seed << "   tol " << report.tol << "\n";
  os << "wall time  " << report.wall_seconds << " s\n";
  if (report.passed()) {
    os << "result     PASS (0 failures)\n";
  } else {
    os << "result     FAIL (" << report.failures.size() << " failures)\n";
    for (const auto& f : report.failures)
      os << "  trial " << f.trial << "  hop " << f.from << "->" << f.to << "  " << f.predicate
         << "  measured " << f.measured << "\n";
  }
  return os.str();
}

bool reproduce_failure(const SuiteSpec& spec, const TrialFailure& failure) {
  if (failure.state_json.empty()) return false;
  const ojson j = ojson::parse(failure.state_json);

  if (spec.kind == SuiteKind::Mixed) {
    Context ctx = make_context(spec, true);
    DensityOp rho = density_from_json(j);
    for (const auto& hop : ctx.hops) {
      if (hop.to != failure.to) continue;
      DensityOp rho_phys = partial_trace(apply_transform_mixed(hop, rho), ctx.phys_positions);
      if (failure.predicate == "transformed-physical-ppt")
        return max_cut_negativity(ctx, rho_phys) > spec.tol;
      if (failure.predicate == "mixed-negativity-nonincreasing") {
        DensityOp phys0 = partial_trace(rho, ctx.phys_positions);
        for (size_t c = 0; c < ctx.cuts.size(); ++c)
          if (negativity(rho_phys, ctx.cuts[c]) >
              negativity(phys0, ctx.cuts[c]) + spec.tol)
            return true;
        return false;
      }
    }
    return false;
  }

  PureState psi = state_from_json(j);
  Context ctx = make_context(spec, true);

  if (spec.kind == SuiteKind::Oracle) {
    OracleContext octx = make_oracle_context(spec);
    if (failure.predicate == "trivial-hop-identity") {
      const Mat& t = octx.trivial[failure.from - 1];
      return max_abs_vec(t * psi.amps - psi.amps) > spec.tol;
    }
    for (const auto& hop : octx.hops) {
      if (hop.k != failure.from || hop.l != failure.to) continue;
      const Vec structured = apply_transform(hop.transform, psi).amps;
      const Vec dense = hop.transform.matrix * psi.amps;
      const Vec oracle = hop.oracle * psi.amps;
      if (failure.predicate == "structured-vs-dense")
        return max_abs_vec(structured - dense) > spec.tol;
      if (failure.predicate == "dense-vs-swap-form")
        return max_abs_vec(dense - oracle) > spec.tol;
    }
    return false;
  }

  auto view_for = [&](int l) {
    return l == 1 ? psi : apply_transform(ctx.hops[l - 2], psi);
  };

  if (spec.kind == SuiteKind::Corollary) {
    PureState view = view_for(failure.to);
    for (const auto& entry : conditional_decomposition(view).entries)
      if (entry.state && min_single_factor_purity(*entry.state) < 1.0 - spec.tol) return false;
    return true;  // still no non-separable conditional: violation reproduces
  }

  PureState out = view_for(failure.to);
  DensityOp rho_phys = reduced_state(out, ctx.phys_positions);

  if (failure.predicate == "conditional-separable") {
    for (const auto& entry : conditional_decomposition(out).entries)
      if (entry.state && min_single_factor_purity(*entry.state) < 1.0 - spec.tol) return true;
    return false;
  }
  if (failure.predicate == "physical-ppt" || failure.predicate == "negativity-zero")
    return max_cut_negativity(ctx, rho_phys) > spec.tol;
  if (failure.predicate == "concurrence-zero") return concurrence(rho_phys) > spec.tol;

  // monotonicity family: recover the physical part from the first branch
  const auto dec = conditional_decomposition(psi);
  const PureState* phys = nullptr;
  for (const auto& entry : dec.entries)
    if (entry.state) {
      phys = &*entry.state;
      break;
    }
  if (!phys) return false;
  DensityOp base_rho = projector(*phys);
  if (failure.predicate == "negativity-nonincreasing" ||
      failure.predicate == "negativity-unitary-equality") {
    for (size_t c = 0; c < ctx.cuts.size(); ++c) {
      const double base = negativity(base_rho, ctx.cuts[c]);
      const double after = negativity(rho_phys, ctx.cuts[c]);
      if (failure.predicate == "negativity-nonincreasing" && after > base + spec.tol) return true;
      if (failure.predicate == "negativity-unitary-equality" &&
          std::abs(after - base) > spec.tol)
        return true;
    }
    return false;
  }
  if (failure.predicate == "concurrence-nonincreasing" ||
      failure.predicate == "concurrence-unitary-equality") {
    const double base = concurrence(base_rho);
    const double after = concurrence(rho_phys);
    if (failure.predicate == "concurrence-nonincreasing") return after > base + spec.tol;
    return std::abs(after - base) > spec.tol;
  }
  return false;
}

}  // namespace qrf
