#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrf/hilbert.hpp"
#include "qrf/repr.hpp"

namespace qrf {

/// Frame sector and physical sector over one symmetry group: m reference
/// factors, each carrying the group's regular action, followed by N physical
/// systems with declared representations of the same group.
struct FrameConfig {
  FrameConfig(FiniteGroup g, int frame_count, std::vector<Representation> physical_reps);

  FiniteGroup group;
  int frames;
  std::vector<Representation> physical;

  FactorSpec spec() const;
  long long physical_dim() const;

  /// Product action U_1(g) x ... x U_N(g) on the physical sector
  /// (1x1 identity when there are no physical systems).
  Mat physical_action(int g) const;
};

/// A frame-change operator in dense form.
///
/// Perspectival transforms re-express every factor relative to a new
/// constituent frame and include the relabeling swap of the two frame slots;
/// they are unitary on the whole space.
///
/// Passive transforms act on states described relative to frame `from`
/// (reference weight confined to the identity on that frame) and produce the
/// description relative to frame `to`, with no slot relabeling. They are
/// partial isometries: T^dag T projects onto the domain, T T^dag onto the
/// codomain.
struct QrfTransform {
  enum class Kind { Perspectival, Passive };

  Kind kind = Kind::Perspectival;
  int from = 0, to = 0;  // 1-based frame indices
  FrameConfig config;
  Mat matrix;

  Mat domain_projector() const;
  Mat codomain_projector() const;
  std::string domain_description() const;
  std::string codomain_description() const;
};

QrfTransform build_perspectival_transform(const FrameConfig& config, int from, int to);
QrfTransform build_passive_transform(const FrameConfig& config, int k, int l);

/// Structured application: reference-tuple permutation plus one product
/// unitary per branch. Agrees with matrix-vector multiplication by the dense
/// form. Passive transforms reject inputs with more than 1e-10 norm outside
/// their domain instead of silently projecting.
PureState apply_transform(const QrfTransform& t, const PureState& psi);
DensityOp apply_transform_mixed(const QrfTransform& t, const DensityOp& rho);

/// Factorized description relative to a standard axis k: a frame part with
/// all weight at the identity of frame k, tensored with a plain physical
/// state.
struct StandardFormPure {
  int axis = 0;
  PureState frame_part;
  PureState physical_part;
};

struct StandardFormMixed {
  int axis = 0;
  DensityOp frame_part;
  DensityOp physical_part;
};

struct PureFormResult {
  std::optional<StandardFormPure> form;
  std::string reason;  // set when not standard
  bool standard() const { return form.has_value(); }
};

struct MixedFormResult {
  std::optional<StandardFormMixed> form;
  std::string reason;
  bool standard() const { return form.has_value(); }
};

/// identity_label is the reference basis label of the group identity
/// (0 for every builtin construction).
PureFormResult standard_form_check(const PureState& psi, int k, double tol,
                                   int identity_label = 0);
MixedFormResult standard_form_check(const DensityOp& rho, int k, double tol,
                                    int identity_label = 0);

/// The channel induced on the physical sector when a standard form for axis
/// k is re-described relative to frame l: a mixture of product unitaries,
/// weights aggregated by the group element acting on the physical sector.
/// Matches tracing out the frames after the frame change.
struct LocalUnitaryMixture {
  std::vector<double> weights;
  std::vector<int> elements;   // acting group element h; branch applies U(h)^dag
  std::vector<Mat> unitaries;  // product unitary per branch
};

LocalUnitaryMixture induced_channel(const FrameConfig& config, int k, int l,
                                    const PureState& frame_part);

Mat apply_mixture(const LocalUnitaryMixture& mix, const Mat& rho_phys);

namespace detail {
/// Dense frame-change matrix from the branch-sum construction, defined for
/// any k, l; at k = l it degenerates to the projector onto the domain.
/// build_passive_transform rejects k = l, verification suites use this
/// directly for the trivial hop.
Mat passive_matrix(const FrameConfig& config, int k, int l);
}  // namespace detail

}  // namespace qrf
