#include <doctest.h>

#include <cmath>

#include "qrf/random.hpp"
#include "qrf/serialize.hpp"

using namespace qrf;

namespace {

FactorSpec four_qubits() { return FactorSpec::frames_then_systems(2, 2, {2, 2}); }

// |0>_1 |+>_2 |00>_AB
PureState example1_state() {
  const double s = std::sqrt(0.5);
  Vec amps = Vec::Zero(16);
  amps(0) = s;  // (0,0,0,0)
  amps(4) = s;  // (0,1,0,0)
  return PureState(four_qubits(), amps);
}

// (|00> Phi_{+i} + i |01> Phi_{-i}) / sqrt(2)
PureState example2_state() {
  Vec amps = Vec::Zero(16);
  amps(0) = 0.5;
  amps(3) = cxd(0.0, 0.5);
  amps(4) = cxd(0.0, 0.5);
  amps(7) = 0.5;
  return PureState(four_qubits(), amps);
}

}  // namespace

TEST_CASE("factor spec layout and flattening") {
  FactorSpec spec = FactorSpec::frames_then_systems(2, 3, {2, 5});
  CHECK(spec.size() == 4);
  CHECK(spec.total_dim() == 90);
  CHECK(spec.frame_count() == 2);
  CHECK(spec.physical_count() == 2);
  CHECK(spec.reference_dim() == 9);
  CHECK(spec.physical_dim() == 10);
  CHECK(spec.frame_position(2) == 1);
  CHECK(spec.physical_positions() == std::vector<int>{2, 3});

  // row-major index arithmetic oracle: strides (6, 2, 1) over dims (2, 3, 2)
  FactorSpec small({{2, Role::Physical, 1}, {3, Role::Physical, 2}, {2, Role::Physical, 3}});
  CHECK(small.flatten({1, 0, 1}) == 1 * 6 + 0 * 2 + 1);
  CHECK(small.flatten({1, 0, 1}) == 7);
  CHECK(small.unflatten(7) == std::vector<int>{1, 0, 1});
  for (long long i = 0; i < small.total_dim(); ++i) CHECK(small.flatten(small.unflatten(i)) == i);
}

TEST_CASE("factor spec validation") {
  CHECK_THROWS_AS(FactorSpec({{2, Role::Physical, 1}, {2, Role::Reference, 1}}), Error);
  CHECK_THROWS_AS(FactorSpec({{2, Role::Reference, 2}}), Error);
  CHECK_THROWS_AS(FactorSpec({{0, Role::Physical, 1}}), Error);
  CHECK_THROWS_AS(FactorSpec(std::vector<Factor>{}), Error);
}

TEST_CASE("basis states") {
  FactorSpec spec = four_qubits();
  PureState zero = basis_state(spec, {0, 0, 0, 0});
  CHECK(zero.amps(0) == cxd(1.0));
  CHECK(zero.amps.norm() == 1.0);

  // the |01>_12 |00>_AB term sits at flat index 4
  PureState term = basis_state(spec, {0, 1, 0, 0});
  CHECK(term.amps(4) == cxd(1.0));

  try {
    basis_state(spec, {0, 2, 0, 0});
    FAIL("expected LabelOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Err::LabelOutOfRange);
  }
}

TEST_CASE("tensor products") {
  const double s = std::sqrt(0.5);
  FactorSpec ref1({{2, Role::Reference, 1}});
  FactorSpec ab({{2, Role::Physical, 1}, {2, Role::Physical, 2}});
  PureState zero(ref1, (Vec(2) << 1, 0).finished());
  PureState plus(ref1, (Vec(2) << s, s).finished());
  PureState both(ab, (Vec(4) << 1, 0, 0, 0).finished());

  PureState psi = tensor({zero, plus, both});
  CHECK(psi.spec == four_qubits());
  CHECK(max_abs_vec(psi.amps - example1_state().amps) <= kAlgebraTol);

  // appending a one-dimensional factor only extends the spec
  PureState unit(FactorSpec({{1, Role::Physical, 1}}), (Vec(1) << 1).finished());
  PureState extended = tensor({both, unit});
  CHECK(extended.amps == both.amps);
  CHECK(extended.spec.size() == 3);

  CHECK(std::abs(psi.amps.norm() - 1.0) <= kAlgebraTol);
  CHECK_THROWS_AS(tensor({}), Error);
}

TEST_CASE("partial trace of the frame-2 description of the first example") {
  // |0>_2 (x) GHZ_{1AB}: tracing the frames leaves an equal classical mixture
  Vec amps = Vec::Zero(16);
  const double s = std::sqrt(0.5);
  amps(0) = s;   // (0,0,0,0)
  amps(11) = s;  // (1,0,1,1)
  PureState psi(four_qubits(), amps);
  DensityOp rho_ab = reduced_state(psi, {2, 3});
  Mat expected = Mat::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs(rho_ab.rho - expected) <= kAlgebraTol);
}

TEST_CASE("partial trace keeps everything when asked to") {
  TrialRng rng(5, 0);
  PureState psi = random_state(rng, four_qubits());
  DensityOp rho = projector(psi);
  DensityOp kept = partial_trace(rho, {0, 1, 2, 3});
  CHECK(max_abs(kept.rho - rho.rho) == 0.0);
  CHECK_THROWS_AS(partial_trace(rho, {}), Error);
}

TEST_CASE("partial trace of product states gives product marginals") {
  FactorSpec spec({{2, Role::Physical, 1}, {3, Role::Physical, 2}, {2, Role::Physical, 3}});
  for (int trial = 0; trial < 20; ++trial) {
    TrialRng rng(42, trial);
    Vec a = random_unit_vector(rng, 2), b = random_unit_vector(rng, 3),
        c = random_unit_vector(rng, 2);
    PureState psi(spec, kron_vec(kron_vec(a, b), c));
    DensityOp rho = projector(psi);

    DensityOp mb = partial_trace(rho, {1});
    CHECK(max_abs(mb.rho - b * b.adjoint()) <= kAlgebraTol);
    DensityOp mac = partial_trace(rho, {0, 2});
    CHECK(max_abs(mac.rho - kron(a * a.adjoint(), c * c.adjoint())) <= kAlgebraTol);

    // tracing one factor at a time equals tracing jointly
    DensityOp two_step = partial_trace(partial_trace(rho, {0, 1}), {1});
    CHECK(max_abs(two_step.rho - mb.rho) <= kAlgebraTol);
    CHECK(std::abs(mb.rho.trace().real() - 1.0) <= kAlgebraTol);
  }
}

TEST_CASE("conditional states of the first worked example") {
  PureState psi = example1_state();
  Conditional c00 = conditional_state(psi, {0, 0});
  CHECK(std::abs(c00.weight - cxd(std::sqrt(0.5))) <= kAlgebraTol);
  REQUIRE(c00.state.has_value());
  CHECK(std::abs(c00.state->amps(0) - cxd(1.0)) <= kAlgebraTol);

  Conditional c10 = conditional_state(psi, {1, 0});
  CHECK(c10.weight == cxd(0.0));
  CHECK_FALSE(c10.state.has_value());

  CHECK_THROWS_AS(conditional_state(psi, {0}), Error);
  try {
    conditional_state(psi, {0, 0, 0});
    FAIL("expected TupleLengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Err::TupleLengthMismatch);
  }
}

TEST_CASE("conditional state of the second worked example carries the branch phase") {
  PureState psi = example2_state();
  Conditional c = conditional_state(psi, {0, 1});
  // weight i/sqrt(2), state Phi_{-i} = (|00> - i|11>)/sqrt(2)
  CHECK(std::abs(c.weight - cxd(0.0, std::sqrt(0.5))) <= kAlgebraTol);
  REQUIRE(c.state.has_value());
  const double s = std::sqrt(0.5);
  CHECK(std::abs(c.state->amps(0) - cxd(s)) <= kAlgebraTol);
  CHECK(std::abs(c.state->amps(3) - cxd(0.0, -s)) <= kAlgebraTol);
}

TEST_CASE("conditional decomposition reconstructs the state") {
  for (int trial = 0; trial < 20; ++trial) {
    TrialRng rng(7, trial);
    PureState psi = random_state(rng, FactorSpec::frames_then_systems(2, 3, {2, 2}));
    ConditionalDecomposition dec = conditional_decomposition(psi);
    CHECK(static_cast<long long>(dec.entries.size()) == psi.spec.reference_dim());
    CHECK(std::abs(dec.weight_norm_squared() - 1.0) <= kAlgebraTol);
    CHECK(max_abs_vec(dec.reconstruct().amps - psi.amps) <= kAlgebraTol);
  }
}

TEST_CASE("states supported on a frame identity have delta-shaped weights") {
  TrialRng rng(11, 0);
  FactorSpec spec = four_qubits();
  Vec amps = Vec::Zero(16);
  for (int i = 0; i < 8; ++i) amps(i) = rng.complex_gaussian();  // g_1 = 0 block
  amps /= amps.norm();
  PureState psi(spec, amps);
  for (const auto& entry : conditional_decomposition(psi).entries)
    if (entry.tuple[0] != 0) CHECK(entry.weight == cxd(0.0));
}

TEST_CASE("state and density serialization round-trips exactly") {
  for (int trial = 0; trial < 10; ++trial) {
    TrialRng rng(13, trial);
    PureState psi = random_state(rng, FactorSpec::frames_then_systems(1, 3, {2}));
    PureState back = state_from_json(state_to_json(psi));
    CHECK(back.spec == psi.spec);
    CHECK(back.amps == psi.amps);  // bitwise

    DensityOp rho = reduced_state(psi, {0, 1});
    DensityOp rho_back = density_from_json(density_to_json(rho));
    CHECK(rho_back.rho == rho.rho);
  }
}

TEST_CASE("normalization and well-formedness are enforced") {
  FactorSpec spec = four_qubits();
  Vec bad = Vec::Ones(16);
  CHECK_THROWS_AS(PureState(spec, bad), Error);
  CHECK_THROWS_AS(PureState(spec, Vec::Zero(4)), Error);

  Mat not_herm = Mat::Zero(16, 16);
  not_herm(0, 1) = 1.0;
  not_herm(0, 0) = 1.0;
  CHECK_THROWS_AS(DensityOp(spec, not_herm), Error);
  Mat neg = Mat::Zero(16, 16);
  neg(0, 0) = 2.0;
  neg(1, 1) = -1.0;
  CHECK_THROWS_AS(DensityOp(spec, neg), Error);
}
