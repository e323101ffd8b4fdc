#include <doctest.h>

#include "qrf/repr.hpp"

using namespace qrf;

namespace {

Mat sigma_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

}  // namespace

TEST_CASE("regular representation of the order-2 group is {1, sigma_x}") {
  Representation r = Representation::regular(builtin_group("Z2"));
  CHECK(r.dim() == 2);
  CHECK(max_abs(r.matrix(0) - Mat::Identity(2, 2)) == 0.0);
  CHECK(max_abs(r.matrix(1) - sigma_x()) == 0.0);
}

TEST_CASE("regular representation maps the identity to the identity matrix") {
  for (const char* name : {"Z3", "S3", "Z2xZ2"}) {
    FiniteGroup g = builtin_group(name);
    Representation r = Representation::regular(g);
    CHECK(max_abs(r.matrix(g.identity()) - Mat::Identity(g.order(), g.order())) == 0.0);
  }
}

TEST_CASE("Z3 regular generator is the cyclic shift with cube one") {
  Representation r = Representation::regular(builtin_group("Z3"));
  // U(1)|g> = |1+g>
  Mat expected = Mat::Zero(3, 3);
  expected(1, 0) = expected(2, 1) = expected(0, 2) = 1.0;
  CHECK(max_abs(r.matrix(1) - expected) == 0.0);
  Mat cube = r.matrix(1) * r.matrix(1) * r.matrix(1);
  CHECK(max_abs(cube - Mat::Identity(3, 3)) <= kAlgebraTol);
}

TEST_CASE("regular representation matrices are permutation matrices") {
  Representation r = Representation::regular(builtin_group("S3"));
  for (int g = 0; g < 6; ++g) {
    const Mat& u = r.matrix(g);
    for (int c = 0; c < 6; ++c) {
      int ones = 0;
      for (int row = 0; row < 6; ++row) {
        const cxd v = u(row, c);
        CHECK((v == cxd(0.0) || v == cxd(1.0)));
        ones += v == cxd(1.0);
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("representation_from_matrices validates its input") {
  FiniteGroup z2 = builtin_group("Z2");

  Representation ok = Representation::from_matrices(z2, {Mat::Identity(2, 2), sigma_x()});
  CHECK(ok.dim() == 2);

  Representation trivial = Representation::from_matrices(z2, {Mat::Identity(3, 3), Mat::Identity(3, 3)});
  CHECK(trivial.dim() == 3);

  try {
    Representation::from_matrices(z2, {Mat::Identity(2, 2), 0.5 * sigma_x()});
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotUnitary);
    CHECK(std::string(e.what()).find("element 1") != std::string::npos);
  }

  // diag(1, i) squares to diag(1, -1), not the identity
  Mat phase = Mat::Identity(2, 2);
  phase(1, 1) = cxd(0.0, 1.0);
  try {
    Representation::from_matrices(z2, {Mat::Identity(2, 2), phase});
    FAIL("expected NotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotHomomorphism);
  }

  try {
    Representation::from_matrices(z2, {sigma_x(), sigma_x()});
    FAIL("expected IdentityNotMappedToIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == Err::IdentityNotMappedToIdentity);
  }

  CHECK_THROWS_AS(Representation::from_matrices(z2, {Mat::Identity(2, 2)}), Error);
}

TEST_CASE("combined action of two shift qubits is sigma_x tensor sigma_x") {
  FiniteGroup z2 = builtin_group("Z2");
  Representation q = builtin_qubit_representation("Z2", z2);
  std::vector<Representation> reps = {q, q};
  CHECK(max_abs(combined_action(reps, 1) - kron(sigma_x(), sigma_x())) == 0.0);
  CHECK(max_abs(combined_action(reps, 0) - Mat::Identity(4, 4)) == 0.0);
}

TEST_CASE("combined action is itself a homomorphism") {
  FiniteGroup z3 = builtin_group("Z3");
  std::vector<Representation> reps = {Representation::regular(z3),
                                      builtin_qubit_representation("Z3", z3)};
  // direct matrix multiplication over all pairs
  std::vector<Mat> mats;
  for (int g = 0; g < 3; ++g) mats.push_back(combined_action(reps, g));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(max_abs(mats[a] * mats[b] - mats[z3.product(a, b)]) <= kAlgebraTol);
  // and survives full validation as a representation
  Representation combined = Representation::from_matrices(z3, mats);
  CHECK(combined.dim() == 6);
}

TEST_CASE("combined action rejects representations over different groups") {
  std::vector<Representation> reps = {Representation::regular(builtin_group("Z2")),
                                      Representation::regular(builtin_group("Z3"))};
  try {
    combined_action(reps, 0);
    FAIL("expected GroupMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Err::GroupMismatch);
  }
}

TEST_CASE("builtin qubit actions exist for every builtin group") {
  for (const char* name : {"Z2", "Z3", "Z2xZ2", "S3", "Z4"}) {
    FiniteGroup g = builtin_group(name);
    Representation q = builtin_qubit_representation(name, g);
    CHECK(q.dim() == 2);  // construction already validated the homomorphism
  }
  FiniteGroup z2 = builtin_group("Z2");
  CHECK(max_abs(builtin_qubit_representation("Z2", z2).matrix(1) - sigma_x()) == 0.0);
}
