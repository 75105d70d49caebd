#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liectrl/closure.hpp"
#include "liectrl/matrep.hpp"
#include "liectrl/pauli.hpp"

using namespace liectrl;

namespace {
CMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::normal_distribution<double> g;
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = std::complex<double>(g(rng), g(rng));
  return m;
}
}  // namespace

TEST_CASE("vec stacks columns") {
  CMatrix id = CMatrix::Identity(2, 2);
  Eigen::VectorXcd v = vec(id);
  CHECK(std::abs(v(0) - 1.0) < 1e-15);
  CHECK(std::abs(v(1)) < 1e-15);
  CHECK(std::abs(v(2)) < 1e-15);
  CHECK(std::abs(v(3) - 1.0) < 1e-15);
}

TEST_CASE("unvec inverts vec") {
  std::mt19937 rng(1);
  for (int t = 0; t < 10; ++t) {
    CMatrix a = random_matrix(rng, 3, 5);
    CHECK((unvec(vec(a), 3, 5) - a).norm() < 1e-15);
  }
}

TEST_CASE("commutation matrix transposes under vec") {
  std::mt19937 rng(2);
  for (int N : {1, 2, 3, 4}) {
    CMatrix k = commutation_matrix(N);
    CHECK((k * k - CMatrix::Identity(N * N, N * N)).norm() < 1e-14);
    CHECK((k - k.transpose()).norm() < 1e-14);
    CHECK(std::abs(k.trace().real() - N) < 1e-12);
    CMatrix a = random_matrix(rng, N, N);
    CHECK((k * vec(a) - vec(a.transpose().eval())).norm() < 1e-13);
  }
}

TEST_CASE("commutation matrix eigenvalue multiplicities") {
  for (int N : {2, 4}) {
    CMatrix k = commutation_matrix(N);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(k);
    int plus = 0, minus = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-8) ++plus;
      if (std::abs(es.eigenvalues()(i) + 1.0) < 1e-8) ++minus;
    }
    CHECK(plus == N * (N + 1) / 2);
    CHECK(minus == N * (N - 1) / 2);
  }
}

TEST_CASE("nullspace of the zero matrix is everything") {
  auto r = nullspace(CMatrix::Zero(2, 2));
  CHECK(r.dim() == 2);
  CHECK(r.residual_max == 0.0);
}

TEST_CASE("nullspace of the identity is empty") {
  auto r = nullspace(CMatrix::Identity(4, 4));
  CHECK(r.dim() == 0);
}

TEST_CASE("nullspace basis is orthonormal with small residuals") {
  std::mt19937 rng(3);
  CMatrix a = random_matrix(rng, 3, 6);  // rank 3, kernel dim 3
  auto r = nullspace(a);
  REQUIRE(r.dim() == 3);
  CHECK((r.basis.adjoint() * r.basis - CMatrix::Identity(3, 3)).norm() < 1e-10);
  CHECK(r.residual_max < 1e-10);
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const int rows = 2 + t % 5, cols = 2 + (t * 7) % 6;
    CMatrix a = random_matrix(rng, rows, cols);
    if (t % 3 == 0 && rows > 1) a.row(rows - 1) = a.row(0);  // force rank drop sometimes
    CHECK(rank(a) + nullspace(a).dim() == cols);
  }
}

TEST_CASE("rank of identity and of outer products") {
  CHECK(rank(CMatrix::Identity(5, 5)) == 5);
  std::mt19937 rng(5);
  CMatrix u = random_matrix(rng, 4, 1), v = random_matrix(rng, 4, 1);
  CHECK(rank(CMatrix(u * v.adjoint())) == 1);
}

TEST_CASE("vectorized exchange-algebra basis has full rank") {
  // ten two-qubit strings spanning a dim-10 subalgebra
  std::vector<const char*> strings{"XI", "YI", "ZI", "XX", "YY", "XY", "YX", "ZX", "ZY", "IZ"};
  CMatrix m(16, 10);
  int col = 0;
  for (const char* s : strings) {
    m.col(col++) = vec(to_matrix(PauliExpr::term(*PauliTerm::from_string(s))));
  }
  CHECK(rank(m) == 10);
}

TEST_CASE("intersection with the full space returns the other span") {
  std::mt19937 rng(6);
  CMatrix b = random_matrix(rng, 4, 2);
  Eigen::HouseholderQR<CMatrix> qr(b);
  CMatrix q = qr.householderQ() * CMatrix::Identity(4, 2);
  auto r = intersect_subspaces({CMatrix::Identity(4, 4), q});
  REQUIRE(r.dim() == 2);
  // same span: projector distance vanishes
  CHECK((r.basis * r.basis.adjoint() - q * q.adjoint()).norm() < 1e-9);
}

TEST_CASE("orthogonal lines intersect trivially") {
  CMatrix e1 = CMatrix::Zero(2, 1), e2 = CMatrix::Zero(2, 1);
  e1(0, 0) = 1;
  e2(1, 0) = 1;
  CHECK(intersect_subspaces({e1, e2}).dim() == 0);
}

TEST_CASE("joint form kernel of the exchange chain generators is the canonical skew matrix") {
  // generators of the two-site exchange system with one controlled end
  std::vector<PauliExpr> gens{PauliExpr::single(2, 1, PauliLetter::X),
                              PauliExpr::single(2, 1, PauliLetter::Y)};
  PauliExpr drift(2);
  drift.add_code(PauliTerm::single(2, 1, PauliLetter::X).code() |
                     PauliTerm::single(2, 2, PauliLetter::X).code(),
                 Rational(1));
  drift.add_code(PauliTerm::single(2, 1, PauliLetter::Y).code() |
                     PauliTerm::single(2, 2, PauliLetter::Y).code(),
                 Rational(1));
  gens.push_back(drift);

  std::vector<CMatrix> kernels;
  for (const auto& g : gens) kernels.push_back(nullspace(form_constraint(to_matrix(g))).basis);
  auto joint = intersect_subspaces(kernels);
  REQUIRE(joint.dim() == 1);

  CMatrix s = unvec(joint.basis.col(0), 4, 4);
  CMatrix j2(4, 4);
  j2.setZero();
  j2(0, 3) = 1;
  j2(1, 2) = 1;
  j2(2, 1) = -1;
  j2(3, 0) = -1;
  // equal up to a unit phase
  std::complex<double> overlap = (j2.adjoint() * s).trace();
  const double phase_mag = std::abs(overlap) / (j2.norm() * s.norm());
  CHECK(phase_mag > 1.0 - 1e-9);
}

TEST_CASE("dense caps refuse oversized constraint systems") {
  CHECK_THROWS_AS(form_constraint(CMatrix::Zero(65, 65)), CapExceeded);
  CHECK_THROWS_AS(commutator_constraint(CMatrix::Zero(65, 65)), CapExceeded);
}

TEST_CASE("non-finite entries are rejected") {
  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(nullspace(bad), InvalidInput);
}
