#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "liectrl/pauli.hpp"

using namespace liectrl;

namespace {

// Independent dense oracle: 2x2 Pauli matrices expanded by explicit Kronecker
// products, without going through PauliExpr::to_matrix's bit tricks.
Eigen::Matrix2cd pauli2(PauliLetter l) {
  using std::complex;
  Eigen::Matrix2cd m;
  switch (l) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, complex<double>(0, -1), complex<double>(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::MatrixXcd kron_oracle(const PauliTerm& t) {
  Eigen::MatrixXcd m = pauli2(t.letter(1));
  for (int k = 2; k <= t.qubits(); ++k) {
    Eigen::MatrixXcd prev = m;
    const Eigen::Matrix2cd p = pauli2(t.letter(k));
    Eigen::MatrixXcd out(prev.rows() * 2, prev.cols() * 2);
    for (Eigen::Index i = 0; i < prev.rows(); ++i)
      for (Eigen::Index j = 0; j < prev.cols(); ++j)
        out.block(2 * i, 2 * j, 2, 2) = prev(i, j) * p;
    m = out;
  }
  return m;
}

Eigen::MatrixXcd expr_oracle(const PauliExpr& e) {
  const Eigen::Index N = Eigen::Index{1} << e.qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
  for (const auto& [code, c] : e.terms())
    m += std::complex<double>(0, -0.5) * to_double(c) * kron_oracle(PauliTerm(e.qubits(), code));
  return m;
}

PauliTerm random_term(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << (2 * n)) - 1);
  return PauliTerm(n, dist(rng));
}

PauliExpr random_expr(std::mt19937& rng, int n, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  PauliExpr e(n);
  const int m = nterms(rng);
  for (int i = 0; i < m; ++i) e.add(random_term(rng, n), Rational(num(rng), den(rng)));
  return e;
}

}  // namespace

TEST_CASE("term string round trip and encoding bijection") {
  auto t = PauliTerm::from_string("XZI");
  REQUIRE(t.has_value());
  CHECK(t->qubits() == 3);
  CHECK(t->str() == "XZI");
  CHECK(t->letter(1) == PauliLetter::X);
  CHECK(t->letter(2) == PauliLetter::Z);
  CHECK(t->letter(3) == PauliLetter::I);
  CHECK(t->weight() == 2);

  CHECK_FALSE(PauliTerm::from_string("XQ").has_value());
  CHECK_FALSE(PauliTerm::from_string("").has_value());

  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < count; ++code) {
      PauliTerm term(n, code);
      auto back = PauliTerm::from_string(term.str());
      REQUIRE(back.has_value());
      CHECK(back->code() == code);
    }
  }
}

TEST_CASE("single qubit products") {
  auto X = *PauliTerm::from_string("X");
  auto Y = *PauliTerm::from_string("Y");
  auto Z = *PauliTerm::from_string("Z");

  auto [p1, t1] = multiply_terms(X, Y);
  CHECK(p1 == Phase(1));  // XY = iZ
  CHECK(t1 == Z);

  auto [p2, t2] = multiply_terms(Y, X);
  CHECK(p2 == Phase(3));  // YX = -iZ
  CHECK(t2 == Z);

  auto [p3, t3] = multiply_terms(X, X);
  CHECK(p3 == Phase(0));
  CHECK(t3.is_identity());
}

TEST_CASE("identity factor leaves term unchanged") {
  auto id = PauliTerm::identity(4);
  auto p = *PauliTerm::from_string("XZYI");
  auto [phase, prod] = multiply_terms(id, p);
  CHECK(phase == Phase(0));
  CHECK(prod == p);
}

TEST_CASE("XX times YY gives -ZZ") {
  auto a = *PauliTerm::from_string("XX");
  auto b = *PauliTerm::from_string("YY");
  auto [phase, prod] = multiply_terms(a, b);
  // letterwise (iZ)(iZ) = -ZZ
  CHECK(phase == Phase(2));
  CHECK(prod.str() == "ZZ");
}

TEST_CASE("length mismatch is rejected") {
  auto a = *PauliTerm::from_string("XX");
  auto b = *PauliTerm::from_string("X");
  CHECK_THROWS_AS(multiply_terms(a, b), InvalidInput);
}

TEST_CASE("product phases against dense oracle") {
  std::mt19937 rng(12345);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_term(rng, n);
      auto b = random_term(rng, n);
      auto [phase, prod] = multiply_terms(a, b);
      Eigen::MatrixXcd lhs = kron_oracle(a) * kron_oracle(b);
      Eigen::MatrixXcd rhs = phase.value() * kron_oracle(prod);
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }
}

TEST_CASE("associativity of term products up to phase composition") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    auto a = random_term(rng, n);
    auto b = random_term(rng, n);
    auto c = random_term(rng, n);
    auto [pab, ab] = multiply_terms(a, b);
    auto [pab_c, ab_c] = multiply_terms(ab, c);
    auto [pbc, bc] = multiply_terms(b, c);
    auto [pa_bc, a_bc] = multiply_terms(a, bc);
    CHECK(ab_c == a_bc);
    CHECK(pab * pab_c == pbc * pa_bc);
  }
}

TEST_CASE("commutation parity matches phase symmetry") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    auto a = random_term(rng, n);
    auto b = random_term(rng, n);
    auto [pab, tab] = multiply_terms(a, b);
    auto [pba, tba] = multiply_terms(b, a);
    CHECK(tab == tba);
    // (ab)(ba) = a b b a = 1, so the phases are mutually inverse and their
    // ratio is +1 exactly for commuting pairs, -1 for anticommuting ones.
    CHECK(pab * pba == Phase(0));
    CHECK((pab == pba) == commute(a, b));
    CHECK((pab.exponent() % 2 == 0) == commute(a, b));
  }
}

TEST_CASE("bracket realizes su(2) relations in the -i/2 convention") {
  const int n = 1;
  auto z = PauliExpr::single(n, 1, PauliLetter::Z);
  auto x = PauliExpr::single(n, 1, PauliLetter::X);
  auto y = PauliExpr::single(n, 1, PauliLetter::Y);
  CHECK(bracket(z, x) == y);
  CHECK(bracket(x, y) == z);
  CHECK(bracket(y, z) == x);
}

TEST_CASE("bracket of element with itself vanishes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = random_expr(rng, 3);
    CHECK(bracket(h, h).is_zero());
  }
}

TEST_CASE("double bracket with z recovers the first chain coupling") {
  // ad^2 of the z-control on the two-site exchange term flips its sign twice:
  // [z1, [z1, xx+yy]] = -(xx+yy) up to the stated scalar bookkeeping.
  const int n = 2;
  auto z1 = PauliExpr::single(n, 1, PauliLetter::Z);
  PauliExpr coupling(n);
  coupling += PauliExpr::term(*PauliTerm::from_string("XX"));
  coupling += PauliExpr::term(*PauliTerm::from_string("YY"));

  auto once = bracket(z1, coupling);
  PauliExpr expected_once(n);
  // [z1, xx] = yx and [z1, yy] = -xy in the -i/2 convention
  expected_once += PauliExpr::term(*PauliTerm::from_string("YX"));
  expected_once -= PauliExpr::term(*PauliTerm::from_string("XY"));
  CHECK(once == expected_once);

  auto twice = bracket(z1, once);
  CHECK(twice == -coupling);
}

TEST_CASE("Jacobi identity holds exactly on random triples") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    auto a = random_expr(rng, n);
    auto b = random_expr(rng, n);
    auto c = random_expr(rng, n);
    PauliExpr jac = bracket(bracket(a, b), c);
    jac += bracket(bracket(b, c), a);
    jac += bracket(bracket(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("bracket is bilinear and antisymmetric") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    auto a = random_expr(rng, n);
    auto b = random_expr(rng, n);
    auto c = random_expr(rng, n);
    CHECK(bracket(a, b) == -bracket(b, a));
    CHECK(bracket(a + b, c) == bracket(a, c) + bracket(b, c));
    const Rational s(3, 7);
    CHECK(bracket(s * a, b) == s * bracket(a, b));
  }
}

TEST_CASE("order counts non-identity support") {
  PauliExpr e(2);
  e += PauliExpr::term(*PauliTerm::from_string("XX"));
  e += PauliExpr::term(*PauliTerm::from_string("YY"));
  CHECK(order(e) == 2);

  CHECK(order(PauliExpr::single(4, 1, PauliLetter::X)) == 1);
  CHECK(order(PauliExpr::term(*PauliTerm::from_string("ZZZ"))) == 3);
  CHECK_THROWS_AS(order(PauliExpr(2)), InvalidInput);
}

TEST_CASE("to_matrix of (-i/2)Z is diag(-i/2, i/2)") {
  auto m = to_matrix(PauliExpr::single(1, 1, PauliLetter::Z));
  CHECK(std::abs(m(0, 0) - std::complex<double>(0, -0.5)) < 1e-15);
  CHECK(std::abs(m(1, 1) - std::complex<double>(0, 0.5)) < 1e-15);
  CHECK(std::abs(m(0, 1)) < 1e-15);
  CHECK(std::abs(m(1, 0)) < 1e-15);

  CHECK(to_matrix(PauliExpr(3)).isZero(0.0));
}

TEST_CASE("to_matrix respects the dense cap") {
  CHECK_THROWS_AS(to_matrix(PauliExpr::single(5, 1, PauliLetter::X), 4), CapExceeded);
}

TEST_CASE("to_matrix matches Kronecker expansion oracle") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    auto e = random_expr(rng, n);
    CHECK((to_matrix(e) - expr_oracle(e)).norm() < 1e-12);
  }

  PauliExpr xxyy(2);
  xxyy += PauliExpr::term(*PauliTerm::from_string("XX"));
  xxyy += PauliExpr::term(*PauliTerm::from_string("YY"));
  Eigen::MatrixXcd m = to_matrix(xxyy);
  CHECK((m - expr_oracle(xxyy)).norm() < 1e-14);
  // anti-diagonal inner block carries the only entries
  CHECK(std::abs(m(1, 2) - std::complex<double>(0, -1)) < 1e-14);
  CHECK(std::abs(m(2, 1) - std::complex<double>(0, -1)) < 1e-14);
  CHECK(std::abs(m(0, 3)) < 1e-14);
}

TEST_CASE("to_matrix of a bracket equals the matrix commutator") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    auto a = random_expr(rng, n);
    auto b = random_expr(rng, n);
    Eigen::MatrixXcd ma = to_matrix(a), mb = to_matrix(b);
    CHECK((to_matrix(bracket(a, b)) - (ma * mb - mb * ma)).norm() < 1e-12);
  }
}

TEST_CASE("expressions drop cancelled terms") {
  PauliExpr e(2);
  auto t = *PauliTerm::from_string("XZ");
  e.add(t, Rational(1, 2));
  e.add(t, Rational(-1, 2));
  CHECK(e.is_zero());
  CHECK(e.size() == 0);
}
