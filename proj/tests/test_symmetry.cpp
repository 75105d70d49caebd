#include <catch2/catch_amalgamated.hpp>

#include "liectrl/symmetry.hpp"

using namespace liectrl;

namespace {

std::vector<PauliExpr> local_generators(int n, std::vector<int> sites) {
  std::vector<PauliExpr> gens;
  for (int s : sites)
    for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z})
      gens.push_back(PauliExpr::single(n, s, l));
  return gens;
}

PauliExpr string_expr(int n, const std::vector<std::pair<int, PauliLetter>>& letters,
                      Rational c = Rational(1)) {
  std::uint64_t code = 0;
  for (auto [site, l] : letters) code |= PauliTerm::single(n, site, l).code();
  PauliExpr e(n);
  e.add_code(code, c);
  return e;
}

// Quadratic-hopping generator set in qubit form for d levels: single-site Z
// strings plus the paired two-site ladder terms with interior Z chains.
std::vector<PauliExpr> quadratic_generators(int d) {
  std::vector<PauliExpr> gens;
  for (int p = 1; p <= d; ++p) gens.push_back(PauliExpr::single(d, p, PauliLetter::Z));
  for (int p = 2; p <= d; ++p) {
    for (int q = 1; q < p; ++q) {
      std::vector<std::pair<int, PauliLetter>> xs{{q, PauliLetter::X}, {p, PauliLetter::X}};
      std::vector<std::pair<int, PauliLetter>> ys{{q, PauliLetter::Y}, {p, PauliLetter::Y}};
      for (int m = q + 1; m < p; ++m) {
        xs.push_back({m, PauliLetter::Z});
        ys.push_back({m, PauliLetter::Z});
      }
      gens.push_back(string_expr(d, xs) + string_expr(d, ys));
      gens.push_back(string_expr(d, xs) - string_expr(d, ys));
    }
  }
  return gens;
}

}  // namespace

TEST_CASE("uncoupled local generators have a trivial centraliser") {
  auto report = centraliser(local_generators(2, {1, 2}));
  CHECK(report.centraliser_dim == 0);
  CHECK(report.commutant_dim == 1);
  CHECK(report.irreducible);
}

TEST_CASE("quadratic generator set on three qubits centralised by the all-Z string") {
  auto report = centraliser(quadratic_generators(3));
  REQUIRE(report.centraliser_dim == 1);
  const PauliExpr& s = report.centraliser_basis.front();
  REQUIRE(s.size() == 1);
  CHECK(PauliTerm(3, s.terms().begin()->first).str() == "ZZZ");
}

TEST_CASE("two commuting Z generators give a three-dimensional centraliser") {
  std::vector<PauliExpr> gens{PauliExpr::single(2, 1, PauliLetter::Z),
                              PauliExpr::single(2, 2, PauliLetter::Z)};
  auto report = centraliser(gens);
  CHECK(report.centraliser_dim == 3);  // ZI, IZ, ZZ

  // brute-force dense oracle over the 15-dim ambient coordinates
  std::vector<CMatrix> kernels;
  for (const auto& g : gens)
    kernels.push_back(nullspace(commutator_constraint(to_matrix(g))).basis);
  auto joint = intersect_subspaces(kernels);
  CHECK(joint.dim() == report.centraliser_dim + 1);  // identity direction included
}

TEST_CASE("centraliser elements commute exactly with the whole closure") {
  auto gens = quadratic_generators(3);
  auto report = centraliser(gens);
  auto basis = lie_closure(gens);
  for (const auto& s : report.centraliser_basis)
    for (const auto& k : basis.elements) CHECK(bracket(s, k).is_zero());
}

TEST_CASE("centraliser of generators equals centraliser of the closure") {
  auto gens = quadratic_generators(2);
  auto closure_basis = lie_closure(gens);
  auto from_gens = centraliser(gens);
  auto from_closure = centraliser(closure_basis.elements);
  CHECK(from_gens.centraliser_dim == from_closure.centraliser_dim);
  for (const auto& s : from_gens.centraliser_basis) {
    bool matched = false;
    for (const auto& t : from_closure.centraliser_basis)
      if (s == t) matched = true;
    CHECK(matched);
  }
}

TEST_CASE("dense centraliser path agrees with the exact path") {
  auto gens = quadratic_generators(2);
  std::vector<CMatrix> dense;
  for (const auto& g : gens) dense.push_back(to_matrix(g));
  auto dense_report = centraliser_dense(dense);
  auto exact_report = centraliser(gens);
  CHECK(dense_report.centraliser_dim == exact_report.centraliser_dim);
  CHECK(dense_report.commutant_dim == exact_report.commutant_dim);
}

TEST_CASE("tensor-square commutant of a full su(2) generator pair has dimension two") {
  std::vector<PauliExpr> gens{PauliExpr::single(1, 1, PauliLetter::X),
                              PauliExpr::single(1, 1, PauliLetter::Y)};
  CHECK(tensor_square_commutant_dim(gens) == 2);
}

TEST_CASE("tensor-square commutant of the uncoupled pair splits four ways") {
  // su(2) (+) su(2) acting on two qubits: the square has four isotypic
  // components of multiplicity one, so the commutant dimension is four.
  CHECK(tensor_square_commutant_dim(local_generators(2, {1, 2})) == 4);
}

TEST_CASE("transposition operator lies in every tensor-square commutant") {
  for (auto gens : {local_generators(2, {1, 2}), quadratic_generators(2)}) {
    auto result = tensor_square_commutant(gens);
    const long N = 1L << gens.front().qubits();
    const CMatrix k = commutation_matrix(static_cast<int>(N));
    // project K onto the commutant basis; the projection must reproduce it
    CMatrix residual = k;
    for (const auto& b : result.basis) {
      const std::complex<double> overlap = (b.adjoint() * k).trace();
      residual -= overlap * b;
    }
    CHECK(residual.norm() < 1e-7 * k.norm());
  }
}

TEST_CASE("alternating and symmetric restrictions of full su(2) are irreducible") {
  std::vector<PauliExpr> gens{PauliExpr::single(1, 1, PauliLetter::X),
                              PauliExpr::single(1, 1, PauliLetter::Y)};
  auto [alt, sym] = alt_sym_commutant_dims(gens);
  CHECK(alt == 1);
  CHECK(sym == 1);
}

TEST_CASE("alternating/symmetric split of the uncoupled pair") {
  auto [alt, sym] = alt_sym_commutant_dims(local_generators(2, {1, 2}));
  CHECK(alt == 2);
  CHECK(sym == 2);
}

TEST_CASE("tensor-square dimension against the two-subspace split") {
  // additivity holds when no isotypic component straddles the two subspaces
  for (auto gens : {local_generators(2, {1, 2}), local_generators(1, {1})}) {
    auto [alt, sym] = alt_sym_commutant_dims(gens);
    CHECK(alt + sym == tensor_square_commutant_dim(gens));
  }
  // shared components add cross blocks, so the full commutant can only grow
  auto gens = quadratic_generators(2);
  auto [alt, sym] = alt_sym_commutant_dims(gens);
  CHECK(alt + sym <= tensor_square_commutant_dim(gens));
}

TEST_CASE("tensor-square size cap is enforced") {
  CHECK_THROWS_AS(tensor_square_commutant_dim(local_generators(7, {1})), CapExceeded);
}

TEST_CASE("empty generator lists are rejected") {
  CHECK_THROWS_AS(centraliser(std::vector<PauliExpr>{}), InvalidInput);
}
