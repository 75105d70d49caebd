#include <catch2/catch_amalgamated.hpp>

#include "liectrl/graph.hpp"

using namespace liectrl;

namespace {

PauliExpr string_of(int n, const char* s) {
  return PauliExpr::term(*PauliTerm::from_string(s));
}

PauliExpr xx_chain(int n) {
  PauliExpr drift(n);
  for (int k = 1; k < n; ++k) {
    drift.add_code(PauliTerm::single(n, k, PauliLetter::X).code() |
                       PauliTerm::single(n, k + 1, PauliLetter::X).code(),
                   Rational(1));
    drift.add_code(PauliTerm::single(n, k, PauliLetter::Y).code() |
                       PauliTerm::single(n, k + 1, PauliLetter::Y).code(),
                   Rational(1));
  }
  return drift;
}

ControlSystem local_pair_system() {
  ControlSystem sys;
  sys.n = 2;
  sys.drift = PauliExpr(2);
  for (int s : {1, 2})
    for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z})
      sys.controls.push_back(PauliExpr::single(2, s, l));
  sys.label = "uncoupled local pair";
  return sys;
}

ControlSystem zzz_system() {
  ControlSystem sys;
  sys.n = 3;
  sys.drift = string_of(3, "ZZZ");
  for (int s : {1, 2, 3})
    for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z})
      sys.controls.push_back(PauliExpr::single(3, s, l));
  sys.label = "three-body drift, full local control";
  return sys;
}

// blocks {q1,q2} and {q3} with drift IZZ; locals on 1, 2 and 3
ControlSystem split_system() {
  ControlSystem sys;
  sys.n = 3;
  sys.drift = string_of(3, "IZZ");
  for (int s : {1, 2, 3})
    for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z})
      sys.controls.push_back(PauliExpr::single(3, s, l));
  return sys;
}

}  // namespace

TEST_CASE("uncoupled pair has an edgeless disconnected graph") {
  auto sys = local_pair_system();
  auto g = coupling_graph(sys);
  CHECK(g.vertices == 2);
  CHECK(g.edges.empty());
  CHECK_FALSE(is_connected_graph(g));
}

TEST_CASE("exchange chain yields a path graph") {
  ControlSystem sys;
  sys.n = 4;
  sys.drift = xx_chain(4);
  sys.controls = {PauliExpr::single(4, 1, PauliLetter::X)};
  auto g = coupling_graph(sys);
  CHECK(g.vertices == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
  CHECK(is_connected_graph(g));
}

TEST_CASE("single vertex graphs are connected") {
  CouplingGraph g;
  g.vertices = 1;
  CHECK(is_connected_graph(g));
}

TEST_CASE("order-three drift admits no coupling graph") {
  CHECK_THROWS_AS(coupling_graph(zzz_system()), InvalidInput);
  // but the same drift has order two w.r.t. a coarser structure
  TensorStructure coarse;
  coarse.qubit_blocks = {2, 1};
  auto g = coupling_graph(zzz_system(), coarse);
  CHECK(g.vertices == 2);
  CHECK(g.edges.size() == 1);
}

TEST_CASE("nonlocal controls are rejected") {
  ControlSystem sys;
  sys.n = 2;
  sys.drift = PauliExpr(2);
  sys.controls = {string_of(2, "XX")};
  CHECK_THROWS_AS(coupling_graph(sys), InvalidInput);
}

TEST_CASE("three-body system is weakly connected") {
  auto sys = zzz_system();
  auto basis = lie_closure(sys.generators());
  CHECK(is_weakly_connected(sys, basis, TensorStructure::qubits(3)).connected);
  CHECK(is_connected_general(sys, basis).connected);
}

TEST_CASE("uncoupled pair is not weakly connected") {
  auto sys = local_pair_system();
  auto basis = lie_closure(sys.generators());
  CHECK_FALSE(is_weakly_connected(sys, basis, TensorStructure::qubits(2)).connected);
  CHECK_FALSE(is_connected_general(sys, basis).connected);
  CHECK_FALSE(is_directly_connected(sys, basis));
}

TEST_CASE("split system is weakly connected only for the coarse structure") {
  auto sys = split_system();
  auto basis = lie_closure(sys.generators());
  TensorStructure coarse;
  coarse.qubit_blocks = {2, 1};
  CHECK(is_weakly_connected(sys, basis, coarse).connected);
  CHECK_FALSE(is_weakly_connected(sys, basis, TensorStructure::qubits(3)).connected);
  CHECK_FALSE(is_connected_general(sys, basis).connected);
}

TEST_CASE("complete exchange coupling is directly connected") {
  const int n = 3;
  ControlSystem sys;
  sys.n = n;
  PauliExpr drift(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      drift.add_code(PauliTerm::single(n, a, PauliLetter::X).code() |
                         PauliTerm::single(n, b, PauliLetter::X).code(),
                     Rational(1));
      drift.add_code(PauliTerm::single(n, a, PauliLetter::Y).code() |
                         PauliTerm::single(n, b, PauliLetter::Y).code(),
                     Rational(1));
    }
  sys.drift = drift;
  for (int s = 1; s <= n; ++s) {
    sys.controls.push_back(PauliExpr::single(n, s, PauliLetter::X));
    sys.controls.push_back(PauliExpr::single(n, s, PauliLetter::Y));
  }
  auto basis = lie_closure(sys.generators());
  CHECK(is_directly_connected(sys, basis));
  CHECK(is_connected_general(sys, basis).connected);
}

TEST_CASE("three-body system fails direct connectivity on joint-support pairs") {
  // the closure never contains an element supported on exactly one qubit pair
  // with a genuinely coupling term, since every coupling term is three-body
  auto sys = zzz_system();
  auto basis = lie_closure(sys.generators());
  CHECK_FALSE(is_directly_connected(sys, basis));
}

TEST_CASE("connectivity notions are ordered by strength") {
  // directly connected implies connected implies weakly connected
  std::vector<ControlSystem> systems{local_pair_system(), zzz_system(), split_system()};
  for (const auto& sys : systems) {
    auto basis = lie_closure(sys.generators());
    const bool direct = is_directly_connected(sys, basis);
    const bool conn = is_connected_general(sys, basis).connected;
    const bool weak =
        is_weakly_connected(sys, basis, TensorStructure::qubits(sys.n)).connected;
    if (direct) CHECK(conn);
    if (conn) CHECK(weak);
  }
}

TEST_CASE("order-two systems: graph connectivity agrees with the general notion") {
  for (int n : {2, 3, 4}) {
    ControlSystem sys;
    sys.n = n;
    sys.drift = xx_chain(n);
    sys.controls = {PauliExpr::single(n, 1, PauliLetter::X),
                    PauliExpr::single(n, 1, PauliLetter::Y)};
    auto basis = lie_closure(sys.generators());
    CHECK(is_connected_graph(coupling_graph(sys)) ==
          is_connected_general(sys, basis).connected);
  }
  auto sys = local_pair_system();
  auto basis = lie_closure(sys.generators());
  CHECK(is_connected_graph(coupling_graph(sys)) ==
        is_connected_general(sys, basis).connected);
}

TEST_CASE("DOT export lists vertices and labelled edges") {
  ControlSystem sys;
  sys.n = 3;
  sys.drift = xx_chain(3);
  sys.controls = {PauliExpr::single(3, 1, PauliLetter::X)};
  const std::string dot = to_dot(coupling_graph(sys));
  CHECK(dot.find("graph coupling {") != std::string::npos);
  CHECK(dot.find("q1 -- q2") != std::string::npos);
  CHECK(dot.find("q2 -- q3") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
}

TEST_CASE("prime ambient dimension is vacuously connected") {
  ControlSystem sys;
  sys.n = 1;
  sys.drift = PauliExpr(1);
  sys.controls = {PauliExpr::single(1, 1, PauliLetter::X)};
  auto basis = lie_closure(sys.generators());
  CHECK(is_connected_general(sys, basis).connected);
}
