#pragma once

#include <string>
#include <vector>

#include "liectrl/system.hpp"

namespace liectrl::fermion {

/// Coupling data of a quadratic Hamiltonian on d levels: A collects the
/// pairing coefficients (real antisymmetric), B the hopping and on-site
/// coefficients (real symmetric). Entries are exact rationals.
struct QuadraticSpec {
  int d = 0;
  std::vector<std::vector<Rational>> A;
  std::vector<std::vector<Rational>> B;

  static QuadraticSpec zero(int d) {
    QuadraticSpec s;
    s.d = d;
    s.A.assign(static_cast<std::size_t>(d),
               std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    s.B = s.A;
    return s;
  }

  void validate() const {
    if (d < 1) throw InvalidInput("quadratic spec: level count must be positive");
    if (A.size() != static_cast<std::size_t>(d) || B.size() != static_cast<std::size_t>(d))
      throw InvalidInput("quadratic spec: matrix sizes must equal the level count");
    for (int p = 0; p < d; ++p) {
      if (A[static_cast<std::size_t>(p)].size() != static_cast<std::size_t>(d) ||
          B[static_cast<std::size_t>(p)].size() != static_cast<std::size_t>(d))
        throw InvalidInput("quadratic spec: matrix sizes must equal the level count");
      for (int q = 0; q < d; ++q) {
        if (A[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] !=
            -A[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])
          throw InvalidInput("quadratic spec: A must be antisymmetric");
        if (B[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] !=
            B[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])
          throw InvalidInput("quadratic spec: B must be symmetric");
      }
    }
  }
};

/// Majorana-type mode operator c_p on d levels; indices d+1..2d address the
/// second member of each pair.
struct MajoranaOp {
  int index = 1;  // 1..2d
  int d = 1;
};

/// The d-qubit string of a mode operator: a Z chain up to the mode position,
/// X for the first family, Y for the second.
inline PauliTerm jordan_wigner(const MajoranaOp& op) {
  if (op.d < 1) throw InvalidInput("jordan_wigner: level count must be positive");
  if (op.index < 1 || op.index > 2 * op.d)
    throw InvalidInput("jordan_wigner: index out of range");
  const bool second = op.index > op.d;
  const int p = second ? op.index - op.d : op.index;
  std::string s;
  for (int k = 1; k < p; ++k) s += 'Z';
  s += second ? 'Y' : 'X';
  for (int k = p; k < op.d; ++k) s += 'I';
  return *PauliTerm::from_string(s);
}

namespace detail {

inline std::uint64_t chain_code(int d, int q, int p, PauliLetter end) {
  // end letter at positions q and p (1-based, q < p), Z on the sites between
  std::uint64_t code = PauliTerm::single(d, q, end).code() |
                       PauliTerm::single(d, p, end).code();
  for (int m = q + 1; m < p; ++m) code |= PauliTerm::single(d, m, PauliLetter::Z).code();
  return code;
}

}  // namespace detail

/// Qubit image of the B_pp on-site term: -Z at site p.
inline PauliExpr onsite_generator(int d, int p, const Rational& value = Rational(1)) {
  PauliExpr e(d);
  e.add_code(PauliTerm::single(d, p, PauliLetter::Z).code(), -value);
  return e;
}

/// Qubit image of the B_pq hopping term (p > q): X Z...Z X + Y Z...Z Y.
inline PauliExpr hopping_generator(int d, int p, int q, const Rational& value = Rational(1)) {
  if (!(p > q && q >= 1 && p <= d)) throw InvalidInput("hopping_generator: need d >= p > q >= 1");
  PauliExpr e(d);
  e.add_code(detail::chain_code(d, q, p, PauliLetter::X), value);
  e.add_code(detail::chain_code(d, q, p, PauliLetter::Y), value);
  return e;
}

/// Qubit image of the A_pq pairing term (p > q): -(X Z...Z X - Y Z...Z Y).
inline PauliExpr pairing_generator(int d, int p, int q, const Rational& value = Rational(1)) {
  if (!(p > q && q >= 1 && p <= d)) throw InvalidInput("pairing_generator: need d >= p > q >= 1");
  PauliExpr e(d);
  e.add_code(detail::chain_code(d, q, p, PauliLetter::X), -value);
  e.add_code(detail::chain_code(d, q, p, PauliLetter::Y), value);
  return e;
}

/// One generator per nonzero independent entry of the spec, scaled by the
/// entry: on-site terms from the diagonal of B, hopping terms from its lower
/// triangle, pairing terms from the lower triangle of A.
inline std::vector<PauliExpr> quadratic_to_pauli(const QuadraticSpec& spec) {
  spec.validate();
  std::vector<PauliExpr> gens;
  const int d = spec.d;
  for (int p = 1; p <= d; ++p) {
    const Rational& v = spec.B[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(p - 1)];
    if (v != 0) gens.push_back(onsite_generator(d, p, v));
  }
  for (int p = 2; p <= d; ++p)
    for (int q = 1; q < p; ++q) {
      const Rational& v =
          spec.B[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
      if (v != 0) gens.push_back(hopping_generator(d, p, q, v));
    }
  for (int p = 2; p <= d; ++p)
    for (int q = 1; q < p; ++q) {
      const Rational& v =
          spec.A[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
      if (v != 0) gens.push_back(pairing_generator(d, p, q, v));
    }
  return gens;
}

/// Qubit image of the linear terms: sum_p j_p Z...Z X I...I.
inline PauliExpr linear_to_pauli(const std::vector<Rational>& j) {
  const int d = static_cast<int>(j.size());
  if (d < 1) throw InvalidInput("linear_to_pauli: empty coefficient vector");
  PauliExpr e(d);
  for (int p = 1; p <= d; ++p)
    e.add_code(jordan_wigner({p, d}).code(), j[static_cast<std::size_t>(p - 1)]);
  return e;
}

// ---------------------------------------------------------------------------
// Model systems. Control granularity: each independent matrix entry is one
// control; a lumped drift variant is available for alternative models.

/// All independent quadratic terms as controls; closure is the full canonical
/// algebra of quadratic Hamiltonians.
inline ControlSystem general_quadratic_system(int d, bool lump_into_drift = false) {
  if (d < 2) throw InvalidInput("general_quadratic_system: need d >= 2");
  ControlSystem sys;
  sys.n = d;
  sys.drift = PauliExpr(d);
  sys.label = "general quadratic, d=" + std::to_string(d);
  std::vector<PauliExpr> gens;
  for (int p = 1; p <= d; ++p) gens.push_back(onsite_generator(d, p));
  for (int p = 2; p <= d; ++p)
    for (int q = 1; q < p; ++q) {
      gens.push_back(hopping_generator(d, p, q));
      gens.push_back(pairing_generator(d, p, q));
    }
  if (lump_into_drift) {
    for (const auto& g : gens) sys.drift += g;
    sys.controls = {};
  } else {
    sys.controls = std::move(gens);
  }
  return sys;
}

/// Quadratic controls extended by the linear mode terms.
inline ControlSystem quadratic_linear_system(int d) {
  ControlSystem sys = general_quadratic_system(d);
  sys.label = "quadratic plus linear, d=" + std::to_string(d);
  for (int p = 1; p <= d; ++p) {
    std::vector<Rational> j(static_cast<std::size_t>(d), Rational(0));
    j[static_cast<std::size_t>(p - 1)] = 1;
    sys.controls.push_back(linear_to_pauli(j));
  }
  return sys;
}

/// Particle-number preserving controls only (no pairing terms).
inline ControlSystem number_preserving_system(int d) {
  if (d < 2) throw InvalidInput("number_preserving_system: need d >= 2");
  ControlSystem sys;
  sys.n = d;
  sys.drift = PauliExpr(d);
  sys.label = "number preserving, d=" + std::to_string(d);
  for (int p = 1; p <= d; ++p) sys.controls.push_back(onsite_generator(d, p));
  for (int p = 2; p <= d; ++p)
    for (int q = 1; q < p; ++q) sys.controls.push_back(hopping_generator(d, p, q));
  return sys;
}

/// Diagonal normal-form controls: the d commuting on-site terms.
inline ControlSystem diagonal_system(int d) {
  if (d < 1) throw InvalidInput("diagonal_system: need d >= 1");
  ControlSystem sys;
  sys.n = d;
  sys.drift = PauliExpr(d);
  sys.label = "diagonal normal form, d=" + std::to_string(d);
  for (int p = 1; p <= d; ++p) sys.controls.push_back(onsite_generator(d, p));
  return sys;
}

/// Spinless ring lattice with hopping t and site-resolved on-site controls.
/// The periodic boundary contributes the long Z-string hop between the first
/// and last site; it is kept exactly as the transformation produces it.
inline ControlSystem hubbard_spinless(int d, const Rational& t = Rational(1)) {
  if (d < 2) throw InvalidInput("hubbard_spinless: need d >= 2");
  ControlSystem sys;
  sys.n = d;
  sys.label = "spinless ring, d=" + std::to_string(d);
  PauliExpr drift(d);
  const Rational half_t = t / 2;
  for (int p = 1; p < d; ++p) {
    drift.add_code(detail::chain_code(d, p, p + 1, PauliLetter::X), half_t);
    drift.add_code(detail::chain_code(d, p, p + 1, PauliLetter::Y), half_t);
  }
  drift.add_code(detail::chain_code(d, 1, d, PauliLetter::X), half_t);
  drift.add_code(detail::chain_code(d, 1, d, PauliLetter::Y), half_t);
  sys.drift = drift;
  for (int p = 1; p <= d; ++p) sys.controls.push_back(PauliExpr::single(d, p, PauliLetter::Z));
  return sys;
}

/// Spinful ring on 2d qubits: qubits 1..d carry the up modes, d+1..2d the
/// down modes. The hopping drift acts identically on both sectors; the
/// on-site controls couple matching sites as Z (x) Z.
inline ControlSystem hubbard_spinful(int d, const Rational& t = Rational(1)) {
  if (d < 2) throw InvalidInput("hubbard_spinful: need d >= 2");
  const int n = 2 * d;
  ControlSystem sys;
  sys.n = n;
  sys.label = "spinful ring, d=" + std::to_string(d);

  PauliExpr drift(n);
  const Rational half_t = t / 2;
  for (int offset : {0, d}) {
    for (int p = 1; p < d; ++p) {
      std::uint64_t x = PauliTerm::single(n, offset + p, PauliLetter::X).code() |
                        PauliTerm::single(n, offset + p + 1, PauliLetter::X).code();
      std::uint64_t y = PauliTerm::single(n, offset + p, PauliLetter::Y).code() |
                        PauliTerm::single(n, offset + p + 1, PauliLetter::Y).code();
      drift.add_code(x, half_t);
      drift.add_code(y, half_t);
    }
    // periodic closure within the sector
    std::uint64_t x = PauliTerm::single(n, offset + 1, PauliLetter::X).code() |
                      PauliTerm::single(n, offset + d, PauliLetter::X).code();
    std::uint64_t y = PauliTerm::single(n, offset + 1, PauliLetter::Y).code() |
                      PauliTerm::single(n, offset + d, PauliLetter::Y).code();
    for (int m = 2; m < d; ++m) {
      x |= PauliTerm::single(n, offset + m, PauliLetter::Z).code();
      y |= PauliTerm::single(n, offset + m, PauliLetter::Z).code();
    }
    drift.add_code(x, half_t);
    drift.add_code(y, half_t);
  }
  sys.drift = drift;

  for (int p = 1; p <= d; ++p) {
    std::uint64_t code = PauliTerm::single(n, p, PauliLetter::Z).code() |
                         PauliTerm::single(n, d + p, PauliLetter::Z).code();
    PauliExpr c(n);
    c.add_code(code, Rational(1));
    sys.controls.push_back(c);
  }
  return sys;
}

}  // namespace liectrl::fermion
