#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liectrl/bilinear_form.hpp"
#include "liectrl/catalog.hpp"
#include "liectrl/closure.hpp"
#include "liectrl/graph.hpp"
#include "liectrl/symmetry.hpp"
#include "liectrl/system.hpp"

namespace liectrl {

enum class ModelFamily {
  XXOneEnd,        // exchange chain, one locally controllable end qubit
  XXTwoEnds,       // exchange chain, both end qubits controllable
  XXSecondSite,    // exchange chain, single control on the second qubit
  XXFirstTwoSites, // exchange chain, first two qubits controllable
  IsingAntisym,    // opposite-sign couplings, paired controls + middle qubit
  IsingCollective, // opposite-sign couplings, collective controls only
  ExampleCounter1, // four-qubit exchange chain, ends controllable
  ExampleCounter2, // three-qubit exchange chain, first qubit controllable
  ExampleEx1,      // two uncoupled fully controllable qubits
  AppendixZZZ      // three-body chain drift with full local control
};

struct ModelSpec {
  ModelFamily family;
  int size = 0;  // chain length n, or k for the opposite-sign coupling models
};

namespace detail {

inline PauliExpr exchange_chain_drift(int n) {
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

inline void add_local_xy(ControlSystem& sys, int site) {
  sys.controls.push_back(PauliExpr::single(sys.n, site, PauliLetter::X));
  sys.controls.push_back(PauliExpr::single(sys.n, site, PauliLetter::Y));
}

inline void add_local_xyz(ControlSystem& sys, int site) {
  sys.controls.push_back(PauliExpr::single(sys.n, site, PauliLetter::X));
  sys.controls.push_back(PauliExpr::single(sys.n, site, PauliLetter::Y));
  sys.controls.push_back(PauliExpr::single(sys.n, site, PauliLetter::Z));
}

inline PauliExpr opposite_sign_coupling(int k) {
  const int n = 2 * k + 1;
  PauliExpr drift(n);
  for (int j = 1; j <= 2 * k; ++j)
    drift.add_code(PauliTerm::single(n, j, PauliLetter::Z).code() |
                       PauliTerm::single(n, j + 1, PauliLetter::Z).code(),
                   Rational(j <= k ? 1 : -1));
  return drift;
}

}  // namespace detail

inline ControlSystem make_model(const ModelSpec& spec) {
  ControlSystem sys;
  switch (spec.family) {
    case ModelFamily::XXOneEnd: {
      if (spec.size < 2) throw InvalidInput("model: chain length must be at least 2");
      sys.n = spec.size;
      sys.drift = detail::exchange_chain_drift(sys.n);
      detail::add_local_xy(sys, 1);
      sys.label = "xx-one-end n=" + std::to_string(sys.n);
      break;
    }
    case ModelFamily::XXTwoEnds: {
      if (spec.size < 2) throw InvalidInput("model: chain length must be at least 2");
      sys.n = spec.size;
      sys.drift = detail::exchange_chain_drift(sys.n);
      detail::add_local_xy(sys, 1);
      detail::add_local_xy(sys, sys.n);
      sys.label = "xx-two-ends n=" + std::to_string(sys.n);
      break;
    }
    case ModelFamily::XXSecondSite: {
      if (spec.size < 2) throw InvalidInput("model: chain length must be at least 2");
      sys.n = spec.size;
      sys.drift = detail::exchange_chain_drift(sys.n);
      detail::add_local_xy(sys, 2);
      sys.label = "xx-second-site n=" + std::to_string(sys.n);
      break;
    }
    case ModelFamily::XXFirstTwoSites: {
      if (spec.size < 2) throw InvalidInput("model: chain length must be at least 2");
      sys.n = spec.size;
      sys.drift = detail::exchange_chain_drift(sys.n);
      detail::add_local_xy(sys, 1);
      detail::add_local_xy(sys, 2);
      sys.label = "xx-first-two-sites n=" + std::to_string(sys.n);
      break;
    }
    case ModelFamily::IsingAntisym: {
      const int k = spec.size;
      if (k < 1) throw InvalidInput("model: k must be at least 1");
      sys.n = 2 * k + 1;
      sys.drift = detail::opposite_sign_coupling(k);
      for (int j = 1; j <= k; ++j) {
        sys.controls.push_back(PauliExpr::single(sys.n, j, PauliLetter::X) +
                               PauliExpr::single(sys.n, sys.n + 1 - j, PauliLetter::X));
        sys.controls.push_back(PauliExpr::single(sys.n, j, PauliLetter::Y) +
                               PauliExpr::single(sys.n, sys.n + 1 - j, PauliLetter::Y));
      }
      detail::add_local_xy(sys, k + 1);
      sys.label = "ising-antisym k=" + std::to_string(k);
      break;
    }
    case ModelFamily::IsingCollective: {
      const int k = spec.size;
      if (k < 1) throw InvalidInput("model: k must be at least 1");
      sys.n = 2 * k + 1;
      sys.drift = detail::opposite_sign_coupling(k);
      PauliExpr fx(sys.n), fy(sys.n);
      for (int j = 1; j <= sys.n; ++j) {
        fx += PauliExpr::single(sys.n, j, PauliLetter::X);
        fy += PauliExpr::single(sys.n, j, PauliLetter::Y);
      }
      sys.controls = {fx, fy};
      sys.label = "ising-collective k=" + std::to_string(k);
      break;
    }
    case ModelFamily::ExampleCounter1: {
      sys.n = 4;
      sys.drift = detail::exchange_chain_drift(4);
      detail::add_local_xyz(sys, 1);
      detail::add_local_xyz(sys, 4);
      sys.label = "example-counter1";
      break;
    }
    case ModelFamily::ExampleCounter2: {
      sys.n = 3;
      sys.drift = detail::exchange_chain_drift(3);
      detail::add_local_xyz(sys, 1);
      sys.label = "example-counter2";
      break;
    }
    case ModelFamily::ExampleEx1: {
      sys.n = 2;
      sys.drift = PauliExpr(2);
      detail::add_local_xyz(sys, 1);
      detail::add_local_xyz(sys, 2);
      sys.label = "example-ex1";
      break;
    }
    case ModelFamily::AppendixZZZ: {
      if (spec.size < 3) throw InvalidInput("model: three-body chains need n >= 3");
      sys.n = spec.size;
      PauliExpr drift(sys.n);
      for (int j = 1; j + 2 <= sys.n; ++j)
        drift.add_code(PauliTerm::single(sys.n, j, PauliLetter::Z).code() |
                           PauliTerm::single(sys.n, j + 1, PauliLetter::Z).code() |
                           PauliTerm::single(sys.n, j + 2, PauliLetter::Z).code(),
                       Rational(1));
      sys.drift = drift;
      for (int j = 1; j <= sys.n; ++j) detail::add_local_xyz(sys, j);
      sys.label = "appendixA-zzz n=" + std::to_string(sys.n);
      break;
    }
  }
  sys.validate();
  return sys;
}

inline std::optional<ModelFamily> model_family_from_string(const std::string& name) {
  if (name == "xx-one-end") return ModelFamily::XXOneEnd;
  if (name == "xx-two-ends") return ModelFamily::XXTwoEnds;
  if (name == "xx-second-site") return ModelFamily::XXSecondSite;
  if (name == "xx-first-two-sites") return ModelFamily::XXFirstTwoSites;
  if (name == "ising-antisym") return ModelFamily::IsingAntisym;
  if (name == "ising-collective") return ModelFamily::IsingCollective;
  if (name == "example-counter1") return ModelFamily::ExampleCounter1;
  if (name == "example-counter2") return ModelFamily::ExampleCounter2;
  if (name == "example-ex1") return ModelFamily::ExampleEx1;
  if (name == "appendixA-zzz") return ModelFamily::AppendixZZZ;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Assessment.

enum class Confidence { ProvedByClosure, ConsistentByDimAndType };

struct Identification {
  std::vector<catalog::IrrepRecord> candidates;
  Confidence confidence = Confidence::ConsistentByDimAndType;
};

struct AssessOptions {
  std::optional<bool> run_closure;   // default: only up to the qubit limit
  bool run_tensor_square = false;
  int closure_qubit_limit = 6;
  int tensor_square_side_limit = kDenseSideCap;
  double tol = 1e-9;
  std::optional<std::size_t> closure_cap;
};

struct Verdict {
  int n = 0;
  long N = 0;
  int centraliser_dim = 0;
  bool connected = false;
  bool connectivity_known = false;
  FormClassification form;
  long tensor_square_dim = -1;        // -1 when not computed
  long closure_dim = -1;              // -1 when not computed
  bool closure_closed = false;
  std::optional<Identification> identified;
  bool fully_controllable = false;
  bool reducible = false;
  std::vector<std::string> notes;

  /// Indices (1-4) of the necessary conditions that failed.
  std::vector<int> failed_conditions;
};

/// Runs the cheap symmetry checks first, then the form search, then the
/// optional expensive certificates, and finally matches the results against
/// the subalgebra catalog.
inline Verdict assess(const ControlSystem& system, const AssessOptions& opts = {}) {
  system.validate();
  Verdict v;
  v.n = system.n;
  v.N = 1L << system.n;
  const auto gens = system.generators();

  // (1) symmetries
  auto sym = centraliser(gens);
  v.centraliser_dim = sym.centraliser_dim;
  v.reducible = !sym.irreducible;
  if (v.centraliser_dim > 0) v.failed_conditions.push_back(1);

  // closure when affordable; connectivity and identification lean on it
  const bool closure_wanted =
      opts.run_closure.value_or(system.n <= opts.closure_qubit_limit);
  std::optional<AlgebraBasis> closure_basis;
  if (closure_wanted) {
    closure_basis = lie_closure(gens, opts.closure_cap);
    v.closure_dim = static_cast<long>(closure_basis->dim());
    v.closure_closed = closure_basis->closed;
  }

  // (2) connectivity: via the coupling graph when one exists, otherwise via
  // the closure support test
  bool graph_ok = false;
  try {
    auto g = coupling_graph(system);
    v.connected = is_connected_graph(g);
    v.connectivity_known = true;
    graph_ok = true;
  } catch (const InvalidInput&) {
  }
  if (!graph_ok && closure_basis) {
    v.connected = is_connected_general(system, *closure_basis).connected;
    v.connectivity_known = true;
  }
  if (v.connectivity_known && !v.connected) v.failed_conditions.push_back(2);

  // (3) invariant bilinear form
  v.form = classify_form(gens, opts.tol, sym.irreducible);
  if (v.form.kind != FormKind::NoForm) v.failed_conditions.push_back(3);

  // optional tensor-square certificate
  if (opts.run_tensor_square) {
    if (v.N > opts.tensor_square_side_limit)
      throw CapExceeded("assess: tensor-square refused above N = " +
                        std::to_string(opts.tensor_square_side_limit));
    v.tensor_square_dim = tensor_square_commutant_dim(std::span<const PauliExpr>(gens),
                                                      opts.tol);
  }

  // identification against the catalog
  if (!v.reducible && v.N <= catalog::kDefaultLatticeCap) {
    std::vector<catalog::IrrepRecord> candidates;
    const auto want = v.form.kind == FormKind::Symplectic
                          ? catalog::MalcevType::Symplectic
                          : (v.form.kind == FormKind::Orthogonal
                                 ? catalog::MalcevType::Orthogonal
                                 : catalog::MalcevType::Unitary);
    for (const auto& rec : catalog::enumerate_irreps(v.N)) {
      if (rec.dim != v.N || rec.malcev != want) continue;
      if (v.closure_dim >= 0 && rec.algebra.lie_dim() != v.closure_dim) continue;
      candidates.push_back(rec);
    }
    if (!candidates.empty()) {
      Identification id;
      id.candidates = std::move(candidates);
      id.confidence = (v.closure_dim >= 0 && id.candidates.size() == 1)
                          ? Confidence::ProvedByClosure
                          : Confidence::ConsistentByDimAndType;
      v.identified = std::move(id);
    }
  }

  // (4) the unitary candidate list: fails only when every consistent
  // candidate is a proper unitary subalgebra, i.e. the algebra is certainly
  // on the list
  const bool proper_unitary_exists =
      system.n <= 8 ? catalog::unitary_subalgebras_exist(system.n) : true;
  if (v.form.kind == FormKind::NoForm && !v.reducible && v.identified) {
    const catalog::AlgebraId full{catalog::Family::A, static_cast<int>(v.N - 1)};
    bool all_proper = !v.identified->candidates.empty();
    for (const auto& cand : v.identified->candidates)
      if (cand.algebra == full) all_proper = false;
    if (all_proper) v.failed_conditions.push_back(4);
  }

  // final controllability verdict
  if (v.tensor_square_dim >= 0) {
    v.fully_controllable = v.tensor_square_dim == 2;
  } else if (v.closure_dim >= 0) {
    v.fully_controllable = v.closure_dim == v.N * v.N - 1;
  } else {
    // sufficient-condition path: no symmetry, connected, no form, and no
    // proper unitary candidates to hide behind
    v.fully_controllable = v.centraliser_dim == 0 && v.connectivity_known && v.connected &&
                           v.form.kind == FormKind::NoForm && !proper_unitary_exists;
  }

  if (v.form.kind == FormKind::Symplectic)
    v.notes.push_back(
        "symplectic representation: pure-state controllable, not fully operator "
        "controllable");
  if (v.reducible) v.notes.push_back("nonzero centraliser: representation is reducible");
  return v;
}

/// Annotation for symplectic verdicts; empty otherwise.
inline std::string pure_state_note(const Verdict& v) {
  if (v.form.kind == FormKind::Symplectic)
    return "pure-state controllable (symplectic algebra) but not operator controllable";
  if (v.fully_controllable) return "fully operator controllable";
  return "";
}

// ---------------------------------------------------------------------------
// Simulability.

enum class SimulationOrder { Equivalent, Simulates, SimulatedBy, Incomparable };

inline const char* to_string(SimulationOrder o) {
  switch (o) {
    case SimulationOrder::Equivalent: return "equivalent";
    case SimulationOrder::Simulates: return "simulates";
    case SimulationOrder::SimulatedBy: return "simulated-by";
    case SimulationOrder::Incomparable: return "incomparable";
  }
  return "?";
}

/// Span containment both ways within a common ambient algebra.
inline SimulationOrder check_simulates(const AlgebraBasis& a, const AlgebraBasis& b) {
  if (a.n != b.n) throw InvalidInput("check_simulates: qubit counts differ");
  bool a_contains_b = true;
  for (const auto& e : b.elements)
    if (!span_contains(a, e)) {
      a_contains_b = false;
      break;
    }
  bool b_contains_a = true;
  for (const auto& e : a.elements)
    if (!span_contains(b, e)) {
      b_contains_a = false;
      break;
    }
  if (a_contains_b && b_contains_a) return SimulationOrder::Equivalent;
  if (a_contains_b) return SimulationOrder::Simulates;
  if (b_contains_a) return SimulationOrder::SimulatedBy;
  return SimulationOrder::Incomparable;
}

}  // namespace liectrl
