#pragma once

#include <string>
#include <vector>

#include "liectrl/pauli.hpp"

namespace liectrl {

/// A bilinear control system: non-switchable drift plus steerable controls,
/// all in the exact Pauli representation. The drift may be zero when at least
/// one control is present.
struct ControlSystem {
  int n = 1;
  PauliExpr drift{1};
  std::vector<PauliExpr> controls;
  std::string label;

  void validate() const {
    if (n < 1) throw InvalidInput("system: qubit count must be positive");
    if (drift.qubits() != n) throw InvalidInput("system: drift qubit count mismatch");
    for (const auto& c : controls)
      if (c.qubits() != n) throw InvalidInput("system: control qubit count mismatch");
    if (drift.is_zero() && controls.empty())
      throw InvalidInput("system: needs a nonzero drift or at least one control");
  }

  /// Drift (when nonzero) followed by the controls; the generating set of the
  /// dynamic algebra.
  std::vector<PauliExpr> generators() const {
    std::vector<PauliExpr> gens;
    if (!drift.is_zero()) gens.push_back(drift);
    for (const auto& c : controls) gens.push_back(c);
    return gens;
  }
};

}  // namespace liectrl
