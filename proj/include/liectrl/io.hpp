#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "liectrl/decide.hpp"
#include "liectrl/system.hpp"

namespace liectrl::io {

using nlohmann::json;

/// Serialization of one expression: array of {"coeff": "p/q", "pauli": "XZI"}.
inline json expr_to_json(const PauliExpr& e) {
  json terms = json::array();
  for (const auto& [code, c] : e.terms()) {
    terms.push_back({{"coeff", to_string(c)}, {"pauli", PauliTerm(e.qubits(), code).str()}});
  }
  return terms;
}

inline PauliExpr expr_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of terms");
  PauliExpr e(n);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& term = j[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!term.is_object() || !term.contains("coeff") || !term.contains("pauli"))
      throw InvalidInput(at + ": term needs \"coeff\" and \"pauli\" fields");
    if (!term["coeff"].is_string() || !term["pauli"].is_string())
      throw InvalidInput(at + ": \"coeff\" and \"pauli\" must be strings");
    const auto coeff = parse_rational(term["coeff"].get<std::string>());
    if (!coeff) throw InvalidInput(at + ": cannot parse coefficient \"" +
                                   term["coeff"].get<std::string>() + "\"");
    const auto pauli = PauliTerm::from_string(term["pauli"].get<std::string>());
    if (!pauli)
      throw InvalidInput(at + ": invalid Pauli string \"" + term["pauli"].get<std::string>() +
                         "\"");
    if (pauli->qubits() != n)
      throw InvalidInput(at + ": Pauli string length " + std::to_string(pauli->qubits()) +
                         " does not match n = " + std::to_string(n));
    e.add(*pauli, *coeff);
  }
  return e;
}

inline json system_to_json(const ControlSystem& sys) {
  json j;
  j["n"] = sys.n;
  j["drift"] = expr_to_json(sys.drift);
  json controls = json::array();
  for (const auto& c : sys.controls) controls.push_back(expr_to_json(c));
  j["controls"] = controls;
  j["label"] = sys.label;
  return j;
}

inline ControlSystem system_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("system: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InvalidInput("system: integer field \"n\" is required");
  ControlSystem sys;
  sys.n = j["n"].get<int>();
  if (sys.n < 1 || sys.n > 31) throw InvalidInput("system: n out of range");
  sys.drift = j.contains("drift") ? expr_from_json(j["drift"], sys.n, "drift")
                                  : PauliExpr(sys.n);
  if (j.contains("controls")) {
    if (!j["controls"].is_array())
      throw InvalidInput("system: \"controls\" must be an array of term arrays");
    for (std::size_t k = 0; k < j["controls"].size(); ++k)
      sys.controls.push_back(
          expr_from_json(j["controls"][k], sys.n, "controls[" + std::to_string(k) + "]"));
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InvalidInput("system: \"label\" must be a string");
    sys.label = j["label"].get<std::string>();
  }
  sys.validate();
  return sys;
}

inline ControlSystem parse_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open system file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw InvalidInput("system file " + path + ": " + err.what());
  }
  return system_from_json(j);
}

inline void write_system(const ControlSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write system file: " + path);
  out << system_to_json(sys).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Reports.

inline json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

inline json verdict_to_json(const Verdict& v) {
  json j;
  j["n"] = v.n;
  j["N"] = v.N;
  j["centraliser_dim"] = v.centraliser_dim;
  j["reducible"] = v.reducible;
  if (v.connectivity_known) j["connected"] = v.connected;
  j["form"] = to_string(v.form.kind);
  if (v.form.S) {
    j["form_sign"] = v.form.s_sbar_sign;
    j["form_residual"] = v.form.residual;
  }
  if (v.tensor_square_dim >= 0) j["tensor_square_commutant_dim"] = v.tensor_square_dim;
  if (v.closure_dim >= 0) {
    j["closure_dim"] = v.closure_dim;
    j["closure_closed"] = v.closure_closed;
  }
  if (v.identified) {
    json cands = json::array();
    for (const auto& c : v.identified->candidates) {
      cands.push_back({{"algebra", c.algebra.name()},
                       {"weights", c.weight_string()},
                       {"type", std::string(1, catalog::to_char(c.malcev))}});
    }
    j["identified"] = {{"candidates", cands},
                       {"confidence", v.identified->confidence == Confidence::ProvedByClosure
                                          ? "proved-by-closure"
                                          : "consistent-by-dim-and-type"}};
  }
  j["fully_controllable"] = v.fully_controllable;
  j["failed_conditions"] = v.failed_conditions;
  j["notes"] = v.notes;
  return j;
}

inline std::string render_report(const Verdict& v, const std::string& format = "text") {
  if (format == "json") return verdict_to_json(v).dump(2);
  if (format != "text") throw InvalidInput("render_report: unknown format " + format);
  std::ostringstream os;
  os << "system: " << v.n << " qubits (N = " << v.N << ")\n";
  os << "centraliser dimension: " << v.centraliser_dim
     << (v.reducible ? " (reducible representation)" : " (irreducible)") << "\n";
  if (v.connectivity_known)
    os << "connected: " << (v.connected ? "yes" : "no") << "\n";
  else
    os << "connected: unknown (no coupling graph, closure not computed)\n";
  os << "invariant bilinear form: " << to_string(v.form.kind);
  if (v.form.S) os << " (S conj(S) sign " << (v.form.s_sbar_sign > 0 ? "+1" : "-1") << ")";
  os << "\n";
  if (v.tensor_square_dim >= 0)
    os << "tensor-square commutant dimension: " << v.tensor_square_dim << "\n";
  if (v.closure_dim >= 0) os << "closure dimension: " << v.closure_dim << "\n";
  if (v.identified) {
    os << "identified: ";
    for (std::size_t i = 0; i < v.identified->candidates.size(); ++i) {
      if (i) os << " | ";
      os << v.identified->candidates[i].algebra.name() << " "
         << v.identified->candidates[i].weight_string();
    }
    os << " ["
       << (v.identified->confidence == Confidence::ProvedByClosure
               ? "proved-by-closure"
               : "consistent-by-dim-and-type")
       << "]\n";
  }
  os << "fully controllable: " << (v.fully_controllable ? "yes" : "no") << "\n";
  if (!v.failed_conditions.empty()) {
    os << "failed conditions:";
    for (int c : v.failed_conditions) os << " (" << c << ")";
    os << "\n";
  }
  const std::string note = pure_state_note(v);
  if (!note.empty()) os << "note: " << note << "\n";
  for (const auto& n : v.notes)
    if (n != note) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace liectrl::io
