#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liectrl/closure.hpp"
#include "liectrl/system.hpp"

namespace liectrl {

/// Grouping of the qubits into subsystems: block j spans qubit_blocks[j]
/// consecutive qubits and has local dimension 2^qubit_blocks[j]. The default
/// structure keeps every qubit separate, which is also the unique common
/// refinement for qubit systems.
struct TensorStructure {
  std::vector<int> qubit_blocks;

  static TensorStructure qubits(int n) {
    TensorStructure s;
    s.qubit_blocks.assign(static_cast<std::size_t>(n), 1);
    return s;
  }

  int total_qubits() const {
    return std::accumulate(qubit_blocks.begin(), qubit_blocks.end(), 0);
  }
  int num_blocks() const { return static_cast<int>(qubit_blocks.size()); }

  std::vector<long> dims() const {
    std::vector<long> d;
    for (int b : qubit_blocks) d.push_back(1L << b);
    return d;
  }

  void validate(int n) const {
    for (int b : qubit_blocks)
      if (b < 1) throw InvalidInput("tensor structure: block sizes must be positive");
    if (total_qubits() != n)
      throw InvalidInput("tensor structure: blocks must cover all qubits");
  }

  /// Block index (0-based) of a 1-based qubit position.
  int block_of(int qubit) const {
    int acc = 0;
    for (int b = 0; b < num_blocks(); ++b) {
      acc += qubit_blocks[static_cast<std::size_t>(b)];
      if (qubit <= acc) return b;
    }
    throw InvalidInput("tensor structure: qubit out of range");
  }
};

namespace detail {

/// Set of blocks on which a Pauli string acts non-trivially.
inline std::uint32_t block_support(const PauliTerm& t, const TensorStructure& ts) {
  std::uint32_t mask = 0;
  for (int q = 1; q <= t.qubits(); ++q)
    if (t.letter(q) != PauliLetter::I) mask |= 1u << ts.block_of(q);
  return mask;
}

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

}  // namespace detail

struct CouplingEdge {
  int a = 0, b = 0;  // block indices, a < b
  int multiplicity = 0;
  std::vector<std::uint64_t> term_codes;
};

struct CouplingGraph {
  int vertices = 0;
  std::vector<CouplingEdge> edges;

  bool has_edge(int a, int b) const {
    for (const auto& e : edges)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
    return false;
  }
};

/// Order of an expression relative to a tensor structure: the maximum number
/// of blocks a term touches.
inline int order(const PauliExpr& e, const TensorStructure& ts) {
  if (e.is_zero()) throw InvalidInput("order of the zero expression is undefined");
  int m = 0;
  for (const auto& [code, c] : e.terms())
    m = std::max(m, detail::popcount(detail::block_support(PauliTerm(e.qubits(), code), ts)));
  return m;
}

/// Coupling graph of the drift: one vertex per subsystem, one edge per coupled
/// pair. Defined only for drifts of order at most two and local controls.
inline CouplingGraph coupling_graph(const ControlSystem& system, const TensorStructure& ts) {
  system.validate();
  ts.validate(system.n);
  for (const auto& c : system.controls)
    if (!c.is_zero() && order(c, ts) > 1)
      throw InvalidInput("coupling graph: control Hamiltonians must be local");
  if (!system.drift.is_zero() && order(system.drift, ts) > 2)
    throw InvalidInput("coupling graph: drift order exceeds two, no coupling graph exists");

  CouplingGraph g;
  g.vertices = ts.num_blocks();
  std::map<std::pair<int, int>, CouplingEdge> edges;
  for (const auto& [code, c] : system.drift.terms()) {
    const std::uint32_t mask = detail::block_support(PauliTerm(system.n, code), ts);
    if (detail::popcount(mask) != 2) continue;
    const int a = __builtin_ctz(mask);
    const int b = 31 - __builtin_clz(mask);
    auto& e = edges[{a, b}];
    e.a = a;
    e.b = b;
    ++e.multiplicity;
    e.term_codes.push_back(code);
  }
  for (auto& [key, e] : edges) g.edges.push_back(std::move(e));
  return g;
}

inline CouplingGraph coupling_graph(const ControlSystem& system) {
  return coupling_graph(system, TensorStructure::qubits(system.n));
}

inline bool is_connected_graph(const CouplingGraph& g) {
  if (g.vertices <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertices));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.vertices), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.vertices;
}

struct ConnectivityResult {
  bool connected = false;
  bool partial = false;  // bipartition budget exceeded; only adjacent cuts tested
  operator bool() const { return connected; }
};

inline constexpr int kBipartitionBudget = 1 << 12;

/// Weak connectivity: for every proper two-block partition of the declared
/// subsystems, some closure element must have a term straddling the cut. An
/// expression lies inside the split Kronecker sum exactly when every one of
/// its terms is supported on one side, so the straddling-term test on the
/// echelon basis decides membership exactly.
inline ConnectivityResult is_weakly_connected(const ControlSystem& system,
                                              const AlgebraBasis& closure_basis,
                                              const TensorStructure& ts) {
  system.validate();
  ts.validate(system.n);
  if (closure_basis.n != system.n)
    throw InvalidInput("is_weakly_connected: closure basis qubit count mismatch");

  const int m = ts.num_blocks();
  ConnectivityResult out;
  out.connected = true;
  if (m <= 1) return out;

  // straddle masks of all basis terms
  std::vector<std::uint32_t> masks;
  for (const auto& e : closure_basis.elements)
    for (const auto& [code, c] : e.terms())
      masks.push_back(detail::block_support(PauliTerm(system.n, code), ts));

  const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
  const long partitions = (1L << (m - 1)) - 1;
  if (partitions > kBipartitionBudget) {
    out.partial = true;
    // adjacent-transposition cuts only
    for (int cut = 1; cut < m; ++cut) {
      const std::uint32_t side = (1u << cut) - 1;
      bool straddled = false;
      for (std::uint32_t msk : masks)
        if ((msk & side) != 0 && (msk & ~side & full) != 0) {
          straddled = true;
          break;
        }
      if (!straddled) {
        out.connected = false;
        return out;
      }
    }
    return out;
  }

  for (std::uint32_t side = 1; side <= static_cast<std::uint32_t>(partitions); ++side) {
    bool straddled = false;
    for (std::uint32_t msk : masks)
      if ((msk & side) != 0 && (msk & ~side & full) != 0) {
        straddled = true;
        break;
      }
    if (!straddled) {
      out.connected = false;
      return out;
    }
  }
  return out;
}

/// Connectivity proper: weak connectivity with respect to the finest tensor
/// structure (one block per qubit), which is the common refinement of every
/// structure of a qubit system.
inline ConnectivityResult is_connected_general(const ControlSystem& system,
                                               const AlgebraBasis& closure_basis) {
  return is_weakly_connected(system, closure_basis, TensorStructure::qubits(system.n));
}

/// Direct connectivity: every pair of subsystems must be joined by a closure
/// element supported only on that pair and genuinely coupling it.
inline bool is_directly_connected(const ControlSystem& system,
                                  const AlgebraBasis& closure_basis,
                                  const TensorStructure& ts) {
  system.validate();
  ts.validate(system.n);
  const int m = ts.num_blocks();
  if (m <= 1) return true;

  // for each element: union of term supports, and whether some term couples a pair
  std::vector<std::uint32_t> unions;
  std::vector<std::vector<std::uint32_t>> term_masks;
  for (const auto& e : closure_basis.elements) {
    std::uint32_t u = 0;
    std::vector<std::uint32_t> tm;
    for (const auto& [code, c] : e.terms()) {
      const std::uint32_t msk = detail::block_support(PauliTerm(system.n, code), ts);
      u |= msk;
      tm.push_back(msk);
    }
    unions.push_back(u);
    term_masks.push_back(std::move(tm));
  }

  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const std::uint32_t pair = (1u << a) | (1u << b);
      bool found = false;
      for (std::size_t i = 0; i < unions.size() && !found; ++i) {
        if ((unions[i] & ~pair) != 0) continue;  // support leaks outside the pair
        for (std::uint32_t msk : term_masks[i])
          if (msk == pair) {
            found = true;
            break;
          }
      }
      if (!found) return false;
    }
  }
  return true;
}

inline bool is_directly_connected(const ControlSystem& system,
                                  const AlgebraBasis& closure_basis) {
  return is_directly_connected(system, closure_basis, TensorStructure::qubits(system.n));
}

inline std::string to_dot(const CouplingGraph& g) {
  std::ostringstream os;
  os << "graph coupling {\n";
  for (int v = 0; v < g.vertices; ++v) os << "  q" << (v + 1) << ";\n";
  for (const auto& e : g.edges)
    os << "  q" << (e.a + 1) << " -- q" << (e.b + 1) << " [label=\"" << e.multiplicity
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace liectrl
