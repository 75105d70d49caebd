#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "liectrl/matrep.hpp"
#include "liectrl/pauli.hpp"

namespace liectrl {

/// Ordered basis of a dynamic Lie algebra in Pauli coordinates. Elements are
/// kept in echelon form: each has a pivot (its smallest term code, coefficient
/// one) distinct from all other pivots, which makes linear membership tests a
/// single sparse reduction.
struct AlgebraBasis {
  int n = 0;
  std::vector<PauliExpr> elements;
  std::map<std::uint64_t, std::size_t> pivots;  // pivot code -> element index
  int generator_count = 0;
  int sweeps = 0;
  bool closed = false;
  bool cap_reached = false;

  std::size_t dim() const { return elements.size(); }

  /// Eliminates every pivot coordinate from v; the result is zero iff v lies
  /// in the span. Elimination with a pivot row only introduces coordinates
  /// above the pivot, so one increasing scan terminates.
  PauliExpr reduce(PauliExpr v) const {
    std::uint64_t at = 0;
    while (true) {
      const auto& tm = v.terms();
      auto it = tm.lower_bound(at);
      if (it == tm.end()) break;
      const std::uint64_t code = it->first;
      auto p = pivots.find(code);
      if (p == pivots.end()) {
        at = code + 1;
        continue;
      }
      v.add_scaled(elements[p->second], -it->second);
      at = code + 1;
    }
    return v;
  }

  /// Reduces v and appends it when independent; returns true if added. The
  /// new pivot is also eliminated from every stored row, keeping the basis in
  /// fully reduced row-echelon form; rows stay as sparse as the span allows,
  /// which keeps later brackets and reductions cheap.
  bool insert(const PauliExpr& v) {
    PauliExpr r = reduce(v);
    if (r.is_zero()) return false;
    const auto& [pivot_code, pivot_coeff] = *r.terms().begin();
    if (pivot_coeff != 1) r *= Rational(1) / pivot_coeff;
    for (auto& row : elements) {
      const Rational c = row.coeff(PauliTerm(n, pivot_code));
      if (c != 0) row.add_scaled(r, -c);
    }
    pivots.emplace(pivot_code, elements.size());
    elements.push_back(std::move(r));
    return true;
  }
};

inline bool span_contains(const AlgebraBasis& basis, const PauliExpr& e) {
  if (e.qubits() != basis.n) throw InvalidInput("span_contains: qubit count mismatch");
  return basis.reduce(e).is_zero();
}

namespace detail {
inline bool expr_less(const PauliExpr& a, const PauliExpr& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.terms().size() < b.terms().size();
}
}  // namespace detail

/// Lie closure by breadth-first bracket sweeps. Each sweep brackets the
/// frontier (elements found in the previous sweep) against everything found
/// so far, sorts the candidates canonically and row-reduces them into the
/// basis, so identical inputs always produce identical bases. Terminates when
/// a sweep adds nothing or when dim_cap is reached; the default cap is the
/// ambient dimension 4^n - 1, where reaching it certifies closure as well.
inline AlgebraBasis lie_closure(std::span<const PauliExpr> generators,
                                std::optional<std::size_t> dim_cap = std::nullopt) {
  if (generators.empty()) throw InvalidInput("lie_closure: no generators");
  const int n = generators.front().qubits();
  for (const auto& g : generators)
    if (g.qubits() != n) throw InvalidInput("lie_closure: inconsistent qubit counts");

  const std::size_t ambient = (std::size_t{1} << (2 * n)) - 1;
  const std::size_t cap = dim_cap ? std::min(*dim_cap, ambient) : ambient;

  AlgebraBasis basis;
  basis.n = n;
  basis.generator_count = static_cast<int>(generators.size());

  std::vector<std::size_t> frontier;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (basis.insert(g)) frontier.push_back(basis.dim() - 1);
    if (basis.dim() >= cap) break;
  }

  while (!frontier.empty() && basis.dim() < cap) {
    ++basis.sweeps;
    std::vector<PauliExpr> candidates;
    for (std::size_t i : frontier) {
      for (std::size_t j = 0; j < i; ++j) {
        PauliExpr c = bracket(basis.elements[i], basis.elements[j]);
        if (c.is_zero()) continue;
        // scale-normalize so duplicate directions collapse in the dedupe
        const Rational& lead = c.terms().begin()->second;
        if (lead != 1) c *= Rational(1) / lead;
        candidates.push_back(std::move(c));
      }
    }
    std::sort(candidates.begin(), candidates.end(), detail::expr_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    frontier.clear();
    for (const auto& c : candidates) {
      if (basis.insert(c)) frontier.push_back(basis.dim() - 1);
      if (basis.dim() >= cap) break;
    }
  }

  if (basis.dim() >= ambient) {
    basis.closed = true;  // full ambient algebra, brackets cannot leave it
  } else if (frontier.empty()) {
    basis.closed = true;
  } else {
    basis.closed = false;
    basis.cap_reached = true;
  }
  return basis;
}

inline AlgebraBasis lie_closure(const std::vector<PauliExpr>& generators,
                                std::optional<std::size_t> dim_cap = std::nullopt) {
  return lie_closure(std::span<const PauliExpr>(generators), dim_cap);
}

/// Floating-point fallback for systems without a qubit tensor basis. Keeps an
/// orthonormal coordinate basis of the vectorized span; a bracket is accepted
/// when its residual after projection exceeds tol relative to its norm.
struct DenseAlgebraBasis {
  std::vector<Eigen::MatrixXcd> elements;
  bool closed = false;
  bool cap_reached = false;
  int sweeps = 0;
  std::size_t dim() const { return elements.size(); }
};

inline DenseAlgebraBasis lie_closure_dense(std::span<const Eigen::MatrixXcd> generators,
                                           std::optional<std::size_t> dim_cap = std::nullopt,
                                           double tol = 1e-9) {
  if (generators.empty()) throw InvalidInput("lie_closure_dense: no generators");
  const Eigen::Index N = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != N || g.cols() != N)
      throw InvalidInput("lie_closure_dense: inconsistent matrix sizes");

  const std::size_t ambient = static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
  const std::size_t cap = dim_cap ? std::min(*dim_cap, ambient) : ambient;

  DenseAlgebraBasis basis;
  std::vector<Eigen::VectorXcd> ortho;  // orthonormal vectorized span

  auto try_insert = [&](const Eigen::MatrixXcd& m) -> bool {
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
    const double norm0 = v.norm();
    if (norm0 == 0.0) return false;
    for (const auto& b : ortho) v -= b.dot(v) * b;
    // second pass for numerical stability
    for (const auto& b : ortho) v -= b.dot(v) * b;
    if (v.norm() <= tol * norm0) return false;
    ortho.push_back(v.normalized());
    basis.elements.push_back(m);
    return true;
  };

  std::vector<std::size_t> frontier;
  for (const auto& g : generators) {
    if (try_insert(g)) frontier.push_back(basis.dim() - 1);
    if (basis.dim() >= cap) break;
  }

  while (!frontier.empty() && basis.dim() < cap) {
    ++basis.sweeps;
    std::vector<std::size_t> next;
    const std::size_t before = basis.dim();
    for (std::size_t fi = 0; fi < frontier.size() && basis.dim() < cap; ++fi) {
      const std::size_t i = frontier[fi];
      for (std::size_t j = 0; j < i && basis.dim() < cap; ++j) {
        Eigen::MatrixXcd c =
            basis.elements[i] * basis.elements[j] - basis.elements[j] * basis.elements[i];
        if (try_insert(c)) next.push_back(basis.dim() - 1);
      }
    }
    (void)before;
    frontier = std::move(next);
  }

  basis.closed = frontier.empty();
  basis.cap_reached = !basis.closed;
  return basis;
}

}  // namespace liectrl
