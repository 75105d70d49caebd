#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liectrl/errors.hpp"
#include "liectrl/rational.hpp"

namespace liectrl::catalog {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

using Weight = std::vector<int>;

struct AlgebraId {
  Family family;
  int rank;

  auto operator<=>(const AlgebraId&) const = default;

  /// Lie dimension of the algebra itself (not of a representation).
  long lie_dim() const {
    const long l = rank;
    switch (family) {
      case Family::A: return l * (l + 2);
      case Family::B: return l * (2 * l + 1);
      case Family::C: return l * (2 * l + 1);
      case Family::D: return l * (2 * l - 1);
      case Family::G2: return 14;
      case Family::F4: return 52;
      case Family::E6: return 78;
      case Family::E7: return 133;
      case Family::E8: return 248;
    }
    return 0;
  }

  std::string name() const {
    switch (family) {
      case Family::A: return "su(" + std::to_string(rank + 1) + ")";
      case Family::B: return "so(" + std::to_string(2 * rank + 1) + ")";
      case Family::C: return "sp(" + std::to_string(rank) + ")";
      case Family::D: return "so(" + std::to_string(2 * rank) + ")";
      case Family::G2: return "g2";
      case Family::F4: return "f4";
      case Family::E6: return "e6";
      case Family::E7: return "e7";
      case Family::E8: return "e8";
    }
    return "?";
  }

  std::string family_letter() const {
    switch (family) {
      case Family::A: return "A";
      case Family::B: return "B";
      case Family::C: return "C";
      case Family::D: return "D";
      case Family::G2: return "G2";
      case Family::F4: return "F4";
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::E8: return "E8";
    }
    return "?";
  }
};

inline AlgebraId su(int n) { return {Family::A, n - 1}; }
inline AlgebraId so(int n) {
  return n % 2 == 1 ? AlgebraId{Family::B, (n - 1) / 2} : AlgebraId{Family::D, n / 2};
}
inline AlgebraId sp(int l) { return {Family::C, l}; }

namespace detail {

/// Cartan matrix in the convention cm(i,j) = <alpha_i, alpha_j^vee>, nodes in
/// the standard plate ordering (chains 1-2-...-rank; the branch node of the
/// E-series is node 2 attached to node 4; short roots sit at the high end of
/// B and F4, at node 1 of C and G2's partner).
inline std::vector<std::vector<int>> cartan_matrix(const AlgebraId& id) {
  const int l = id.rank;
  std::vector<std::vector<int>> cm(static_cast<std::size_t>(l),
                                   std::vector<int>(static_cast<std::size_t>(l), 0));
  auto chain = [&](int upto) {
    for (int i = 0; i < upto; ++i) cm[i][i] = 2;
    for (int i = 0; i + 1 < upto; ++i) {
      cm[i][i + 1] = -1;
      cm[i + 1][i] = -1;
    }
  };
  switch (id.family) {
    case Family::A:
      if (l < 1) throw InvalidInput("A-series rank must be >= 1");
      chain(l);
      break;
    case Family::B:
      if (l < 2) throw InvalidInput("B-series rank must be >= 2");
      chain(l);
      cm[l - 2][l - 1] = -2;  // alpha_{l} short
      cm[l - 1][l - 2] = -1;
      break;
    case Family::C:
      if (l < 2) throw InvalidInput("C-series rank must be >= 2");
      chain(l);
      cm[l - 2][l - 1] = -1;  // alpha_{l} long
      cm[l - 1][l - 2] = -2;
      break;
    case Family::D:
      if (l < 3) throw InvalidInput("D-series rank must be >= 3");
      chain(l - 1);
      cm[l - 1][l - 1] = 2;
      cm[l - 3][l - 1] = -1;
      cm[l - 1][l - 3] = -1;
      break;
    case Family::G2:
      cm = {{2, -1}, {-3, 2}};
      break;
    case Family::F4:
      chain(4);
      cm[1][2] = -2;  // alpha_3, alpha_4 short
      cm[2][1] = -1;
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const int n = id.family == Family::E6 ? 6 : (id.family == Family::E7 ? 7 : 8);
      cm.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i) cm[i][i] = 2;
      auto bond = [&](int a, int b) {
        cm[a - 1][b - 1] = -1;
        cm[b - 1][a - 1] = -1;
      };
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(5, 6);
      if (n >= 7) bond(6, 7);
      if (n >= 8) bond(7, 8);
      bond(2, 4);
      break;
    }
  }
  return cm;
}

/// Positive roots in simple-root coordinates, generated from the Cartan
/// matrix with the standard root-string closure: beta + alpha_j is a root iff
/// p - <beta, alpha_j^vee> > 0, where p counts how far the string extends
/// downwards.
inline std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& cm) {
  const int l = static_cast<int>(cm.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<int> simple(static_cast<std::size_t>(l), 0);
    simple[static_cast<std::size_t>(i)] = 1;
    known.insert(simple);
    frontier.push_back(std::move(simple));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int j = 0; j < l; ++j) {
        int pairing = 0;
        for (int i = 0; i < l; ++i) pairing += beta[static_cast<std::size_t>(i)] * cm[i][j];
        // p = depth of the string below beta
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[static_cast<std::size_t>(j)] -= 1;
          if (down[static_cast<std::size_t>(j)] < 0 || !known.contains(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        std::vector<int> up = beta;
        up[static_cast<std::size_t>(j)] += 1;
        if (known.insert(up).second) next.push_back(std::move(up));
      }
    }
    frontier = std::move(next);
  }
  return {known.begin(), known.end()};
}

/// Transposing the Cartan matrix swaps root lengths, so the positive roots of
/// the transposed system are exactly the positive coroots of the original in
/// simple-coroot coordinates.
inline std::vector<std::vector<int>> positive_coroots(const AlgebraId& id) {
  auto cm = cartan_matrix(id);
  const std::size_t l = cm.size();
  std::vector<std::vector<int>> cmt(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) cmt[i][j] = cm[j][i];
  return positive_roots(cmt);
}

}  // namespace detail

/// Dimension by the general weight formula: the product over positive coroots
/// of <lambda + rho, gamma> / <rho, gamma>, evaluated factor by factor in
/// exact big-integer rationals.
inline BigInt weyl_dimension(const AlgebraId& id, const Weight& weight) {
  if (static_cast<int>(weight.size()) != id.rank)
    throw InvalidInput("weyl_dimension: weight length must equal the rank");
  for (int x : weight)
    if (x < 0) throw InvalidInput("weyl_dimension: weight entries must be non-negative");
  static std::map<AlgebraId, std::vector<std::vector<int>>> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, detail::positive_coroots(id)).first;

  Rational dim(1);
  for (const auto& coroot : it->second) {
    long num = 0, den = 0;
    for (std::size_t i = 0; i < coroot.size(); ++i) {
      num += static_cast<long>(weight[i] + 1) * coroot[i];
      den += coroot[i];
    }
    dim *= Rational(num, den);
  }
  if (denominator(dim) != 1)
    throw NumericalInconsistency("weyl_dimension: non-integer product");
  return numerator(dim);
}

namespace detail {

// Explicit factorized dimension products for the classical families and the
// two small exceptional algebras; evaluated factor by factor.

inline BigInt dim_a(const Weight& x) {
  const int l = static_cast<int>(x.size());
  Rational dim(1);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l + 1; ++j) {
      long s = 0;
      for (int k = i; k <= j - 1; ++k) s += x[static_cast<std::size_t>(k - 1)];
      dim *= Rational(j - i + s, j - i);
    }
  if (denominator(dim) != 1) throw NumericalInconsistency("dim_a: non-integer");
  return numerator(dim);
}

inline BigInt dim_b(const Weight& x) {
  const int l = static_cast<int>(x.size());
  auto seg = [&](int a, int b) {  // x_a + ... + x_b, 1-based, empty when a > b
    long s = 0;
    for (int k = a; k <= b; ++k) s += x[static_cast<std::size_t>(k - 1)];
    return s;
  };
  Rational dim(1);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      const long s = seg(i, j - 1) + 2 * seg(j, l - 1) + x[static_cast<std::size_t>(l - 1)];
      dim *= Rational(2 * l + 1 - i - j + s, 2 * l + 1 - i - j);
    }
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      const long s = seg(i, j - 1);
      dim *= Rational(j - i + s, j - i);
    }
  for (int i = 1; i <= l; ++i) {
    const long s = 2 * seg(i, l - 1) + x[static_cast<std::size_t>(l - 1)];
    dim *= Rational(2 * l + 1 - 2 * i + s, 2 * l + 1 - 2 * i);
  }
  if (denominator(dim) != 1) throw NumericalInconsistency("dim_b: non-integer");
  return numerator(dim);
}

inline BigInt dim_c(const Weight& x) {
  const int l = static_cast<int>(x.size());
  auto seg = [&](int a, int b) {
    long s = 0;
    for (int k = a; k <= b; ++k) s += x[static_cast<std::size_t>(k - 1)];
    return s;
  };
  Rational dim(1);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) dim *= Rational(j - i + seg(i, j - 1), j - i);
  for (int i = 1; i <= l; ++i) dim *= Rational(l + 1 - i + seg(i, l), l + 1 - i);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      const long s = seg(i, j - 1) + 2 * seg(j, l);
      dim *= Rational(2 * l + 2 - i - j + s, 2 * l + 2 - i - j);
    }
  if (denominator(dim) != 1) throw NumericalInconsistency("dim_c: non-integer");
  return numerator(dim);
}

inline BigInt dim_d(const Weight& x) {
  const int l = static_cast<int>(x.size());
  auto seg = [&](int a, int b) {
    long s = 0;
    for (int k = a; k <= b; ++k) s += x[static_cast<std::size_t>(k - 1)];
    return s;
  };
  Rational dim(1);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) dim *= Rational(j - i + seg(i, j - 1), j - i);
  for (int i = 1; i <= l - 1; ++i) {
    const long s = seg(i, l - 2) + x[static_cast<std::size_t>(l - 1)];
    dim *= Rational(l - i + s, l - i);
  }
  for (int i = 1; i <= l - 1; ++i)
    for (int j = i + 1; j <= l - 1; ++j) {
      const long s = seg(i, j - 1) + 2 * seg(j, l - 2) + x[static_cast<std::size_t>(l - 2)] +
                     x[static_cast<std::size_t>(l - 1)];
      dim *= Rational(2 * l - i - j + s, 2 * l - i - j);
    }
  if (denominator(dim) != 1) throw NumericalInconsistency("dim_d: non-integer");
  return numerator(dim);
}

inline BigInt dim_g2(const Weight& x) {
  const long a = x[0], b = x[1];
  Rational dim(1);
  dim *= Rational(1 + b);
  dim *= Rational(1 + a);
  dim *= Rational(2 + a + b, 2);
  dim *= Rational(3 + a + 2 * b, 3);
  dim *= Rational(4 + a + 3 * b, 4);
  dim *= Rational(5 + 2 * a + 3 * b, 5);
  if (denominator(dim) != 1) throw NumericalInconsistency("dim_g2: non-integer");
  return numerator(dim);
}

inline BigInt dim_f4(const Weight& x) {
  const long x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  struct Factor {
    long num;
    long den;
  };
  const Factor factors[] = {
      {1 + x4, 1},
      {1 + x3, 1},
      {1 + x2, 1},
      {1 + x1, 1},
      {2 + x3 + x4, 2},
      {2 + x2 + x3, 2},
      {2 + x1 + x2, 2},
      {3 + x2 + x3 + x4, 3},
      {3 + 2 * x2 + x3, 3},
      {3 + x1 + x2 + x3, 3},
      {4 + 2 * x2 + x3 + x4, 4},
      {4 + x1 + x2 + x3 + x4, 4},
      {4 + x1 + 2 * x2 + x3, 4},
      {5 + 2 * x2 + 2 * x3 + x4, 5},
      {5 + x1 + 2 * x2 + x3 + x4, 5},
      {5 + 2 * x1 + 2 * x2 + x3, 5},
      {6 + x1 + 2 * x2 + 2 * x3 + x4, 6},
      {6 + 2 * x1 + 2 * x2 + x3 + x4, 6},
      {7 + x1 + 3 * x2 + 2 * x3 + x4, 7},
      {7 + 2 * x1 + 2 * x2 + 2 * x3 + x4, 7},
      {8 + 2 * x1 + 3 * x2 + 2 * x3 + x4, 8},
      {9 + 2 * x1 + 4 * x2 + 2 * x3 + x4, 9},
      {10 + 2 * x1 + 4 * x2 + 3 * x3 + x4, 10},
      {11 + 2 * x1 + 4 * x2 + 3 * x3 + 2 * x4, 11},
  };
  Rational dim(1);
  for (const auto& f : factors) dim *= Rational(f.num, f.den);
  if (denominator(dim) != 1) throw NumericalInconsistency("dim_f4: non-integer");
  return numerator(dim);
}

}  // namespace detail

/// Exact dimension of the irreducible representation with the given highest
/// weight. Classical families and g2/f4 use the explicit factorized product
/// formulas; the large exceptional algebras fall back to the general formula.
inline BigInt irrep_dimension(const AlgebraId& id, const Weight& weight) {
  if (static_cast<int>(weight.size()) != id.rank)
    throw InvalidInput("irrep_dimension: weight length must equal the rank");
  for (int x : weight)
    if (x < 0) throw InvalidInput("irrep_dimension: weight entries must be non-negative");
  switch (id.family) {
    case Family::A: return detail::dim_a(weight);
    case Family::B: return detail::dim_b(weight);
    case Family::C: return detail::dim_c(weight);
    case Family::D: return detail::dim_d(weight);
    case Family::G2: return detail::dim_g2(weight);
    case Family::F4: return detail::dim_f4(weight);
    case Family::E6:
    case Family::E7:
    case Family::E8: return weyl_dimension(id, weight);
  }
  throw InvalidInput("irrep_dimension: unknown family");
}

enum class MalcevType : char { Symplectic = 's', Orthogonal = 'o', Unitary = 'u' };

inline char to_char(MalcevType t) { return static_cast<char>(t); }

/// Case analysis for the representation type: symplectic and orthogonal
/// correspond to an invariant skew-symmetric resp. symmetric bilinear form;
/// unitary means neither exists. The cases are mutually exclusive for
/// irreducible representations.
inline MalcevType malcev_type(const AlgebraId& id, const Weight& x) {
  const int l = id.rank;
  if (static_cast<int>(x.size()) != l)
    throw InvalidInput("malcev_type: weight length must equal the rank");
  auto odd = [](long v) { return v % 2 != 0; };
  switch (id.family) {
    case Family::A: {
      bool symmetric = true;
      for (int i = 0; i < l / 2; ++i)
        if (x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(l - 1 - i)])
          symmetric = false;
      if (!symmetric) return MalcevType::Unitary;
      if (l % 4 == 1 && odd(x[static_cast<std::size_t>((l - 1) / 2)]))
        return MalcevType::Symplectic;
      return MalcevType::Orthogonal;
    }
    case Family::B: {
      if (l % 4 != 1 && l % 4 != 2) return MalcevType::Orthogonal;
      return odd(x[static_cast<std::size_t>(l - 1)]) ? MalcevType::Symplectic
                                                     : MalcevType::Orthogonal;
    }
    case Family::C: {
      long sum = 0;
      for (int j = 1; j <= l; j += 2) sum += x[static_cast<std::size_t>(j - 1)];
      return odd(sum) ? MalcevType::Symplectic : MalcevType::Orthogonal;
    }
    case Family::D: {
      const long tail = x[static_cast<std::size_t>(l - 2)] + x[static_cast<std::size_t>(l - 1)];
      if (l % 4 == 2) return odd(tail) ? MalcevType::Symplectic : MalcevType::Orthogonal;
      if (l % 4 == 0) return MalcevType::Orthogonal;
      // l odd
      return x[static_cast<std::size_t>(l - 2)] == x[static_cast<std::size_t>(l - 1)]
                 ? MalcevType::Orthogonal
                 : MalcevType::Unitary;
    }
    case Family::G2:
    case Family::F4:
    case Family::E8: return MalcevType::Orthogonal;
    case Family::E6:
      return (x[0] == x[5] && x[2] == x[4]) ? MalcevType::Orthogonal : MalcevType::Unitary;
    case Family::E7: return odd(x[1] + x[4] + x[6]) ? MalcevType::Symplectic
                                                    : MalcevType::Orthogonal;
  }
  throw InvalidInput("malcev_type: unknown family");
}

namespace detail {

/// Orbit of a weight under the diagram automorphism group, sorted in
/// descending lexicographic order so the paper's leading representative comes
/// first.
inline std::vector<Weight> outer_orbit(const AlgebraId& id, const Weight& x) {
  std::set<Weight, std::greater<Weight>> orbit{x};
  const int l = id.rank;
  switch (id.family) {
    case Family::A: {
      Weight rev(x.rbegin(), x.rend());
      orbit.insert(rev);
      break;
    }
    case Family::D: {
      if (l == 4) {
        // full triality: permute the three outer nodes 1, 3, 4
        int idx[3] = {0, 2, 3};
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        do {
          Weight w = x;
          for (int k = 0; k < 3; ++k) w[static_cast<std::size_t>(idx[k])] =
              x[static_cast<std::size_t>(idx[perm[k]])];
          orbit.insert(w);
        } while (std::next_permutation(perm, perm + 3));
      } else if (l >= 3) {
        Weight w = x;
        std::swap(w[static_cast<std::size_t>(l - 2)], w[static_cast<std::size_t>(l - 1)]);
        orbit.insert(w);
      }
      break;
    }
    case Family::E6: {
      Weight w{x[5], x[1], x[4], x[3], x[2], x[0]};
      orbit.insert(w);
      break;
    }
    default: break;
  }
  return {orbit.begin(), orbit.end()};
}

}  // namespace detail

/// One irreducible representation up to outer automorphism: the displayed
/// algebra label, the weight orbit in its coordinates, the dimension and the
/// type.
struct IrrepRecord {
  AlgebraId algebra;               // display label (after low-rank relabeling)
  std::vector<Weight> weights;     // outer orbit, descending lex
  long dim = 0;
  MalcevType malcev = MalcevType::Unitary;

  bool is_standard() const {
    // leading weight (1, 0, ..., 0) in the display coordinates
    if (weights.empty()) return false;
    const Weight& w = weights.front();
    if (w.empty() || w[0] != 1) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] != 0) return false;
    return true;
  }

  bool has_weight(const Weight& w) const {
    return std::find(weights.begin(), weights.end(), w) != weights.end();
  }

  std::string weight_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (k) os << ", ";
      os << "(";
      for (std::size_t i = 0; i < weights[k].size(); ++i) {
        if (i) os << ",";
        os << weights[k][i];
      }
      os << ")";
    }
    return os.str();
  }

  auto key() const { return std::tuple(dim, algebra.family, algebra.rank, weights); }
};

namespace detail {

/// The two low-rank coincidences whose label follows the representation type
/// in the tables: rank-two B relabels to sp(2) when symplectic, rank-three A
/// relabels to so(6) when orthogonal. Weights move to the coordinates of the
/// target diagram.
inline void relabel_record(IrrepRecord& rec) {
  if (rec.algebra == AlgebraId{Family::B, 2} && rec.malcev == MalcevType::Symplectic) {
    rec.algebra = {Family::C, 2};
    std::vector<Weight> mapped;
    for (const auto& w : rec.weights) mapped.push_back({w[1], w[0]});
    std::sort(mapped.begin(), mapped.end(), std::greater<>());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    rec.weights = std::move(mapped);
  } else if (rec.algebra == AlgebraId{Family::A, 3} && rec.malcev == MalcevType::Orthogonal) {
    rec.algebra = {Family::D, 3};
    std::vector<Weight> mapped;
    for (const auto& w : rec.weights) mapped.push_back({w[1], w[0], w[2]});
    std::sort(mapped.begin(), mapped.end(), std::greater<>());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    rec.weights = std::move(mapped);
  }
}

/// Depth-first weight search with pruning: dimensions grow strictly in every
/// weight entry, so a branch dies as soon as its dimension exceeds the bound.
inline void search_weights(const AlgebraId& id, long max_dim, std::set<Weight>& found) {
  std::set<Weight> visited;
  std::vector<Weight> stack;
  for (int i = 0; i < id.rank; ++i) {
    Weight w(static_cast<std::size_t>(id.rank), 0);
    w[static_cast<std::size_t>(i)] = 1;
    stack.push_back(std::move(w));
  }
  while (!stack.empty()) {
    Weight w = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(w).second) continue;
    const BigInt dim = irrep_dimension(id, w);
    if (dim > max_dim) continue;
    found.insert(w);
    for (int i = 0; i < id.rank; ++i) {
      Weight up = w;
      up[static_cast<std::size_t>(i)] += 1;
      if (!visited.contains(up)) stack.push_back(std::move(up));
    }
  }
}

inline Weight standard_weight(int rank) {
  Weight w(static_cast<std::size_t>(rank), 0);
  w[0] = 1;
  return w;
}

}  // namespace detail

/// Complete duplicate-free list of the nontrivial irreducible representations
/// of all compact simple Lie algebras with dimension at most max_dim, one
/// record per outer orbit. Rank ranges beyond the second-lowest-dimension
/// bound contribute only their standard representation, which shrinks the
/// search space to a square root of the bound.
inline std::vector<IrrepRecord> enumerate_irreps(long max_dim) {
  if (max_dim < 2) throw InvalidInput("enumerate_irreps: max_dim must be at least 2");

  struct Task {
    AlgebraId id;
    bool standard_only;
  };
  std::vector<Task> tasks;

  for (int l = 1; l + 1 <= max_dim; ++l) {
    const bool full = l < 3 || static_cast<long>(l) * (l + 1) / 2 <= max_dim;
    tasks.push_back({AlgebraId{Family::A, l}, !full});
  }
  for (int l = 2;; ++l) {
    const long lowest = l == 2 ? 4 : 2L * l + 1;
    if (lowest > max_dim) break;
    const bool full = l < 7 || static_cast<long>(l) * (2 * l + 1) <= max_dim;
    tasks.push_back({AlgebraId{Family::B, l}, !full});
  }
  for (int l = 3; 2L * l <= max_dim; ++l) {
    const bool full = l < 4 || 2L * l * l - l - 1 <= max_dim;
    tasks.push_back({AlgebraId{Family::C, l}, !full});
  }
  for (int l = 4;; ++l) {
    const long lowest = l == 4 ? 8 : 2L * l;
    if (lowest > max_dim) break;
    const bool full = l < 8 || 2L * l * l - l <= max_dim;
    tasks.push_back({AlgebraId{Family::D, l}, !full});
  }
  if (max_dim >= 7) tasks.push_back({AlgebraId{Family::G2, 2}, false});
  if (max_dim >= 26) tasks.push_back({AlgebraId{Family::F4, 4}, false});
  if (max_dim >= 27) tasks.push_back({AlgebraId{Family::E6, 6}, false});
  if (max_dim >= 56) tasks.push_back({AlgebraId{Family::E7, 7}, false});
  if (max_dim >= 248) tasks.push_back({AlgebraId{Family::E8, 8}, false});

  std::vector<IrrepRecord> records;
  for (const auto& task : tasks) {
    std::set<Weight> weights;
    if (task.standard_only) {
      weights.insert(detail::standard_weight(task.id.rank));
    } else {
      detail::search_weights(task.id, max_dim, weights);
    }
    // group into outer orbits
    std::set<Weight> seen;
    for (const auto& w : weights) {
      if (seen.contains(w)) continue;
      auto orbit = detail::outer_orbit(task.id, w);
      for (const auto& o : orbit) seen.insert(o);
      IrrepRecord rec;
      rec.algebra = task.id;
      rec.weights = orbit;
      rec.dim = static_cast<long>(irrep_dimension(task.id, w));
      rec.malcev = malcev_type(task.id, w);
      detail::relabel_record(rec);
      records.push_back(std::move(rec));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const IrrepRecord& a, const IrrepRecord& b) { return a.key() < b.key(); });
  return records;
}

// ---------------------------------------------------------------------------
// Inclusion lattice.

struct LatticeNode {
  IrrepRecord record;
  std::vector<std::size_t> parents;  // indices into Lattice::nodes
};

struct Lattice {
  long N = 0;
  std::vector<LatticeNode> nodes;
  std::optional<std::size_t> top;       // the full unitary algebra
  std::optional<std::size_t> sp_root;   // standard symplectic algebra, N even
  std::optional<std::size_t> so_root;   // standard orthogonal algebra, N >= 5

  std::optional<std::size_t> find(const AlgebraId& id, const Weight& w) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].record.algebra == id && nodes[i].record.has_weight(w)) return i;
    return std::nullopt;
  }
};

namespace detail {

struct ExceptionalParent {
  AlgebraId algebra;
  Weight weight;  // any orbit member of the parent record
};

inline Weight unit_weight(int rank, int index) {  // 1-based fundamental index
  Weight w(static_cast<std::size_t>(rank), 0);
  w[static_cast<std::size_t>(index - 1)] = 1;
  return w;
}

/// Table of irreducible simple subalgebras that are not maximal in the full
/// unitary, symplectic, or orthogonal algebra of their dimension; each entry
/// names the intermediate algebra the subalgebra is maximal in.
inline std::optional<ExceptionalParent> exceptional_parent(const IrrepRecord& rec) {
  const AlgebraId& id = rec.algebra;
  const int l = id.rank;

  if (id.family == Family::A) {
    if (l == 1 && rec.has_weight({6}))
      return ExceptionalParent{{Family::G2, 2}, {1, 0}};
    if (l >= 4) {
      Weight w(static_cast<std::size_t>(l), 0);
      w[0] = 1;
      w[2] = 1;
      if (rec.has_weight(w))
        return ExceptionalParent{{Family::A, l * (l + 1) / 2 - 1},
                                 unit_weight(l * (l + 1) / 2 - 1, 2)};
    }
    if (l >= 3) {
      Weight w(static_cast<std::size_t>(l), 0);
      w[0] = 2;
      w[1] = 1;
      if (rec.has_weight(w))
        return ExceptionalParent{{Family::A, l * (l + 3) / 2},
                                 unit_weight(l * (l + 3) / 2, 2)};
    }
    if (l == 5 && rec.has_weight({0, 1, 0, 1, 0}))
      return ExceptionalParent{{Family::C, 10}, unit_weight(10, 2)};
    return std::nullopt;
  }

  if (id.family == Family::B) {
    // so(4k+3) with weight (0,...,0,m) sits inside so(4k+4), except the
    // spin representation of so(7) which is maximal in so(8) directly
    if (l >= 3 && l % 2 == 1) {
      const int k = (l - 1) / 2;
      const int m = rec.weights.front().back();
      bool tail_only = m >= 1;
      for (std::size_t i = 0; i + 1 < rec.weights.front().size(); ++i)
        if (rec.weights.front()[i] != 0) tail_only = false;
      if (tail_only && !(k == 1 && m == 1)) {
        Weight pw(static_cast<std::size_t>(2 * k + 2), 0);
        pw[static_cast<std::size_t>(2 * k)] = m;
        return ExceptionalParent{{Family::D, 2 * k + 2}, pw};
      }
    }
    if (l == 4 && rec.has_weight({1, 0, 0, 1}))
      return ExceptionalParent{{Family::D, 8}, unit_weight(8, 7)};
    return std::nullopt;
  }

  if (id.family == Family::C) {
    if (l == 3 && rec.has_weight({0, 2, 0}))
      return ExceptionalParent{{Family::C, 7}, unit_weight(7, 2)};
    if (l == 3 && rec.has_weight({0, 2, 1}))
      return ExceptionalParent{{Family::C, 7}, unit_weight(7, 3)};
    return std::nullopt;
  }

  if (id.family == Family::D) {
    if (l == 5 && rec.has_weight({0, 1, 0, 1, 0}))
      return ExceptionalParent{{Family::A, 15}, unit_weight(15, 3)};
    if (l == 6 && rec.has_weight({0, 0, 0, 1, 0, 0}))
      return ExceptionalParent{{Family::C, 16}, unit_weight(16, 2)};
    if (l == 6 && rec.has_weight({0, 0, 1, 0, 1, 0}))
      return ExceptionalParent{{Family::C, 16}, unit_weight(16, 3)};
    return std::nullopt;
  }

  if (id.family == Family::E6) {
    if (rec.has_weight({0, 0, 1, 0, 0, 0}))
      return ExceptionalParent{{Family::A, 26}, unit_weight(26, 2)};
    if (rec.has_weight({0, 1, 1, 0, 0, 0}))
      return ExceptionalParent{{Family::A, 26}, unit_weight(26, 4)};
    return std::nullopt;
  }

  if (id.family == Family::E7) {
    if (rec.has_weight({0, 0, 0, 0, 0, 1, 0}))
      return ExceptionalParent{{Family::C, 28}, unit_weight(28, 2)};
    if (rec.has_weight({0, 0, 0, 0, 1, 0, 0}))
      return ExceptionalParent{{Family::C, 28}, unit_weight(28, 3)};
    if (rec.has_weight({0, 0, 0, 1, 0, 0, 0}))
      return ExceptionalParent{{Family::C, 28}, unit_weight(28, 4)};
    if (rec.has_weight({0, 1, 1, 0, 0, 0, 0}))
      return ExceptionalParent{{Family::C, 28}, unit_weight(28, 5)};
    return std::nullopt;
  }

  if (id.family == Family::G2) {
    const Weight& w = rec.weights.front();
    if (w[0] >= 2 && w[1] == 0)
      return ExceptionalParent{{Family::B, 3}, {w[0], 0, 0}};
    return std::nullopt;
  }

  return std::nullopt;
}

/// Dimension of the so(4k+3) tail representation as given with the table; the
/// general dimension formula must agree with it.
inline BigInt so4k3_tail_dimension(int k, int m) {
  Rational dim(1);
  auto binom = [](long n, long r) {
    Rational b(1);
    for (long i = 1; i <= r; ++i) b *= Rational(n - r + i, i);
    return b;
  };
  for (int s = 1; s <= 2 * k + 1; ++s)
    dim *= binom(m + 2 * s - 1, m) / binom(m + s - 1, m);
  if (denominator(dim) != 1) throw NumericalInconsistency("so4k3_tail_dimension");
  return numerator(dim);
}

}  // namespace detail

inline constexpr long kDefaultLatticeCap = 256;

/// Inclusion lattice of the irreducible simple subalgebras of the full
/// unitary algebra of size N: the standard symplectic (N even) and orthogonal
/// algebras attach under the top node, every other record attaches under the
/// root of its type unless the exception table names an intermediate parent.
inline Lattice build_lattice(long N, long cap = kDefaultLatticeCap) {
  if (N < 2) throw InvalidInput("build_lattice: N must be at least 2");
  if (N > cap)
    throw CapExceeded("build_lattice: N = " + std::to_string(N) + " exceeds cap " +
                      std::to_string(cap));

  Lattice lat;
  lat.N = N;
  for (auto& rec : enumerate_irreps(N)) {
    if (rec.dim != N) continue;
    lat.nodes.push_back({std::move(rec), {}});
  }

  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& rec = lat.nodes[i].record;
    if (rec.algebra == AlgebraId{Family::A, static_cast<int>(N - 1)}) lat.top = i;
    if (rec.is_standard()) {
      if (N % 2 == 0 && rec.algebra == AlgebraId{Family::C, static_cast<int>(N / 2)})
        lat.sp_root = i;
      if (rec.algebra == AlgebraId{Family::B, static_cast<int>((N - 1) / 2)} ||
          rec.algebra == AlgebraId{Family::D, static_cast<int>(N / 2)})
        lat.so_root = i;
    }
  }
  if (!lat.top) throw NumericalInconsistency("build_lattice: full unitary node missing");

  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    if (i == *lat.top) continue;
    auto& node = lat.nodes[i];
    if ((lat.sp_root && i == *lat.sp_root) || (lat.so_root && i == *lat.so_root)) {
      node.parents.push_back(*lat.top);
      continue;
    }
    if (auto exc = detail::exceptional_parent(node.record)) {
      auto parent = lat.find(exc->algebra, exc->weight);
      if (!parent)
        throw NumericalInconsistency("build_lattice: exceptional parent " +
                                     exc->algebra.name() + " missing at dim " +
                                     std::to_string(N));
      node.parents.push_back(*parent);
      continue;
    }
    switch (node.record.malcev) {
      case MalcevType::Unitary: node.parents.push_back(*lat.top); break;
      case MalcevType::Symplectic:
        if (!lat.sp_root)
          throw NumericalInconsistency("build_lattice: symplectic record without root");
        node.parents.push_back(*lat.sp_root);
        break;
      case MalcevType::Orthogonal:
        node.parents.push_back(lat.so_root ? *lat.so_root : *lat.top);
        break;
    }
  }
  return lat;
}

/// Whether the ambient algebra of an n-qubit system admits a proper unitary
/// irreducible simple subalgebra.
inline bool unitary_subalgebras_exist(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 16)
    throw InvalidInput("unitary_subalgebras_exist: qubit count out of range");
  const long N = 1L << n_qubits;
  const AlgebraId full{Family::A, static_cast<int>(N - 1)};
  for (const auto& rec : enumerate_irreps(N)) {
    if (rec.dim != N) continue;
    if (rec.malcev == MalcevType::Unitary && !(rec.algebra == full)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Exports.

inline std::string lattice_to_dot(const Lattice& lat) {
  std::ostringstream os;
  os << "digraph inclusions {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& rec = lat.nodes[i].record;
    os << "  n" << i << " [label=\"" << rec.algebra.name() << " " << rec.weight_string()
       << " [" << to_char(rec.malcev) << "]\"];\n";
  }
  for (std::size_t i = 0; i < lat.nodes.size(); ++i)
    for (std::size_t p : lat.nodes[i].parents) os << "  n" << i << " -> n" << p << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string records_to_csv(const std::vector<IrrepRecord>& records,
                                  long lattice_cap = kDefaultLatticeCap) {
  std::ostringstream os;
  os << "dim,family,rank,weight,type,parents\r\n";
  std::map<long, Lattice> lattices;
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  for (const auto& rec : records) {
    std::string parents;
    if (rec.dim >= 2 && rec.dim <= lattice_cap) {
      auto it = lattices.find(rec.dim);
      if (it == lattices.end()) it = lattices.emplace(rec.dim, build_lattice(rec.dim)).first;
      if (auto idx = it->second.find(rec.algebra, rec.weights.front())) {
        for (std::size_t k = 0; k < it->second.nodes[*idx].parents.size(); ++k) {
          if (k) parents += "; ";
          parents += it->second.nodes[it->second.nodes[*idx].parents[k]].record.algebra.name();
        }
      }
    }
    os << rec.dim << "," << rec.algebra.family_letter() << "," << rec.algebra.rank << ","
       << quote(rec.weight_string()) << "," << to_char(rec.malcev) << "," << quote(parents)
       << "\r\n";
  }
  return os.str();
}

}  // namespace liectrl::catalog
