#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liectrl/errors.hpp"
#include "liectrl/rational.hpp"

namespace liectrl {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char letter_char(PauliLetter l) { return "IXYZ"[static_cast<int>(l)]; }

/// Power of i modulo 4; the phases picked up by products of Pauli matrices.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : e_((exponent % 4 + 4) % 4) {}

  constexpr int exponent() const { return e_; }
  constexpr Phase operator*(Phase o) const { return Phase(e_ + o.e_); }
  constexpr bool operator==(const Phase&) const = default;

  /// True for +1 or -1.
  constexpr bool is_real() const { return e_ % 2 == 0; }
  /// +1 or -1 for real phases, throws otherwise.
  int sign() const {
    if (!is_real()) throw Error("Phase::sign on imaginary phase");
    return e_ == 0 ? 1 : -1;
  }
  std::complex<double> value() const {
    static const std::complex<double> tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return tab[e_];
  }

 private:
  int e_ = 0;
};

/// A single n-qubit Pauli string. Stored as a base-4 code with qubit 1 in the
/// most significant digit, so iterating codes in increasing order matches the
/// lexicographic order of the letter strings.
class PauliTerm {
 public:
  PauliTerm(int n, std::uint64_t code) : n_(n), code_(code) {
    if (n < 1 || n > 31) throw InvalidInput("qubit count must be in [1,31]");
    if (n < 31 && code >= (std::uint64_t{1} << (2 * n)))
      throw InvalidInput("Pauli code out of range for " + std::to_string(n) + " qubits");
  }

  static PauliTerm identity(int n) { return PauliTerm(n, 0); }

  /// Single non-identity letter at 1-based qubit position `site`.
  static PauliTerm single(int n, int site, PauliLetter l) {
    if (site < 1 || site > n) throw InvalidInput("site out of range");
    std::uint64_t code = static_cast<std::uint64_t>(l) << (2 * (n - site));
    return PauliTerm(n, code);
  }

  static std::optional<PauliTerm> from_string(std::string_view s) {
    if (s.empty() || s.size() > 31) return std::nullopt;
    std::uint64_t code = 0;
    for (char c : s) {
      int v;
      switch (c) {
        case 'I': v = 0; break;
        case 'X': v = 1; break;
        case 'Y': v = 2; break;
        case 'Z': v = 3; break;
        default: return std::nullopt;
      }
      code = (code << 2) | static_cast<std::uint64_t>(v);
    }
    return PauliTerm(static_cast<int>(s.size()), code);
  }

  int qubits() const { return n_; }
  std::uint64_t code() const { return code_; }

  /// Letter at 1-based position (leftmost qubit = 1).
  PauliLetter letter(int site) const {
    return static_cast<PauliLetter>((code_ >> (2 * (n_ - site))) & 3);
  }

  /// Number of non-identity letters.
  int weight() const {
    int w = 0;
    for (std::uint64_t c = code_; c != 0; c >>= 2)
      if ((c & 3) != 0) ++w;
    return w;
  }

  bool is_identity() const { return code_ == 0; }

  std::string str() const {
    std::string s(static_cast<std::size_t>(n_), 'I');
    for (int k = 1; k <= n_; ++k) s[static_cast<std::size_t>(k - 1)] = letter_char(letter(k));
    return s;
  }

  auto operator<=>(const PauliTerm&) const = default;

 private:
  int n_;
  std::uint64_t code_;
};

namespace detail {
// product_phase[a][b] = exponent of i in (sigma_a sigma_b), product_letter the
// resulting letter; letters coded I=0, X=1, Y=2, Z=3.
inline constexpr int product_phase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};
inline constexpr int product_letter[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
}  // namespace detail

/// Letterwise product: (matrix of a)(matrix of b) = phase * (matrix of c).
inline std::pair<Phase, PauliTerm> multiply_terms(const PauliTerm& a, const PauliTerm& b) {
  if (a.qubits() != b.qubits()) throw InvalidInput("multiply_terms: qubit count mismatch");
  int e = 0;
  std::uint64_t code = 0;
  for (int k = 0; k < a.qubits(); ++k) {
    const int la = static_cast<int>((a.code() >> (2 * k)) & 3);
    const int lb = static_cast<int>((b.code() >> (2 * k)) & 3);
    e += detail::product_phase[la][lb];
    code |= static_cast<std::uint64_t>(detail::product_letter[la][lb]) << (2 * k);
  }
  return {Phase(e), PauliTerm(a.qubits(), code)};
}

inline bool commute(const PauliTerm& a, const PauliTerm& b) {
  if (a.qubits() != b.qubits()) throw InvalidInput("commute: qubit count mismatch");
  int anti = 0;
  for (int k = 0; k < a.qubits(); ++k) {
    const int la = static_cast<int>((a.code() >> (2 * k)) & 3);
    const int lb = static_cast<int>((b.code() >> (2 * k)) & 3);
    if (la != 0 && lb != 0 && la != lb) ++anti;
  }
  return anti % 2 == 0;
}

/// Real-linear combination of Pauli strings with exact rational coefficients.
/// An expression with coefficients c_k stands for the skew-Hermitian operator
/// sum_k c_k * (-i/2) * P_k, so brackets of basis elements close over the
/// rationals. Coefficients of value zero are never stored; terms are kept in
/// canonical (base-4 lexicographic) order.
class PauliExpr {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  explicit PauliExpr(int n) : n_(n) {
    if (n < 1 || n > 31) throw InvalidInput("qubit count must be in [1,31]");
  }

  static PauliExpr term(const PauliTerm& t, const Rational& c = Rational(1)) {
    PauliExpr e(t.qubits());
    e.add(t, c);
    return e;
  }

  static PauliExpr single(int n, int site, PauliLetter l, const Rational& c = Rational(1)) {
    return term(PauliTerm::single(n, site, l), c);
  }

  int qubits() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const PauliTerm& t) const {
    auto it = terms_.find(t.code());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const PauliTerm& t, const Rational& c) {
    if (t.qubits() != n_) throw InvalidInput("PauliExpr::add: qubit count mismatch");
    add_code(t.code(), c);
  }

  void add_code(std::uint64_t code, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(code, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PauliExpr& operator+=(const PauliExpr& o) {
    check_same(o);
    for (const auto& [code, c] : o.terms_) add_code(code, c);
    return *this;
  }
  PauliExpr& operator-=(const PauliExpr& o) {
    check_same(o);
    for (const auto& [code, c] : o.terms_) add_code(code, -c);
    return *this;
  }
  PauliExpr& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [code, c] : terms_) c *= s;
    return *this;
  }

  friend PauliExpr operator+(PauliExpr a, const PauliExpr& b) { return a += b; }
  friend PauliExpr operator-(PauliExpr a, const PauliExpr& b) { return a -= b; }
  friend PauliExpr operator*(PauliExpr a, const Rational& s) { return a *= s; }
  friend PauliExpr operator*(const Rational& s, PauliExpr a) { return a *= s; }
  friend PauliExpr operator-(PauliExpr a) { return a *= Rational(-1); }

  bool operator==(const PauliExpr& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// Adds s * o, fused to avoid a temporary.
  void add_scaled(const PauliExpr& o, const Rational& s) {
    check_same(o);
    if (s == 0) return;
    for (const auto& [code, c] : o.terms_) add_code(code, c * s);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [code, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += to_string(c) + "*" + PauliTerm(n_, code).str();
    }
    return out;
  }

 private:
  void check_same(const PauliExpr& o) const {
    if (o.n_ != n_) throw InvalidInput("PauliExpr: qubit count mismatch");
  }

  int n_;
  TermMap terms_;
};

/// Exact commutator in the -i/2 normalization: for anticommuting strings P, Q
/// with PQ = i^e R the bracket of basis elements is +/- another basis element,
/// so the result is again a rational combination.
inline PauliExpr bracket(const PauliExpr& a, const PauliExpr& b) {
  if (a.qubits() != b.qubits()) throw InvalidInput("bracket: qubit count mismatch");
  PauliExpr out(a.qubits());
  const int n = a.qubits();
  for (const auto& [ca, va] : a.terms()) {
    const PauliTerm ta(n, ca);
    for (const auto& [cb, vb] : b.terms()) {
      const PauliTerm tb(n, cb);
      auto [phase, prod] = multiply_terms(ta, tb);
      if (phase.is_real()) continue;  // commuting pair, no contribution
      const int sign = phase.exponent() == 1 ? 1 : -1;
      out.add_code(prod.code(), va * vb * sign);
    }
  }
  return out;
}

/// Maximum number of non-identity letters over the terms of e.
inline int order(const PauliExpr& e) {
  if (e.is_zero()) throw InvalidInput("order of the zero expression is undefined");
  int m = 0;
  for (const auto& [code, c] : e.terms()) m = std::max(m, PauliTerm(e.qubits(), code).weight());
  return m;
}

/// Dense materialization of sum c_k (-i/2) P_k; skew-Hermitian and traceless
/// whenever the identity string is absent.
inline Eigen::MatrixXcd to_matrix(const PauliExpr& e, int dense_qubit_cap = 12) {
  const int n = e.qubits();
  if (n > dense_qubit_cap)
    throw CapExceeded("to_matrix: " + std::to_string(n) + " qubits exceeds dense cap " +
                      std::to_string(dense_qubit_cap));
  const std::int64_t N = std::int64_t{1} << n;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  const std::complex<double> half_i(0.0, -0.5);
  for (const auto& [code, c] : e.terms()) {
    const std::complex<double> scale = half_i * to_double(c);
    // Each Pauli string is a signed permutation in the computational basis
    // (qubit 1 = most significant bit).
    for (std::int64_t col = 0; col < N; ++col) {
      std::int64_t row = 0;
      std::complex<double> phase(1.0, 0.0);
      for (int k = 0; k < n; ++k) {
        const int letter = static_cast<int>((code >> (2 * k)) & 3);
        const int bit = static_cast<int>((col >> k) & 1);
        int outbit = bit;
        switch (letter) {
          case 0: break;
          case 1: outbit = 1 - bit; break;
          case 2:
            outbit = 1 - bit;
            phase *= bit == 0 ? std::complex<double>(0, 1) : std::complex<double>(0, -1);
            break;
          case 3:
            if (bit == 1) phase = -phase;
            break;
        }
        row |= static_cast<std::int64_t>(outbit) << k;
      }
      M(row, col) += scale * phase;
    }
  }
  return M;
}

}  // namespace liectrl
