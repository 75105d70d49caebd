#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liectrl/matrep.hpp"
#include "liectrl/pauli.hpp"

namespace liectrl {

enum class FormKind { Orthogonal, Symplectic, NoForm };

inline const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::Orthogonal: return "orthogonal";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::NoForm: return "none";
  }
  return "?";
}

/// Outcome of the joint invariant-bilinear-form search. When the generated
/// algebra acts irreducibly the solution space is at most one-dimensional and
/// the three kinds are mutually exclusive; the sign of S conj(S) separates
/// the orthogonal (+1) from the symplectic (-1) case, and an empty solution
/// space rules both out.
struct FormClassification {
  FormKind kind = FormKind::NoForm;
  std::optional<CMatrix> S;
  int s_sbar_sign = 0;
  double residual = 0.0;        // max ||S H + H^t S|| / ||H|| over generators
  bool scalar_normalized = false;
  long solution_dim = 0;
  std::vector<FormKind> kinds_found;  // non-exclusive mode (solution_dim > 1)
};

namespace detail {

/// Scales to unit spectral norm and rotates the first sizeable entry (in
/// column-stacked order) to phase zero.
inline CMatrix normalize_form(const CMatrix& s0) {
  Eigen::JacobiSVD<CMatrix> svd(s0);
  CMatrix s = s0 / svd.singularValues()(0);
  const double floor = 0.5 / std::sqrt(static_cast<double>(s.rows()));
  for (Eigen::Index j = 0; j < s.cols(); ++j)
    for (Eigen::Index i = 0; i < s.rows(); ++i)
      if (std::abs(s(i, j)) > floor) {
        const std::complex<double> ph = s(i, j) / std::abs(s(i, j));
        return s / ph;
      }
  return s;
}

/// Classifies a candidate solution; returns the sign of S conj(S) when the
/// product is close to a real scalar, zero otherwise.
inline int form_sign(const CMatrix& s, double* deviation = nullptr) {
  const Eigen::Index N = s.rows();
  const CMatrix prod = s * s.conjugate();
  const std::complex<double> mean = prod.trace() / static_cast<double>(N);
  const double dev = (prod - mean * CMatrix::Identity(N, N)).norm();
  if (deviation) *deviation = dev;
  if (dev > 1e-6 * static_cast<double>(N)) return 0;
  if (std::abs(mean - std::complex<double>(1, 0)) < 1e-6) return 1;
  if (std::abs(mean + std::complex<double>(1, 0)) < 1e-6) return -1;
  return 0;
}

}  // namespace detail

/// Joint solution of S H + H^t S = 0 over all generators, classified by the
/// sign of S conj(S). Generators enter as skew-Hermitian matrices; the
/// constraint is unchanged by the factor i between a Hamiltonian and its
/// skew-Hermitian counterpart.
inline FormClassification classify_form_dense(const std::vector<CMatrix>& generators,
                                              double tol = 1e-9,
                                              bool irreducible_certified = false) {
  if (generators.empty()) throw InvalidInput("classify_form: no generators");
  const Eigen::Index N = generators.front().rows();
  if (N > kDenseSideCap)
    throw CapExceeded("classify_form: N = " + std::to_string(N) + " exceeds dense cap");
  for (const auto& g : generators)
    if (g.rows() != N || g.cols() != N) throw InvalidInput("classify_form: size mismatch");

  CMatrix stacked(static_cast<Eigen::Index>(generators.size()) * N * N, N * N);
  for (std::size_t i = 0; i < generators.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * N * N, N * N) =
        form_constraint(generators[i]);
  const auto kernel = nullspace(stacked, tol);

  FormClassification out;
  out.solution_dim = kernel.dim();
  if (kernel.dim() == 0) {
    out.kind = FormKind::NoForm;
    return out;
  }

  auto residual_of = [&](const CMatrix& s) {
    double r = 0.0;
    for (const auto& g : generators)
      r = std::max(r, (s * g + g.transpose() * s).norm() / std::max(1.0, g.norm()));
    return r;
  };

  if (kernel.dim() == 1) {
    CMatrix s = detail::normalize_form(unvec(kernel.basis.col(0), N, N));
    const int sign = detail::form_sign(s);
    if (sign == 0) {
      if (irreducible_certified)
        throw NumericalInconsistency(
            "classify_form: irreducible certificate present but S conj(S) is not a scalar");
      out.kind = FormKind::NoForm;
      out.solution_dim = kernel.dim();
      return out;
    }
    out.kind = sign > 0 ? FormKind::Orthogonal : FormKind::Symplectic;
    out.s_sbar_sign = sign;
    out.S = s;
    out.scalar_normalized = true;
    out.residual = residual_of(s);
    return out;
  }

  if (irreducible_certified)
    throw NumericalInconsistency("classify_form: solution space of dim " +
                                 std::to_string(kernel.dim()) +
                                 " contradicts the irreducibility certificate");

  // Non-exclusive mode: report every classifiable direction.
  for (Eigen::Index i = 0; i < kernel.dim(); ++i) {
    CMatrix s = detail::normalize_form(unvec(kernel.basis.col(i), N, N));
    const int sign = detail::form_sign(s);
    if (sign == 0) continue;
    out.kinds_found.push_back(sign > 0 ? FormKind::Orthogonal : FormKind::Symplectic);
    if (!out.S) {
      out.kind = out.kinds_found.back();
      out.s_sbar_sign = sign;
      out.S = s;
      out.scalar_normalized = true;
      out.residual = residual_of(s);
    }
  }
  if (!out.S) out.kind = FormKind::NoForm;
  return out;
}

inline FormClassification classify_form(std::span<const PauliExpr> generators,
                                        double tol = 1e-9,
                                        bool irreducible_certified = false) {
  if (generators.empty()) throw InvalidInput("classify_form: no generators");
  std::vector<CMatrix> dense;
  for (const auto& g : generators) dense.push_back(to_matrix(g));
  return classify_form_dense(dense, tol, irreducible_certified);
}

inline FormClassification classify_form(const std::vector<PauliExpr>& generators,
                                        double tol = 1e-9,
                                        bool irreducible_certified = false) {
  return classify_form(std::span<const PauliExpr>(generators), tol, irreducible_certified);
}

/// Classification of the full local algebra su(2) (+) ... (+) su(2) in its
/// product representation: symplectic for an odd number of factors,
/// orthogonal for an even number.
inline FormClassification local_parity_check(int n) {
  if (n < 1) throw InvalidInput("local_parity_check: n must be positive");
  std::vector<PauliExpr> gens;
  for (int site = 1; site <= n; ++site)
    for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z})
      gens.push_back(PauliExpr::single(n, site, l));
  return classify_form(gens, 1e-9, true);
}

}  // namespace liectrl
