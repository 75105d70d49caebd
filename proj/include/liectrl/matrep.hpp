#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <string>
#include <vector>

#include "liectrl/errors.hpp"

namespace liectrl {

using CMatrix = Eigen::MatrixXcd;

/// Largest N for which N^2 x N^2 constraint matrices may be materialized.
inline constexpr int kDenseSideCap = 64;

inline void check_finite(const CMatrix& m, const char* where) {
  if (!m.allFinite()) throw InvalidInput(std::string(where) + ": non-finite entries");
}

/// Column-major stacking: vec(A) lists the columns of A top to bottom, so
/// vec(AXB) = (B^t (x) A) vec(X) and K vec(A) = vec(A^t).
inline Eigen::VectorXcd vec(const CMatrix& a) {
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size());
}

inline CMatrix unvec(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw InvalidInput("unvec: size mismatch");
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

/// The N^2 x N^2 permutation with K vec(A) = vec(A^t); symmetric, orthogonal
/// and involutive, with eigenvalues +1 and -1 of multiplicities N(N+1)/2 and
/// N(N-1)/2 (the symmetric and antisymmetric subspaces).
inline CMatrix commutation_matrix(int N) {
  if (N < 1) throw InvalidInput("commutation_matrix: N must be positive");
  const Eigen::Index M = static_cast<Eigen::Index>(N) * N;
  CMatrix K = CMatrix::Zero(M, M);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) K(i + N * j, j + N * i) = 1.0;
  return K;
}

struct NullspaceResult {
  CMatrix basis;          // columns form an orthonormal kernel basis
  double tolerance_used;  // absolute singular-value threshold applied
  double residual_max;    // max ||M v|| over returned basis vectors
  Eigen::Index dim() const { return basis.cols(); }
};

/// Orthonormal basis of the numerical kernel: right singular vectors whose
/// singular value is at most tol * sigma_max. A zero matrix yields the full
/// space.
inline NullspaceResult nullspace(const CMatrix& m, double tol = 1e-9) {
  if (tol <= 0) throw InvalidInput("nullspace: tol must be positive");
  check_finite(m, "nullspace");
  NullspaceResult out;
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0 || m.isZero(0.0)) {
    out.basis = CMatrix::Identity(cols, cols);
    out.tolerance_used = 0.0;
    out.residual_max = 0.0;
    return out;
  }
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double thresh = tol * smax;
  Eigen::Index kernel_dim = 0;
  for (Eigen::Index i = 0; i < cols; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= thresh) ++kernel_dim;
  }
  out.basis = svd.matrixV().rightCols(kernel_dim);
  out.tolerance_used = thresh;
  out.residual_max = 0.0;
  for (Eigen::Index i = 0; i < kernel_dim; ++i)
    out.residual_max = std::max(out.residual_max, (m * out.basis.col(i)).norm());
  return out;
}

/// Count of singular values above tol * sigma_max.
inline Eigen::Index rank(const CMatrix& m, double tol = 1e-9) {
  check_finite(m, "rank");
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double thresh = tol * sv(0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

/// Intersection of subspaces given by orthonormal column bases: stacks the
/// orthogonal-complement projectors (I - B B*) and takes one nullspace.
inline NullspaceResult intersect_subspaces(const std::vector<CMatrix>& bases, double tol = 1e-9) {
  if (bases.empty()) throw InvalidInput("intersect_subspaces: no subspaces");
  const Eigen::Index dim = bases.front().rows();
  for (const auto& b : bases)
    if (b.rows() != dim) throw InvalidInput("intersect_subspaces: ambient dimension mismatch");
  CMatrix stacked(dim * static_cast<Eigen::Index>(bases.size()), dim);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    stacked.middleRows(static_cast<Eigen::Index>(i) * dim, dim) =
        CMatrix::Identity(dim, dim) - bases[i] * bases[i].adjoint();
  }
  return nullspace(stacked, tol);
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Constraint map of [s, X] = 0 on vec(s): (X^t (x) I - I (x) X) vec(s) = 0.
inline CMatrix commutator_constraint(const CMatrix& x) {
  const Eigen::Index N = x.rows();
  if (x.cols() != N) throw InvalidInput("commutator_constraint: matrix must be square");
  if (N > kDenseSideCap)
    throw CapExceeded("commutator_constraint: N = " + std::to_string(N) + " exceeds cap " +
                      std::to_string(kDenseSideCap));
  const CMatrix id = CMatrix::Identity(N, N);
  return kron(x.transpose(), id) - kron(id, x);
}

/// Constraint map of S X + X^t S = 0 on vec(S): (X^t (x) I + I (x) X^t) vec(S).
inline CMatrix form_constraint(const CMatrix& x) {
  const Eigen::Index N = x.rows();
  if (x.cols() != N) throw InvalidInput("form_constraint: matrix must be square");
  if (N > kDenseSideCap)
    throw CapExceeded("form_constraint: N = " + std::to_string(N) + " exceeds cap " +
                      std::to_string(kDenseSideCap));
  const CMatrix id = CMatrix::Identity(N, N);
  return kron(x.transpose(), id) + kron(id, x.transpose());
}

}  // namespace liectrl
