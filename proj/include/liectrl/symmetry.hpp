#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "liectrl/closure.hpp"
#include "liectrl/linear_exact.hpp"
#include "liectrl/matrep.hpp"
#include "liectrl/pauli.hpp"

namespace liectrl {

struct SymmetryReport {
  int centraliser_dim = 0;
  std::vector<PauliExpr> centraliser_basis;
  int commutant_dim = 1;
  bool irreducible = false;
  long tensor_square_commutant_dim = -1;  // -1 when not computed
};

/// Exact centraliser of a generator set inside the traceless skew-Hermitian
/// algebra, solved in Pauli coordinates: an unknown string commutes with a
/// generator iff the signed contributions of its anticommuting term pairs
/// cancel, which is a homogeneous rational linear system. No dense matrices
/// and no tolerances are involved.
inline SymmetryReport centraliser(std::span<const PauliExpr> generators) {
  if (generators.empty()) throw InvalidInput("centraliser: no generators");
  const int n = generators.front().qubits();
  for (const auto& g : generators)
    if (g.qubits() != n) throw InvalidInput("centraliser: inconsistent qubit counts");
  if (n > 12) throw CapExceeded("centraliser: exact path capped at 12 qubits");

  const std::uint64_t codes = (std::uint64_t{1} << (2 * n));

  SparseRationalSystem system;
  for (const auto& g : generators) {
    // rows keyed by the output string of [s, g]
    std::map<std::uint64_t, SparseRationalSystem::Row> rows;
    for (std::uint64_t p = 1; p < codes; ++p) {
      const PauliTerm tp(n, p);
      for (const auto& [kcode, c] : g.terms()) {
        const PauliTerm tk(n, kcode);
        auto [phase, prod] = multiply_terms(tp, tk);
        if (phase.is_real()) continue;
        const int sign = phase.exponent() == 1 ? 1 : -1;
        auto& row = rows[prod.code()];
        auto [it, inserted] = row.try_emplace(p, Rational(c * sign));
        if (!inserted) {
          it->second += c * sign;
          if (it->second == 0) row.erase(it);
        }
      }
    }
    for (auto& [r, row] : rows)
      if (!row.empty()) system.add_row(std::move(row));
  }

  std::vector<std::uint64_t> columns;
  columns.reserve(codes - 1);
  for (std::uint64_t p = 1; p < codes; ++p) columns.push_back(p);

  SymmetryReport report;
  for (auto& vec : system.nullspace(columns)) {
    PauliExpr e(n);
    for (auto& [code, v] : vec) e.add_code(code, v);
    report.centraliser_basis.push_back(std::move(e));
  }
  report.centraliser_dim = static_cast<int>(report.centraliser_basis.size());
  // the full matrix-algebra commutant adds only the identity direction here
  report.commutant_dim = report.centraliser_dim + 1;
  report.irreducible = report.centraliser_dim == 0;
  return report;
}

inline SymmetryReport centraliser(const std::vector<PauliExpr>& generators) {
  return centraliser(std::span<const PauliExpr>(generators));
}

// ---------------------------------------------------------------------------
// Dense joint commutants.

struct CommutantResult {
  long dim = 0;
  std::vector<CMatrix> basis;  // orthonormal in the Hilbert-Schmidt product
  double residual_max = 0.0;
  double tolerance_used = 0.0;
};

namespace detail {

/// Joint commutant of a set of skew-Hermitian matrices. A generic Hermitian
/// combination of the generators fixes a block structure (the commutant must
/// preserve its eigenspaces); the remaining constraints couple only pairs of
/// eigenblocks, so the kernel is found in the small block-coordinate space
/// instead of materializing an M^2 x M^2 system.
inline CommutantResult joint_commutant(const std::vector<CMatrix>& gens, double tol = 1e-9,
                                       long unknown_cap = 5000) {
  if (gens.empty()) throw InvalidInput("joint_commutant: no generators");
  const Eigen::Index M = gens.front().rows();
  double gen_scale = 0.0;
  for (const auto& g : gens) {
    if (g.rows() != M || g.cols() != M)
      throw InvalidInput("joint_commutant: inconsistent sizes");
    check_finite(g, "joint_commutant");
    gen_scale = std::max(gen_scale, g.norm());
    if ((g + g.adjoint()).norm() > 1e-8 * std::max(1.0, g.norm()))
      throw InvalidInput("joint_commutant: generators must be skew-Hermitian");
  }

  // Deterministic generic combination; the seed is fixed so results never
  // depend on external randomness.
  std::mt19937 rng(0x5eed1234u);
  std::uniform_real_distribution<double> coef(0.25, 1.0);
  CMatrix herm = CMatrix::Zero(M, M);
  for (const auto& g : gens) herm += coef(rng) * (std::complex<double>(0, 1) * g);

  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  if (es.info() != Eigen::Success) throw NumericalInconsistency("eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  const CMatrix& U = es.eigenvectors();

  // cluster eigenvalues; merging too much is safe (constraints still cut)
  const double scale = std::max(1.0, std::abs(lam(M - 1)) + std::abs(lam(0)));
  const double gap = 1e-8 * scale;
  std::vector<Eigen::Index> starts{0};
  for (Eigen::Index i = 1; i < M; ++i)
    if (lam(i) - lam(i - 1) > gap) starts.push_back(i);
  starts.push_back(M);
  const std::size_t nblocks = starts.size() - 1;

  std::vector<long> offset(nblocks), bsize(nblocks);
  long unknowns = 0;
  for (std::size_t b = 0; b < nblocks; ++b) {
    bsize[b] = static_cast<long>(starts[b + 1] - starts[b]);
    offset[b] = unknowns;
    unknowns += bsize[b] * bsize[b];
  }
  if (unknowns > unknown_cap)
    throw CapExceeded("joint_commutant: block unknowns " + std::to_string(unknowns) +
                      " exceed cap " + std::to_string(unknown_cap));

  CMatrix gram = CMatrix::Zero(unknowns, unknowns);
  for (const auto& g : gens) {
    const CMatrix gamma = U.adjoint() * g * U;
    for (std::size_t a = 0; a < nblocks; ++a) {
      for (std::size_t b = 0; b < nblocks; ++b) {
        const long ma = bsize[a], mb = bsize[b];
        const CMatrix blk = gamma.block(starts[a], starts[b], ma, mb);
        if (a != b && blk.norm() < 1e-14 * std::max(1.0, gamma.norm())) continue;
        // rows: (X_a Gamma_ab - Gamma_ab X_b)(i,j) for i < ma, j < mb
        CMatrix da = CMatrix::Zero(ma * mb, ma * ma);
        CMatrix db = CMatrix::Zero(ma * mb, mb * mb);
        for (long i = 0; i < ma; ++i)
          for (long j = 0; j < mb; ++j) {
            const long row = i + ma * j;
            for (long k = 0; k < ma; ++k) da(row, i + ma * k) += blk(k, j);
            for (long k = 0; k < mb; ++k) db(row, k + mb * j) -= blk(i, k);
          }
        if (a == b) {
          const CMatrix d = da + db;
          gram.block(offset[a], offset[a], ma * ma, ma * ma) += d.adjoint() * d;
        } else {
          gram.block(offset[a], offset[a], ma * ma, ma * ma) += da.adjoint() * da;
          gram.block(offset[a], offset[b], ma * ma, mb * mb) += da.adjoint() * db;
          gram.block(offset[b], offset[a], mb * mb, ma * ma) += db.adjoint() * da;
          gram.block(offset[b], offset[b], mb * mb, mb * mb) += db.adjoint() * db;
        }
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> ges(gram);
  if (ges.info() != Eigen::Success) throw NumericalInconsistency("gram eigensolve failed");
  const Eigen::VectorXd& glam = ges.eigenvalues();
  const double gmax = std::max(glam(unknowns - 1), 0.0);
  // singular-value semantics: sigma = sqrt(lambda), threshold relative to the
  // largest constraint singular value
  const double thresh = std::max(gmax * tol, gmax * 1e-14);

  CommutantResult out;
  out.tolerance_used = thresh;
  for (Eigen::Index i = 0; i < unknowns; ++i) {
    if (glam(i) > thresh) continue;
    CMatrix blockdiag = CMatrix::Zero(M, M);
    for (std::size_t b = 0; b < nblocks; ++b) {
      Eigen::Map<const CMatrix> xb(ges.eigenvectors().col(i).data() + offset[b], bsize[b],
                                   bsize[b]);
      blockdiag.block(starts[b], starts[b], bsize[b], bsize[b]) = xb;
    }
    out.basis.push_back(U * blockdiag * U.adjoint());
  }
  out.dim = static_cast<long>(out.basis.size());
  for (const auto& x : out.basis)
    for (const auto& g : gens)
      out.residual_max = std::max(out.residual_max,
                                  (x * g - g * x).norm() / std::max(1.0, g.norm()));
  if (out.residual_max > 1e-6)
    throw NumericalInconsistency("joint_commutant: kernel residual " +
                                 std::to_string(out.residual_max));
  return out;
}

inline std::vector<CMatrix> tensor_square_generators(std::span<const PauliExpr> generators,
                                                     int side_cap = kDenseSideCap) {
  if (generators.empty()) throw InvalidInput("tensor_square: no generators");
  const int n = generators.front().qubits();
  const long N = 1L << n;
  if (N > side_cap)
    throw CapExceeded("tensor_square: N = " + std::to_string(N) + " exceeds cap " +
                      std::to_string(side_cap));
  const CMatrix id = CMatrix::Identity(N, N);
  std::vector<CMatrix> out;
  for (const auto& g : generators) {
    if (g.qubits() != n) throw InvalidInput("tensor_square: inconsistent qubit counts");
    const CMatrix a = to_matrix(g);
    out.push_back(kron(a, id) + kron(id, a));
  }
  return out;
}

}  // namespace detail

/// Joint commutant of {A (x) 1 + 1 (x) A} over all generators A, computed in
/// gl(N^2). Dimension two certifies full controllability.
inline CommutantResult tensor_square_commutant(std::span<const PauliExpr> generators,
                                               double tol = 1e-9) {
  return detail::joint_commutant(detail::tensor_square_generators(generators), tol);
}

inline long tensor_square_commutant_dim(std::span<const PauliExpr> generators,
                                        double tol = 1e-9) {
  return tensor_square_commutant(generators, tol).dim;
}

inline long tensor_square_commutant_dim(const std::vector<PauliExpr>& generators,
                                        double tol = 1e-9) {
  return tensor_square_commutant_dim(std::span<const PauliExpr>(generators), tol);
}

/// Commutant dimensions of the restrictions to the antisymmetric and
/// symmetric subspaces of the tensor square; (1, 1) certifies full
/// controllability.
inline std::pair<long, long> alt_sym_commutant_dims(std::span<const PauliExpr> generators,
                                                    double tol = 1e-9) {
  const auto squares = detail::tensor_square_generators(generators);
  const int n = generators.front().qubits();
  const long N = 1L << n;

  CMatrix alt = CMatrix::Zero(N * N, N * (N - 1) / 2);
  CMatrix sym = CMatrix::Zero(N * N, N * (N + 1) / 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  long ca = 0, cs = 0;
  for (long i = 0; i < N; ++i) {
    sym(i + N * i, cs++) = 1.0;
    for (long j = i + 1; j < N; ++j) {
      alt(i + N * j, ca) = inv_sqrt2;
      alt(j + N * i, ca) = -inv_sqrt2;
      ++ca;
      sym(i + N * j, cs) = inv_sqrt2;
      sym(j + N * i, cs) = inv_sqrt2;
      ++cs;
    }
  }

  std::vector<CMatrix> alt_gens, sym_gens;
  for (const auto& g : squares) {
    alt_gens.push_back(alt.adjoint() * g * alt);
    sym_gens.push_back(sym.adjoint() * g * sym);
  }
  const long da = detail::joint_commutant(alt_gens, tol).dim;
  const long ds = detail::joint_commutant(sym_gens, tol).dim;
  return {da, ds};
}

inline std::pair<long, long> alt_sym_commutant_dims(const std::vector<PauliExpr>& generators,
                                                    double tol = 1e-9) {
  return alt_sym_commutant_dims(std::span<const PauliExpr>(generators), tol);
}

/// Dense-path centraliser for systems without a qubit tensor basis: stacks
/// the vectorized commutation constraints of every generator and reads the
/// kernel. Input matrices are the skew-Hermitian generators; the returned
/// dimension counts the traceless skew-Hermitian commuting directions.
inline SymmetryReport centraliser_dense(const std::vector<CMatrix>& generators,
                                        double tol = 1e-9) {
  if (generators.empty()) throw InvalidInput("centraliser_dense: no generators");
  const Eigen::Index N = generators.front().rows();
  if (N > kDenseSideCap)
    throw CapExceeded("centraliser_dense: N exceeds cap " + std::to_string(kDenseSideCap));
  CMatrix stacked(static_cast<Eigen::Index>(generators.size()) * N * N, N * N);
  for (std::size_t i = 0; i < generators.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * N * N, N * N) =
        commutator_constraint(generators[i]);
  const auto kernel = nullspace(stacked, tol);
  SymmetryReport report;
  report.commutant_dim = static_cast<int>(kernel.dim());
  report.centraliser_dim = report.commutant_dim - 1;
  report.irreducible = report.centraliser_dim == 0;
  return report;
}

}  // namespace liectrl
