#include "krein.hpp"

#include <cmath>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "random.hpp"

namespace kschur {

void KreinSpace::validate(const Tolerances& tol) const {
  if (dim <= 0 || j.rows() != dim || j.cols() != dim) {
    throw Error(Status::ShapeMismatch, "signature operator has wrong shape");
  }
  double scale = std::max(frobenius(j), 1e-300);
  if (frobenius(j - j.adjoint()) > tol.eq_rel * scale) {
    throw Error(Status::InvalidArgument, "signature operator is not Hermitian");
  }
  if (frobenius(j * j - Matrix::Identity(dim, dim)) > tol.eq_rel * scale) {
    throw Error(Status::InvalidArgument, "signature operator is not involutive");
  }
}

Matrix krein_adjoint(const Matrix& t, const KreinSpace& space) {
  if (t.rows() != space.dim || t.cols() != space.dim) {
    throw Error(Status::ShapeMismatch, "operator does not act on the space");
  }
  return space.j * t.adjoint() * space.j;
}

bool is_krein_selfadjoint(const Matrix& w, const KreinSpace& space,
                          const Tolerances& tol) {
  if (w.rows() != space.dim || w.cols() != space.dim) {
    throw Error(Status::ShapeMismatch, "operator does not act on the space");
  }
  Matrix jw = space.j * w;
  double scale = std::max(frobenius(w), 1e-300);
  return frobenius(jw - jw.adjoint()) <= tol.eq_rel * scale;
}

void require_krein_selfadjoint(const Matrix& w, const KreinSpace& space,
                               const Tolerances& tol) {
  if (!is_krein_selfadjoint(w, space, tol)) {
    throw Error(Status::NotKreinSelfadjoint,
                "operator is not selfadjoint in the Krein metric");
  }
}

bool is_regular_subspace(const Subspace& s, const KreinSpace& space,
                         const Tolerances& tol) {
  if (s.ambient_dim != space.dim) {
    throw Error(Status::ShapeMismatch, "subspace lives in a different space");
  }
  if (s.dim() == 0) return true;
  Matrix gram = s.basis.adjoint() * space.j * s.basis;
  return numerical_rank(gram, tol) == s.dim();
}

KreinBasis krein_orthonormal_basis(const Subspace& s, const KreinSpace& space,
                                   const Tolerances& tol) {
  if (s.ambient_dim != space.dim) {
    throw Error(Status::ShapeMismatch, "subspace lives in a different space");
  }
  const int k = s.dim();
  Matrix gram = s.basis.adjoint() * space.j * s.basis;
  gram = (gram + gram.adjoint()) / 2.0;
  if (k > 0 && numerical_rank(gram, tol) != k) {
    throw Error(Status::NotRegular, "subspace is not regular (singular Gram)");
  }
  HermitianEig eig = hermitian_eig(gram, tol);
  RealVector scaling(k), signs(k);
  for (int i = 0; i < k; ++i) {
    scaling(i) = 1.0 / std::sqrt(std::abs(eig.values(i)));
    signs(i) = eig.values(i) > 0.0 ? 1.0 : -1.0;
  }
  KreinBasis out;
  out.basis = canonical_phase(s.basis * eig.vectors * scaling.asDiagonal());
  out.signature = signs.asDiagonal().toDenseMatrix().cast<Complex>();
  return out;
}

Subspace orthogonal_companion(const Subspace& s, const KreinSpace& space) {
  if (s.ambient_dim != space.dim) {
    throw Error(Status::ShapeMismatch, "subspace lives in a different space");
  }
  // Companion = Hilbert complement of J S. J is invertible, so J S has the
  // same dimension as S even though J basis is no longer orthonormal.
  Subspace js = orthonormalize(space.j * s.basis, Tolerances{});
  return complement_subspace(js);
}

Matrix random_j_unitary(const KreinSpace& space, std::uint64_t seed,
                        double scale) {
  if (!(scale > 0.0)) {
    throw Error(Status::InvalidArgument, "scale must be positive");
  }
  std::mt19937_64 rng(seed);
  const int n = space.dim;
  Matrix m = scale * random_complex_matrix(n, n, rng);
  // Project onto Krein-skew matrices: (J M)* = -J M, so M^# = -M and exp(M)
  // preserves the metric.
  Matrix jm = space.j * m;
  jm = (jm - jm.adjoint()) / 2.0;
  Matrix skew = space.j * jm;
  return skew.exp();
}

AltSignature random_signature(const KreinSpace& space, std::uint64_t seed,
                              double scale) {
  Matrix t = random_j_unitary(space, seed, scale);
  AltSignature out;
  out.alpha = t * t.adjoint();
  out.alpha = (out.alpha + out.alpha.adjoint()) / 2.0;
  out.j_alpha = out.alpha * space.j;
  return out;
}

PolarFactorization polar_factorization(const Matrix& w, const KreinSpace& space,
                                       const Tolerances& tol) {
  require_krein_selfadjoint(w, space, tol);
  Matrix jw = space.j * w;
  jw = (jw + jw.adjoint()) / 2.0;
  HermitianEig eig = hermitian_eig(jw, tol);
  double band = eigen_zero_cutoff(eig.values, tol);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (std::abs(eig.values(i)) > band) keep.push_back(i);
  }
  const int r = static_cast<int>(keep.size());
  PolarFactorization out;
  out.rank = r;
  out.d.resize(space.dim, r);
  out.k_signature = Matrix::Zero(r, r);
  for (int idx = 0; idx < r; ++idx) {
    double lambda = eig.values(keep[idx]);
    out.d.col(idx) =
        space.j * eig.vectors.col(keep[idx]) * std::sqrt(std::abs(lambda));
    out.k_signature(idx, idx) = lambda > 0.0 ? 1.0 : -1.0;
  }
  return out;
}

Matrix tilde_alpha(const Subspace& s, const AltSignature& alt,
                   const Tolerances& tol) {
  if (s.ambient_dim != alt.alpha.rows()) {
    throw Error(Status::ShapeMismatch, "subspace lives in a different space");
  }
  Matrix compressed =
      s.basis.adjoint() * alt.alpha.inverse() * s.basis;
  compressed = (compressed + compressed.adjoint()) / 2.0;
  Matrix out = compressed.inverse();
  (void)tol;
  return (out + out.adjoint()) / 2.0;
}

}  // namespace kschur
