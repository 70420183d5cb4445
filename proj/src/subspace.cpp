#include "subspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace kschur {

Subspace Subspace::span(std::initializer_list<Complex> column) {
  Matrix v(static_cast<Eigen::Index>(column.size()), 1);
  Eigen::Index i = 0;
  for (Complex c : column) v(i++, 0) = c;
  return orthonormalize(v, Tolerances{});
}

Subspace orthonormalize(const Matrix& vectors, const Tolerances& tol) {
  const Eigen::Index n = vectors.rows();
  if (n == 0) throw Error(Status::InvalidArgument, "empty ambient space");
  if (vectors.cols() == 0 || frobenius(vectors) == 0.0) {
    return Subspace::zero(static_cast<int>(n));
  }
  Eigen::JacobiSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = tol.rank_rel * sv(0) *
                  static_cast<double>(std::max(vectors.rows(), vectors.cols()));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  Subspace out;
  out.ambient_dim = static_cast<int>(n);
  out.basis = canonical_phase(svd.matrixU().leftCols(r));
  return out;
}

Matrix orthonormal_complement(const Subspace& s) {
  const Eigen::Index n = s.ambient_dim;
  const Eigen::Index k = s.basis.cols();
  if (k == 0) return Matrix::Identity(n, n);
  if (k == n) return Matrix::Zero(n, 0);
  // Full unitary completion of the orthonormal basis; the trailing columns
  // span the orthogonal complement.
  Eigen::HouseholderQR<Matrix> qr(s.basis);
  Matrix q = qr.householderQ();
  return canonical_phase(q.rightCols(n - k));
}

Subspace complement_subspace(const Subspace& s) {
  return {s.ambient_dim, orthonormal_complement(s)};
}

int intersection_dim(const Subspace& s, const Subspace& t, const Tolerances& tol) {
  if (s.ambient_dim != t.ambient_dim) {
    throw Error(Status::ShapeMismatch, "subspaces live in different spaces");
  }
  if (s.dim() == 0 || t.dim() == 0) return 0;
  Matrix joint(s.ambient_dim, s.dim() + t.dim());
  joint << s.basis, t.basis;
  return s.dim() + t.dim() - numerical_rank(joint, tol);
}

Matrix projector(const Subspace& s) {
  return s.basis * s.basis.adjoint();
}

}  // namespace kschur
