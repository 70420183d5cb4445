#pragma once

#include "dense.hpp"
#include "types.hpp"

namespace kschur {

/// A subspace of C^n held as an orthonormal column basis (k may be 0).
struct Subspace {
  int ambient_dim = 0;
  Matrix basis;  // ambient_dim x k, basis* basis = I

  int dim() const { return static_cast<int>(basis.cols()); }
  bool is_zero() const { return basis.cols() == 0; }
  bool is_whole() const { return basis.cols() == basis.rows(); }

  static Subspace zero(int n) { return {n, Matrix::Zero(n, 0)}; }
  static Subspace whole(int n) { return {n, Matrix::Identity(n, n)}; }
  static Subspace span(std::initializer_list<Complex> column);
};

/// Compress arbitrary spanning vectors (columns) to an orthonormal basis of
/// their numerical column space. Rank-deficient inputs lose the redundant
/// directions.
Subspace orthonormalize(const Matrix& vectors, const Tolerances& tol);

/// Orthonormal basis of the Hilbert-orthogonal complement, n x (n-k).
Matrix orthonormal_complement(const Subspace& s);

Subspace complement_subspace(const Subspace& s);

/// Dimension of the intersection of two subspaces of the same ambient space.
int intersection_dim(const Subspace& s, const Subspace& t, const Tolerances& tol);

/// Orthogonal projector onto the subspace.
Matrix projector(const Subspace& s);

}  // namespace kschur
