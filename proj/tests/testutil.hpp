#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/QR>

#include "completion.hpp"
#include "dense.hpp"
#include "hilbert.hpp"
#include "krein.hpp"
#include "krein_schur.hpp"
#include "random.hpp"
#include "subspace.hpp"
#include "verify.hpp"

namespace ktest {

using namespace kschur;

inline Matrix mk(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c =
      r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Complex v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()),
                          static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline bool close(const Matrix& a, const Matrix& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  double scale = std::max({a.norm(), b.norm(), 1.0});
  return (a - b).norm() <= tol * scale;
}

inline Subspace span_cols(const Matrix& cols) {
  return orthonormalize(cols, Tolerances{});
}

// Independent oracle for the Schur complement: the classical pseudoinverse
// route c - b* a^+ b, with the pseudoinverse taken from Eigen's
// rank-revealing complete orthogonal decomposition rather than our SVD path.
inline Matrix oracle_schur_pinv(const Matrix& b_op, const Subspace& s) {
  Tolerances tol;
  BlockDecomposition blk = block_decompose(b_op, s, tol);
  Matrix a_pinv;
  if (blk.a.rows() == 0) {
    a_pinv = blk.a;
  } else {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(blk.a);
    cod.setThreshold(1e-10);
    a_pinv = cod.pseudoInverse();
  }
  Matrix quotient = blk.c - blk.b.adjoint() * a_pinv * blk.b;
  quotient = (quotient + quotient.adjoint()) / 2.0;
  return blk.perp_basis * quotient * blk.perp_basis.adjoint();
}

// ------- seeded generators for property suites -------

inline Matrix rnd_mat(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  return random_complex_matrix(r, c, rng);
}

inline Matrix rnd_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  return random_hermitian(n, rng);
}

inline Matrix rnd_psd(Eigen::Index n, Eigen::Index rank, std::mt19937_64& rng) {
  Matrix g = rnd_mat(rank, n, rng);
  return Matrix(g.adjoint() * g);
}

inline Subspace rnd_subspace(Eigen::Index n, Eigen::Index k,
                             std::mt19937_64& rng) {
  return orthonormalize(rnd_mat(n, k, rng), Tolerances{});
}

inline Matrix rnd_unitary(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(rnd_mat(n, n, rng));
  return Matrix(qr.householderQ());
}

inline KreinSpace rnd_krein_space(Eigen::Index n, std::mt19937_64& rng) {
  Matrix u = rnd_unitary(n, rng);
  RealVector signs(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (Eigen::Index i = 0; i < n; ++i) signs(i) = coin(rng) ? 1.0 : -1.0;
  Matrix j = u * signs.asDiagonal() * u.adjoint();
  j = (j + j.adjoint()) / 2.0;
  return KreinSpace{static_cast<int>(n), j};
}

inline Matrix rnd_krein_selfadjoint(const KreinSpace& space,
                                    std::mt19937_64& rng) {
  return Matrix(space.j * rnd_hermitian(space.dim, rng));
}

// Hermitian operator weakly complementable to s by construction, with a
// prescribed number of zero eigenvalues in the compressed block.
inline Matrix rnd_weakly_complementable(const Subspace& s, Eigen::Index zeros,
                                        std::mt19937_64& rng) {
  const Eigen::Index n = s.ambient_dim;
  const Eigen::Index k = s.dim();
  Matrix w = orthonormal_complement(s);
  const Eigen::Index m = n - k;

  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_int_distribution<int> coin(0, 1);
  RealVector lambda = RealVector::Zero(k);
  for (Eigen::Index i = 0; i < k - zeros; ++i) {
    lambda(i) = (coin(rng) ? 1.0 : -1.0) * mag(rng);
  }
  Matrix theta = rnd_unitary(k, rng);
  Matrix a = theta * lambda.asDiagonal() * theta.adjoint();
  a = (a + a.adjoint()) / 2.0;

  RealVector root(k);
  for (Eigen::Index i = 0; i < k; ++i) root(i) = std::sqrt(std::abs(lambda(i)));
  Matrix root_mod = theta * root.asDiagonal() * theta.adjoint();
  Matrix b = root_mod * rnd_mat(k, m, rng);
  Matrix c = rnd_hermitian(m, rng);

  Matrix out = s.basis * a * s.basis.adjoint() + s.basis * b * w.adjoint() +
               w * b.adjoint() * s.basis.adjoint() + w * c * w.adjoint();
  return (out + out.adjoint()) / 2.0;
}

inline Subspace rnd_regular_subspace(const KreinSpace& space, Eigen::Index k,
                                     std::mt19937_64& rng) {
  Tolerances tol;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Subspace s = rnd_subspace(space.dim, k, rng);
    if (s.dim() == k && is_regular_subspace(s, space, tol)) return s;
  }
  throw Error(Status::Internal, "failed to draw a regular subspace");
}

// Solvable completion data: w12 is forced into the range of the polar factor.
inline IncompleteBlock rnd_solvable_block(const KreinSpace& space,
                                          Eigen::Index k, Eigen::Index corner_rank,
                                          std::mt19937_64& rng) {
  Tolerances tol;
  IncompleteBlock p;
  p.space = space;
  p.sub = rnd_regular_subspace(space, k, rng);
  KreinFrames fr = krein_frames(p.sub, space, tol);
  Matrix h = rnd_mat(corner_rank, k, rng);
  p.w11 = fr.j1 * h.adjoint() * h;
  if (corner_rank > 0) {
    // Mix signs so the corner is indefinite in the Krein sense.
    Matrix h2 = rnd_mat(corner_rank, k, rng);
    p.w11 -= fr.j1 * h2.adjoint() * h2;
  }
  p.w11 = (p.w11 + fr.j1 * p.w11.adjoint() * fr.j1) / 2.0;
  KreinSpace inner{static_cast<int>(k), fr.j1};
  PolarFactorization pf = polar_factorization(p.w11, inner, tol);
  p.w12 = pf.d * rnd_mat(pf.rank, space.dim - k, rng);
  return p;
}

}  // namespace ktest
