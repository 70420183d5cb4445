#include "krein_schur.hpp"

#include <Eigen/SVD>

namespace kschur {

namespace {

Matrix hermitize(Matrix x) { return Matrix((x + x.adjoint()) / 2.0); }

Matrix hilbert_face(const Matrix& w, const KreinSpace& space,
                    const Tolerances& tol) {
  require_krein_selfadjoint(w, space, tol);
  return hermitize(space.j * w);
}

// Orthonormal basis of the numerical kernel (right null space).
Matrix kernel_basis(const Matrix& m, const Tolerances& tol) {
  if (m.cols() == 0) return Matrix::Zero(0, 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() == 0
                      ? 0.0
                      : tol.rank_rel * sv(0) *
                            static_cast<double>(std::max(m.rows(), m.cols()));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return svd.matrixV().rightCols(m.cols() - r);
}

Matrix column_space_basis(const Matrix& m, const Tolerances& tol) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix::Zero(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() == 0
                      ? 0.0
                      : tol.rank_rel * sv(0) *
                            static_cast<double>(std::max(m.rows(), m.cols()));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return svd.matrixU().leftCols(r);
}

// Complement of J1 * basis, i.e. the orthogonal companion inside the
// signature-j1 space C^k.
Matrix companion_basis(const Matrix& basis, const Matrix& j1,
                       const Tolerances& tol) {
  Subspace tmp = orthonormalize(j1 * basis, tol);
  return orthonormal_complement(tmp);
}

}  // namespace

KreinFrames krein_frames(const Subspace& s, const KreinSpace& space,
                         const Tolerances& tol) {
  KreinBasis sb = krein_orthonormal_basis(s, space, tol);
  Subspace comp = orthogonal_companion(s, space);
  KreinBasis cb = krein_orthonormal_basis(comp, space, tol);
  return KreinFrames{sb.basis, sb.signature, cb.basis, cb.signature};
}

KreinBlocks krein_block_decompose(const Matrix& w, const Subspace& s,
                                  const KreinSpace& space,
                                  const Tolerances& tol) {
  require_krein_selfadjoint(w, space, tol);
  KreinFrames fr = krein_frames(s, space, tol);
  const Eigen::Index k = fr.v.cols();
  const Eigen::Index m = fr.wb.cols();
  Matrix u(space.dim, k + m);
  u << fr.v, fr.wb;
  Matrix jt = Matrix::Zero(k + m, k + m);
  jt.topLeftCorner(k, k) = fr.j1;
  jt.bottomRightCorner(m, m) = fr.j2;
  // [v wb] is J-unitary onto diag(j1, j2), so its inverse is jt u* J.
  Matrix w_coords = jt * u.adjoint() * space.j * w * u;
  KreinBlocks out;
  out.frames = fr;
  out.w11 = w_coords.topLeftCorner(k, k);
  out.w12 = w_coords.topRightCorner(k, m);
  out.w22 = w_coords.bottomRightCorner(m, m);
  return out;
}

Matrix assemble_tail_block(const KreinFrames& frames, const Matrix& x22,
                           const KreinSpace& space) {
  return frames.wb * x22 * frames.j2 * frames.wb.adjoint() * space.j;
}

bool is_weakly_complementable_krein(const Matrix& w, const Subspace& s,
                                    const KreinSpace& space,
                                    const Tolerances& tol) {
  return is_weakly_complementable(hilbert_face(w, space, tol), s, tol);
}

bool is_complementable_krein(const Matrix& w, const Subspace& s,
                             const KreinSpace& space, const Tolerances& tol) {
  return is_complementable(hilbert_face(w, space, tol), s, tol);
}

Matrix krein_schur_complement(const Matrix& w, const Subspace& s,
                              const KreinSpace& space, const Tolerances& tol) {
  return space.j * schur_complement(hilbert_face(w, space, tol), s, tol);
}

Matrix krein_compression(const Matrix& w, const Subspace& s,
                         const KreinSpace& space, const Tolerances& tol) {
  return w - krein_schur_complement(w, s, space, tol);
}

Matrix krein_schur_regular(const Matrix& w, const Subspace& s,
                           const KreinSpace& space, const Tolerances& tol) {
  KreinBlocks blocks = krein_block_decompose(w, s, space, tol);
  const KreinFrames& fr = blocks.frames;
  const int k = static_cast<int>(fr.v.cols());

  KreinSpace inner{k, fr.j1};
  PolarFactorization pf = polar_factorization(blocks.w11, inner, tol);
  if (!range_inclusion(blocks.w12, pf.d, tol)) {
    throw Error(Status::NotWeaklyComplementable,
                "operator is not weakly complementable to the subspace");
  }
  Matrix y = pseudo_inverse(pf.d, tol) * blocks.w12;
  Matrix quotient = blocks.w22 - fr.j2 * y.adjoint() * pf.k_signature * y;
  return assemble_tail_block(fr, quotient, space);
}

Matrix krein_projection_element(const Matrix& w, const Subspace& s,
                                const KreinSpace& space, const Tolerances& tol) {
  return b_selfadjoint_projection(hilbert_face(w, space, tol), s, tol).q;
}

Matrix krein_pseudo_inverse(const Matrix& m, const Matrix& j1,
                            const Tolerances& tol) {
  const Eigen::Index k = m.rows();
  if (m.cols() != k || j1.rows() != k || j1.cols() != k) {
    throw Error(Status::ShapeMismatch, "Krein pseudo-inverse needs square blocks");
  }
  if (k == 0) return m;

  Matrix range = column_space_basis(m, tol);
  Matrix kernel = kernel_basis(m, tol);
  const Eigen::Index r = range.cols();

  Matrix range_gram = range.adjoint() * j1 * range;
  if (numerical_rank(range_gram, tol) != r) {
    throw Error(Status::RangeNotRegular,
                "range of the block is not a regular subspace");
  }
  Matrix kernel_gram = kernel.adjoint() * j1 * kernel;
  if (numerical_rank(kernel_gram, tol) != kernel.cols()) {
    throw Error(Status::NullspaceNotRegular,
                "nullspace of the block is not a regular subspace");
  }

  // Oblique projection onto R(m) along R(m)^[perp].
  Matrix range_comp = companion_basis(range, j1, tol);
  Matrix f(k, k);
  f << range, range_comp;
  Matrix selector = Matrix::Zero(k, k);
  selector.topLeftCorner(r, r) = Matrix::Identity(r, r);
  Matrix proj_range = f * selector * f.inverse();

  // Basis of N(m)^[perp]; m restricted to it is a bijection onto R(m).
  Matrix coimage = companion_basis(kernel, j1, tol);
  return coimage * pseudo_inverse(m * coimage, tol) * proj_range;
}

Matrix mary_schur(const Matrix& w, const Subspace& s, const KreinSpace& space,
                  const Tolerances& tol) {
  KreinBlocks blocks = krein_block_decompose(w, s, space, tol);
  const KreinFrames& fr = blocks.frames;
  Matrix w11_dagger = krein_pseudo_inverse(blocks.w11, fr.j1, tol);
  Matrix w12_sharp = fr.j2 * blocks.w12.adjoint() * fr.j1;
  Matrix quotient = blocks.w22 - w12_sharp * w11_dagger * blocks.w12;
  return assemble_tail_block(fr, quotient, space);
}

Matrix mmp_schur(const Matrix& w, const Subspace& s, const KreinSpace& space,
                 const Tolerances& tol) {
  PolarFactorization pf = polar_factorization(w, space, tol);
  Matrix q = krein_projection_element(w, s, space, tol);
  Matrix dsharp = pf.k_signature * pf.d.adjoint() * space.j;
  // The projection-like factor acts through the bounded identity
  // P_{M // M^[perp]} D^# = D^# Q.
  Matrix t = dsharp * q;
  return pf.d * (dsharp - t);
}

bool is_weakly_complementable_in_metric(const Matrix& w, const Subspace& s,
                                        const KreinSpace& space,
                                        const AltSignature& alt,
                                        const Tolerances& tol) {
  require_krein_selfadjoint(w, space, tol);
  Matrix root = psd_sqrt(alt.alpha, tol);
  Matrix root_inv = root.inverse();
  Matrix face = hermitize(root_inv * alt.j_alpha * w * root);
  Subspace mapped = orthonormalize(root_inv * s.basis, tol);
  return is_weakly_complementable(face, mapped, tol);
}

Matrix krein_schur_in_metric(const Matrix& w, const Subspace& s,
                             const KreinSpace& space, const AltSignature& alt,
                             const Tolerances& tol) {
  require_krein_selfadjoint(w, space, tol);
  // Transport the alpha-metric Hilbert space isometrically onto standard
  // C^n via alpha^{-1/2}, run the Hilbert quotient there, and pull back.
  Matrix root = psd_sqrt(alt.alpha, tol);
  Matrix root_inv = root.inverse();
  Matrix face = hermitize(root_inv * alt.j_alpha * w * root);
  Subspace mapped = orthonormalize(root_inv * s.basis, tol);
  Matrix quotient = schur_complement(face, mapped, tol);
  return alt.j_alpha * root * quotient * root_inv;
}

}  // namespace kschur
