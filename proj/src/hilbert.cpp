#include "hilbert.hpp"

#include <utility>
#include <vector>

namespace kschur {

Matrix BlockDecomposition::reassemble() const {
  const Eigen::Index n = sub.ambient_dim;
  Matrix out = Matrix::Zero(n, n);
  const Matrix& v = sub.basis;
  const Matrix& w = perp_basis;
  out += v * a * v.adjoint();
  out += v * b * w.adjoint();
  out += w * b.adjoint() * v.adjoint();
  out += w * c * w.adjoint();
  return out;
}

BlockDecomposition block_decompose(const Matrix& m, const Subspace& s,
                                   const Tolerances& tol) {
  require_hermitian(m, tol);
  if (m.rows() != s.ambient_dim) {
    throw Error(Status::ShapeMismatch, "operator and subspace dimensions differ");
  }
  BlockDecomposition out;
  out.sub = s;
  out.perp_basis = orthonormal_complement(s);
  const Matrix& v = s.basis;
  const Matrix& w = out.perp_basis;
  out.a = v.adjoint() * m * v;
  out.b = v.adjoint() * m * w;
  out.c = w.adjoint() * m * w;
  out.a = (out.a + out.a.adjoint()) / 2.0;
  out.c = (out.c + out.c.adjoint()) / 2.0;
  return out;
}

bool is_weakly_complementable(const Matrix& m, const Subspace& s,
                              const Tolerances& tol) {
  BlockDecomposition blk = block_decompose(m, s, tol);
  if (blk.b.size() == 0) return true;
  ModulusSign ms = modulus_and_sign(blk.a, tol);
  return range_inclusion(blk.b, psd_sqrt(ms.modulus, tol), tol);
}

bool is_complementable(const Matrix& m, const Subspace& s,
                       const Tolerances& tol) {
  BlockDecomposition blk = block_decompose(m, s, tol);
  if (blk.b.size() == 0) return true;
  return range_inclusion(blk.b, blk.a, tol);
}

Matrix schur_complement(const Matrix& m, const Subspace& s,
                        const Tolerances& tol) {
  BlockDecomposition blk = block_decompose(m, s, tol);
  ModulusSign ms = modulus_and_sign(blk.a, tol);
  Matrix root = psd_sqrt(ms.modulus, tol);
  if (!range_inclusion(blk.b, root, tol)) {
    throw Error(Status::NotWeaklyComplementable,
                "operator is not weakly complementable to the subspace");
  }
  Matrix f = pseudo_inverse(root, tol) * blk.b;
  Matrix quotient = blk.c - f.adjoint() * ms.sign * f;
  quotient = (quotient + quotient.adjoint()) / 2.0;
  return blk.perp_basis * quotient * blk.perp_basis.adjoint();
}

Matrix compression(const Matrix& m, const Subspace& s, const Tolerances& tol) {
  return m - schur_complement(m, s, tol);
}

SignedSplit signed_split(const Matrix& m, const Subspace& s,
                         const Tolerances& tol, ZeroBandPolicy policy) {
  BlockDecomposition blk = block_decompose(m, s, tol);
  HermitianEig eig = hermitian_eig(blk.a, tol);
  double band = eigen_zero_cutoff(eig.values, tol);
  std::vector<Eigen::Index> plus, minus;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    bool in_band = std::abs(v) <= band;
    bool to_plus = in_band ? (policy == ZeroBandPolicy::ToPlus) : (v > 0.0);
    (to_plus ? plus : minus).push_back(i);
  }
  auto pick = [&](const std::vector<Eigen::Index>& idx) {
    Matrix cols(eig.vectors.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      cols.col(static_cast<Eigen::Index>(j)) = eig.vectors.col(idx[j]);
    }
    Subspace part;
    part.ambient_dim = s.ambient_dim;
    part.basis = canonical_phase(s.basis * cols);
    return part;
  };
  return SignedSplit{pick(plus), pick(minus)};
}

ThreeTermDecomposition three_term_decomposition(const Matrix& m,
                                                const Subspace& s,
                                                const Tolerances& tol) {
  if (!is_weakly_complementable(m, s, tol)) {
    throw Error(Status::NotWeaklyComplementable,
                "operator is not weakly complementable to the subspace");
  }
  SignedSplit split = signed_split(m, s, tol);
  const Matrix& vp = split.plus.basis;
  const Matrix& vm = split.minus.basis;
  Matrix w = orthonormal_complement(s);

  Matrix ap = vp.adjoint() * m * vp;
  Matrix am = -(vm.adjoint() * m * vm);
  ap = (ap + ap.adjoint()) / 2.0;
  am = (am + am.adjoint()) / 2.0;
  Matrix bp = vp.adjoint() * m * w;
  Matrix bm = vm.adjoint() * m * w;
  Matrix c = w.adjoint() * m * w;
  c = (c + c.adjoint()) / 2.0;

  Matrix f = pseudo_inverse(psd_sqrt(ap, tol), tol) * bp;
  Matrix g = -(pseudo_inverse(psd_sqrt(am, tol), tol) * bm);
  Matrix ff = f.adjoint() * f;
  Matrix gg = g.adjoint() * g;

  auto hermitize = [](Matrix x) { return Matrix((x + x.adjoint()) / 2.0); };

  ThreeTermDecomposition out;
  out.b1 = hermitize(w * (c - ff + gg) * w.adjoint());
  out.b2 = hermitize(vp * ap * vp.adjoint() + vp * bp * w.adjoint() +
                     w * bp.adjoint() * vp.adjoint() + w * ff * w.adjoint());
  out.b3 = hermitize(vm * am * vm.adjoint() - vm * bm * w.adjoint() -
                     w * bm.adjoint() * vm.adjoint() + w * gg * w.adjoint());
  return out;
}

BProjection b_selfadjoint_projection(const Matrix& m, const Subspace& s,
                                     const Tolerances& tol) {
  BlockDecomposition blk = block_decompose(m, s, tol);
  if (blk.b.size() != 0 && !range_inclusion(blk.b, blk.a, tol)) {
    throw Error(Status::NotComplementable,
                "operator is not complementable to the subspace");
  }
  Matrix y = pseudo_inverse(blk.a, tol) * blk.b;
  const Matrix& v = s.basis;
  const Matrix& w = blk.perp_basis;

  BProjection out;
  out.q = v * v.adjoint() + v * y * w.adjoint();

  SignedSplit split = signed_split(m, s, tol);
  auto piece = [&](const Subspace& part) {
    const Matrix& vb = part.basis;
    Matrix yp = vb.adjoint() * (v * y);
    return Matrix(vb * vb.adjoint() + vb * yp * w.adjoint());
  };
  out.q_plus = piece(split.plus);
  out.q_minus = piece(split.minus);
  return out;
}

SchurProjectionE projection_formula_e(const Matrix& m, const Subspace& s,
                                      const Tolerances& tol) {
  BlockDecomposition blk = block_decompose(m, s, tol);
  ModulusSign ms = modulus_and_sign(blk.a, tol);
  Matrix root = psd_sqrt(ms.modulus, tol);
  if (!range_inclusion(blk.b, root, tol)) {
    throw Error(Status::NotWeaklyComplementable,
                "operator is not weakly complementable to the subspace");
  }
  Matrix root_pinv = pseudo_inverse(root, tol);
  Matrix f = root_pinv * blk.b;
  const Matrix& v = s.basis;
  const Matrix& w = blk.perp_basis;

  SchurProjectionE out;
  out.e = v * v.adjoint() + w * (f.adjoint() * ms.sign * root_pinv) * v.adjoint();
  // E |P_S m P_S|^(1/2) collapses to [[root, 0], [f* u, 0]].
  out.bounded_product =
      v * root * v.adjoint() + w * (f.adjoint() * ms.sign) * v.adjoint();
  return out;
}

bool is_positive_block(const BlockDecomposition& blocks, const Tolerances& tol) {
  const Eigen::Index k = blocks.a.rows();
  if (k > 0) {
    Matrix zero_k = Matrix::Zero(k, k);
    if (!order_leq(zero_k, blocks.a, tol)) return false;
  }
  Matrix root = psd_sqrt(blocks.a, tol);
  if (blocks.b.size() != 0 && !range_inclusion(blocks.b, root, tol)) {
    return false;
  }
  Matrix f = pseudo_inverse(root, tol) * blocks.b;
  Matrix t = blocks.c - f.adjoint() * f;
  const Eigen::Index nc = t.rows();
  if (nc == 0) return true;
  return order_leq(Matrix::Zero(nc, nc), t, tol);
}

}  // namespace kschur
