#include "completion.hpp"

#include "random.hpp"

namespace kschur {

namespace {

struct Factored {
  KreinFrames frames;
  PolarFactorization pf;  // of w11 in the (S, j1) space
};

Factored factor_corner(const IncompleteBlock& p, const Tolerances& tol) {
  p.validate(tol);
  Factored out;
  out.frames = krein_frames(p.sub, p.space, tol);
  KreinSpace inner{static_cast<int>(out.frames.v.cols()), out.frames.j1};
  out.pf = polar_factorization(p.w11, inner, tol);
  return out;
}

}  // namespace

void IncompleteBlock::validate(const Tolerances& tol) const {
  space.validate(tol);
  if (!is_regular_subspace(sub, space, tol)) {
    throw Error(Status::NotRegular, "completion needs a regular subspace");
  }
  const int k = sub.dim();
  const int m = space.dim - k;
  if (w11.rows() != k || w11.cols() != k) {
    throw Error(Status::ShapeMismatch, "corner block has wrong shape");
  }
  if (w12.rows() != k || w12.cols() != m) {
    throw Error(Status::ShapeMismatch, "coupling block has wrong shape");
  }
  KreinFrames fr = krein_frames(sub, space, tol);
  Matrix sharp = fr.j1 * w11.adjoint() * fr.j1;
  double scale = std::max(frobenius(w11), 1e-300);
  if (frobenius(w11 - sharp) > tol.eq_rel * scale) {
    throw Error(Status::NotKreinSelfadjoint,
                "corner block is not Krein-selfadjoint");
  }
}

int nu_minus_corner(const IncompleteBlock& p, const Tolerances& tol) {
  KreinFrames fr = krein_frames(p.sub, p.space, tol);
  Matrix face = fr.j1 * p.w11;
  face = (face + face.adjoint()) / 2.0;
  return inertia_of(face, tol).n_minus;
}

int nu_minus(const Matrix& w, const KreinSpace& space, const Tolerances& tol) {
  Matrix face = space.j * w;
  face = (face + face.adjoint()) / 2.0;
  return inertia_of(face, tol).n_minus;
}

bool completion_exists(const IncompleteBlock& p, const Tolerances& tol) {
  Factored f = factor_corner(p, tol);
  return range_inclusion(p.w12, f.pf.d, tol);
}

Matrix assemble_completion(const IncompleteBlock& p, const Matrix& w22,
                           const Tolerances& tol) {
  KreinFrames fr = krein_frames(p.sub, p.space, tol);
  const Eigen::Index k = fr.v.cols();
  const Eigen::Index m = fr.wb.cols();
  if (w22.rows() != m || w22.cols() != m) {
    throw Error(Status::ShapeMismatch, "free block has wrong shape");
  }
  Matrix coords(k + m, k + m);
  coords.topLeftCorner(k, k) = p.w11;
  coords.topRightCorner(k, m) = p.w12;
  coords.bottomLeftCorner(m, k) = fr.j2 * p.w12.adjoint() * fr.j1;
  coords.bottomRightCorner(m, m) = w22;

  Matrix u(p.space.dim, k + m);
  u << fr.v, fr.wb;
  Matrix jt = Matrix::Zero(k + m, k + m);
  jt.topLeftCorner(k, k) = fr.j1;
  jt.bottomRightCorner(m, m) = fr.j2;
  return u * coords * jt * u.adjoint() * p.space.j;
}

Completion minimal_completion(const IncompleteBlock& p, const Tolerances& tol) {
  Factored f = factor_corner(p, tol);
  if (!range_inclusion(p.w12, f.pf.d, tol)) {
    throw Error(Status::NoCompletion,
                "coupling block is not in the range of the corner factor");
  }
  Matrix y = pseudo_inverse(f.pf.d, tol) * p.w12;
  Completion out;
  out.w22_min = f.frames.j2 * y.adjoint() * f.pf.k_signature * y;
  out.w = assemble_completion(p, out.w22_min, tol);
  return out;
}

bool validate_completion(const IncompleteBlock& p, const Matrix& w22,
                         const Tolerances& tol) {
  Completion min = minimal_completion(p, tol);
  Matrix z = w22 - min.w22_min;
  const Eigen::Index m = z.rows();
  if (m == 0) return true;
  KreinFrames fr = krein_frames(p.sub, p.space, tol);
  Matrix sharp = fr.j2 * z.adjoint() * fr.j2;
  double scale = std::max({frobenius(z), frobenius(w22), 1e-300});
  if (frobenius(z - sharp) > tol.eq_rel * scale) return false;
  Matrix face = fr.j2 * z;
  face = (face + face.adjoint()) / 2.0;
  return order_leq(Matrix::Zero(m, m), face, tol);
}

std::vector<Matrix> sample_solution_set(const IncompleteBlock& p,
                                        std::uint64_t seed, int count,
                                        const Tolerances& tol) {
  Completion min = minimal_completion(p, tol);
  KreinFrames fr = krein_frames(p.sub, p.space, tol);
  const int m = static_cast<int>(fr.wb.cols());
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    Matrix g = random_complex_matrix(m, m, rng);
    Matrix z = fr.j2 * g.adjoint() * g;
    out.push_back(assemble_completion(p, min.w22_min + z, tol));
  }
  return out;
}

}  // namespace kschur
