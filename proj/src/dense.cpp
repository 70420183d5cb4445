#include "dense.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kschur {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::InvalidArgument: return "InvalidArgument";
    case Status::ShapeMismatch: return "ShapeMismatch";
    case Status::NotSquare: return "NotSquare";
    case Status::NotHermitian: return "NotHermitian";
    case Status::NotPsd: return "NotPSD";
    case Status::NotInRange: return "NotInRange";
    case Status::NotWeaklyComplementable: return "NotWeaklyComplementable";
    case Status::NotComplementable: return "NotComplementable";
    case Status::NotKreinSelfadjoint: return "NotKreinSelfadjoint";
    case Status::NotRegular: return "NotRegular";
    case Status::RangeNotRegular: return "RangeNotRegular";
    case Status::NullspaceNotRegular: return "NullspaceNotRegular";
    case Status::NoCompletion: return "NoCompletion";
    case Status::NotNonnegative: return "NotNonnegative";
    case Status::Internal: return "Internal";
  }
  return "Unknown";
}

double frobenius(const Matrix& m) { return m.norm(); }

bool approx_equal(const Matrix& x, const Matrix& y, const Tolerances& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  double scale = std::max(frobenius(x), frobenius(y));
  if (scale == 0.0) return true;
  return frobenius(x - y) <= tol.eq_rel * scale;
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(Status::NotSquare, "matrix must be square");
  }
}

void require_hermitian(const Matrix& m, const Tolerances& tol) {
  require_square(m);
  double scale = frobenius(m);
  if (frobenius(m - m.adjoint()) > tol.eq_rel * std::max(scale, 1e-300)) {
    throw Error(Status::NotHermitian, "matrix is not Hermitian");
  }
}

Matrix canonical_phase(Matrix m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index imax = 0;
    double amax = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double a = std::abs(m(i, j));
      if (a > amax) {
        amax = a;
        imax = i;
      }
    }
    if (amax > 0.0) {
      Complex phase = m(imax, j) / amax;
      m.col(j) /= phase;
    }
  }
  return m;
}

HermitianEig hermitian_eig(const Matrix& m, const Tolerances& tol) {
  require_hermitian(m, tol);
  const Eigen::Index n = m.rows();
  if (n == 0) return HermitianEig{RealVector(0), Matrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) {
    throw Error(Status::Internal, "Hermitian eigendecomposition failed");
  }
  HermitianEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen sorts ascending; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = es.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  out.vectors = canonical_phase(std::move(out.vectors));
  return out;
}

double eigen_zero_cutoff(const RealVector& values, const Tolerances& tol) {
  if (values.size() == 0) return 0.0;
  double amax = values.cwiseAbs().maxCoeff();
  return tol.rank_rel * amax * static_cast<double>(values.size());
}

int numerical_rank(const Matrix& m, const Tolerances& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cutoff = tol.rank_rel * sv(0) *
                  static_cast<double>(std::max(m.rows(), m.cols()));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return r;
}

Matrix pseudo_inverse(const Matrix& m, const Tolerances& tol) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() == 0
                      ? 0.0
                      : tol.rank_rel * sv(0) *
                            static_cast<double>(std::max(m.rows(), m.cols()));
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Matrix psd_sqrt(const Matrix& m, const Tolerances& tol) {
  HermitianEig eig = hermitian_eig(m, tol);
  if (eig.values.size() == 0) return m;
  double amax = eig.values.cwiseAbs().maxCoeff();
  if (eig.values.minCoeff() < -tol.order_rel * amax) {
    throw Error(Status::NotPsd, "matrix has a negative eigenvalue");
  }
  double band = eigen_zero_cutoff(eig.values, tol);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    roots(i) = (v <= band) ? 0.0 : std::sqrt(v);
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

ModulusSign modulus_and_sign(const Matrix& m, const Tolerances& tol) {
  HermitianEig eig = hermitian_eig(m, tol);
  const Eigen::Index n = eig.values.size();
  double band = eigen_zero_cutoff(eig.values, tol);
  RealVector mod(n), sgn(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = eig.values(i);
    if (std::abs(v) <= band) {
      mod(i) = 0.0;
      sgn(i) = 0.0;
    } else {
      mod(i) = std::abs(v);
      sgn(i) = v > 0.0 ? 1.0 : -1.0;
    }
  }
  ModulusSign out;
  out.modulus = eig.vectors * mod.asDiagonal() * eig.vectors.adjoint();
  out.sign = eig.vectors * sgn.asDiagonal() * eig.vectors.adjoint();
  return out;
}

namespace {

// Orthonormal basis of the numerical column space.
Matrix range_basis(const Matrix& y, const Tolerances& tol) {
  if (y.rows() == 0 || y.cols() == 0) return Matrix::Zero(y.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(y, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() == 0
                      ? 0.0
                      : tol.rank_rel * sv(0) *
                            static_cast<double>(std::max(y.rows(), y.cols()));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return svd.matrixU().leftCols(r);
}

}  // namespace

bool range_inclusion(const Matrix& z, const Matrix& y, const Tolerances& tol) {
  if (z.rows() != y.rows()) {
    throw Error(Status::ShapeMismatch, "range test needs equal row counts");
  }
  double zn = frobenius(z);
  if (zn == 0.0 || z.cols() == 0) return true;
  Matrix q = range_basis(y, tol);
  Matrix residual = z - q * (q.adjoint() * z);
  return frobenius(residual) <= tol.range_rel * zn;
}

Matrix reduced_solution(const Matrix& z, const Matrix& y, const Tolerances& tol) {
  if (!range_inclusion(z, y, tol)) {
    throw Error(Status::NotInRange, "right-hand side is not in the range");
  }
  return pseudo_inverse(y, tol) * z;
}

Inertia inertia_of(const Matrix& m, const Tolerances& tol) {
  HermitianEig eig = hermitian_eig(m, tol);
  double band = eigen_zero_cutoff(eig.values, tol);
  Inertia out;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double v = eig.values(i);
    if (v > band) {
      ++out.n_plus;
    } else if (v < -band) {
      ++out.n_minus;
    } else {
      ++out.n_zero;
    }
  }
  return out;
}

double order_slack(const Matrix& x, const Matrix& y) {
  Matrix diff = y - x;
  diff = (diff + diff.adjoint()) / 2.0;
  if (diff.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool order_leq(const Matrix& x, const Matrix& y, const Tolerances& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(Status::ShapeMismatch, "order test needs equal shapes");
  }
  require_square(x);
  double scale = std::max(frobenius(x), frobenius(y));
  return order_slack(x, y) >= -tol.order_rel * std::max(scale, 1e-300);
}

}  // namespace kschur
