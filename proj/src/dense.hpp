#pragma once

#include "types.hpp"

namespace kschur {

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending,
/// eigenvector columns unitary and phase-normalized.
struct HermitianEig {
  RealVector values;
  Matrix vectors;
};

/// Polar pieces of a Hermitian matrix: modulus = V|L|V*, sign = V sgn(L)V*
/// with sgn(0) = 0, so the sign factor has the same nullspace as the input.
struct ModulusSign {
  Matrix modulus;
  Matrix sign;
};

double frobenius(const Matrix& m);
bool approx_equal(const Matrix& x, const Matrix& y, const Tolerances& tol);

void require_square(const Matrix& m);
void require_hermitian(const Matrix& m, const Tolerances& tol);

/// Multiplies each column by a unit phase so its largest entry is real
/// positive. Keeps decomposition outputs reproducible across runs.
Matrix canonical_phase(Matrix m);

HermitianEig hermitian_eig(const Matrix& m, const Tolerances& tol);

/// Eigenvalues with |lambda| below rank_rel * max|lambda| * dim are treated
/// as zero. Shared by the modulus, sign, sqrt and inertia routines so the
/// zero band is decided once.
double eigen_zero_cutoff(const RealVector& values, const Tolerances& tol);

int numerical_rank(const Matrix& m, const Tolerances& tol);
Matrix pseudo_inverse(const Matrix& m, const Tolerances& tol);
Matrix psd_sqrt(const Matrix& m, const Tolerances& tol);
ModulusSign modulus_and_sign(const Matrix& m, const Tolerances& tol);

/// True iff the columns of z lie in the numerical column space of y.
bool range_inclusion(const Matrix& z, const Matrix& y, const Tolerances& tol);

/// Reduced solution d0 of z = y x: satisfies y d0 = z, columns of d0 in the
/// numerical row space of y, N(z) contained in N(d0). Throws NotInRange when
/// the range inclusion fails.
Matrix reduced_solution(const Matrix& z, const Matrix& y, const Tolerances& tol);

Inertia inertia_of(const Matrix& m, const Tolerances& tol);

/// x <= y in the semidefinite order, up to order_rel slack.
bool order_leq(const Matrix& x, const Matrix& y, const Tolerances& tol);

/// Smallest eigenvalue of the Hermitian part of (y - x); the signed slack of
/// the order test.
double order_slack(const Matrix& x, const Matrix& y);

}  // namespace kschur
