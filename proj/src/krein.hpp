#pragma once

#include <cstdint>

#include "subspace.hpp"
#include "types.hpp"

namespace kschur {

/// A finite-dimensional Krein space: C^n carrying the indefinite metric
/// [x, y] = <Jx, y> next to the reference Hilbert metric, with J a Hermitian
/// involution (the signature operator).
struct KreinSpace {
  int dim = 0;
  Matrix j;

  static KreinSpace hilbert(int n) {
    return KreinSpace{n, Matrix::Identity(n, n)};
  }
  void validate(const Tolerances& tol) const;
};

/// Another signature operator of the same metric, together with the positive
/// definite factor alpha = j_alpha * j linking the two Hilbert products.
struct AltSignature {
  Matrix j_alpha;
  Matrix alpha;
};

/// Bognar-Kramli factorization w = d d^# with d injective from an inner
/// Krein space of dimension `rank` whose signature is k_signature.
struct PolarFactorization {
  Matrix d;            // n x rank
  Matrix k_signature;  // rank x rank, diagonal +-1
  int rank = 0;
};

/// J-orthonormal basis of a regular subspace: columns of `basis` span the
/// subspace and basis* J basis = `signature` (diagonal +-1).
struct KreinBasis {
  Matrix basis;
  Matrix signature;
};

Matrix krein_adjoint(const Matrix& t, const KreinSpace& space);

bool is_krein_selfadjoint(const Matrix& w, const KreinSpace& space,
                          const Tolerances& tol);

void require_krein_selfadjoint(const Matrix& w, const KreinSpace& space,
                               const Tolerances& tol);

/// A subspace is regular when the Gram matrix of its basis under J is
/// invertible; equivalently the space splits as S [+] S^[perp].
bool is_regular_subspace(const Subspace& s, const KreinSpace& space,
                         const Tolerances& tol);

KreinBasis krein_orthonormal_basis(const Subspace& s, const KreinSpace& space,
                                   const Tolerances& tol);

/// Orthogonal companion S^[perp] = (J S)^perp.
Subspace orthogonal_companion(const Subspace& s, const KreinSpace& space);

/// exp of a random Krein-skew matrix; satisfies T* J T = J.
Matrix random_j_unitary(const KreinSpace& space, std::uint64_t seed,
                        double scale);

AltSignature random_signature(const KreinSpace& space, std::uint64_t seed,
                              double scale);

PolarFactorization polar_factorization(const Matrix& w, const KreinSpace& space,
                                       const Tolerances& tol);

/// Inverse of the compressed inverse metric (V* alpha^{-1} V)^{-1}, the
/// positive definite operator carrying the alpha-metric on the subspace.
Matrix tilde_alpha(const Subspace& s, const AltSignature& alt,
                   const Tolerances& tol);

}  // namespace kschur
