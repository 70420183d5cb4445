#pragma once

#include "subspace.hpp"
#include "types.hpp"

namespace kschur {

/// 2x2 block data of a Hermitian matrix relative to a subspace:
///   [ a  b ]   frame (sub.basis, perp_basis)
///   [ b* c ]
struct BlockDecomposition {
  Subspace sub;
  Matrix a;           // k x k Hermitian
  Matrix b;           // k x (n-k)
  Matrix c;           // (n-k) x (n-k) Hermitian
  Matrix perp_basis;  // n x (n-k), completes sub.basis to a unitary

  Matrix reassemble() const;
};

/// Splitting of S into a B-nonnegative and a B-nonpositive part, mutually
/// orthogonal and B-orthogonal.
struct SignedSplit {
  Subspace plus;
  Subspace minus;
};

/// Where eigenvalues inside the numerical zero band of the compressed matrix
/// are assigned. The Schur complement is invariant under this choice.
enum class ZeroBandPolicy { ToPlus, ToMinus };

struct ThreeTermDecomposition {
  Matrix b1;  // S inside N(b1)
  Matrix b2;  // PSD, S_minus inside N(b2)
  Matrix b3;  // PSD, S_plus inside N(b3)
};

/// Projection onto S commuting with B in the adjoint sense (BQ = Q*B),
/// together with its constituents onto the signed parts.
struct BProjection {
  Matrix q;
  Matrix q_plus;
  Matrix q_minus;
};

/// Idempotent E with N(E) = S-perp and (I-E)B equal to the Schur complement,
/// plus the bounded product E |P_S B P_S|^(1/2).
struct SchurProjectionE {
  Matrix e;
  Matrix bounded_product;
};

BlockDecomposition block_decompose(const Matrix& b, const Subspace& s,
                                   const Tolerances& tol);

bool is_weakly_complementable(const Matrix& b, const Subspace& s,
                              const Tolerances& tol);
bool is_complementable(const Matrix& b, const Subspace& s,
                       const Tolerances& tol);

/// Schur complement (shorted operator) of b to s, returned in ambient
/// coordinates: the block quotient c - f* u f with f the reduced solution of
/// b = |a|^(1/2) x and u the sign factor of a.
Matrix schur_complement(const Matrix& b, const Subspace& s,
                        const Tolerances& tol);

Matrix compression(const Matrix& b, const Subspace& s, const Tolerances& tol);

SignedSplit signed_split(const Matrix& b, const Subspace& s,
                         const Tolerances& tol,
                         ZeroBandPolicy policy = ZeroBandPolicy::ToPlus);

ThreeTermDecomposition three_term_decomposition(const Matrix& b,
                                                const Subspace& s,
                                                const Tolerances& tol);

BProjection b_selfadjoint_projection(const Matrix& b, const Subspace& s,
                                     const Tolerances& tol);

SchurProjectionE projection_formula_e(const Matrix& b, const Subspace& s,
                                      const Tolerances& tol);

/// Positivity of the reassembled matrix decided from the blocks alone:
/// a PSD, R(b) in R(a^(1/2)), and c - f*f PSD.
bool is_positive_block(const BlockDecomposition& blocks, const Tolerances& tol);

}  // namespace kschur
