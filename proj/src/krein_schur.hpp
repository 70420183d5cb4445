#pragma once

#include "hilbert.hpp"
#include "krein.hpp"

namespace kschur {

/// J-orthonormal frames of a regular subspace and its orthogonal companion.
/// Columns of v span S with v* J v = j1; columns of wb span S^[perp] with
/// wb* J wb = j2. [v wb] is invertible with inverse diag(j1,j2) [v wb]* J.
struct KreinFrames {
  Matrix v;
  Matrix j1;
  Matrix wb;
  Matrix j2;
};

KreinFrames krein_frames(const Subspace& s, const KreinSpace& space,
                         const Tolerances& tol);

/// Block matrix of a Krein-selfadjoint operator in the frames above.
struct KreinBlocks {
  KreinFrames frames;
  Matrix w11;
  Matrix w12;
  Matrix w22;
};

KreinBlocks krein_block_decompose(const Matrix& w, const Subspace& s,
                                  const KreinSpace& space,
                                  const Tolerances& tol);

/// Assembles blockdiag(0, x22) back to ambient coordinates.
Matrix assemble_tail_block(const KreinFrames& frames, const Matrix& x22,
                           const KreinSpace& space);

bool is_weakly_complementable_krein(const Matrix& w, const Subspace& s,
                                    const KreinSpace& space,
                                    const Tolerances& tol);
bool is_complementable_krein(const Matrix& w, const Subspace& s,
                             const KreinSpace& space, const Tolerances& tol);

/// Schur complement in the Krein metric: J (JW)_{/S}. Independent of which
/// signature operator of the metric is used.
Matrix krein_schur_complement(const Matrix& w, const Subspace& s,
                              const KreinSpace& space, const Tolerances& tol);

Matrix krein_compression(const Matrix& w, const Subspace& s,
                         const KreinSpace& space, const Tolerances& tol);

/// Regular-subspace route: polar-factorize the S-block as d d^# and quotient
/// w22 - y^# y with y solving w12 = d x.
Matrix krein_schur_regular(const Matrix& w, const Subspace& s,
                           const KreinSpace& space, const Tolerances& tol);

/// Projection Q onto S with WQ = Q^# W; then W(I-Q) is the Schur complement.
Matrix krein_projection_element(const Matrix& w, const Subspace& s,
                                const KreinSpace& space, const Tolerances& tol);

/// Quotient through the Krein Moore-Penrose inverse of the S-block:
/// w22 - w12^# w11^dagger w12. Needs the closure of R(w11) and N(w11) to be
/// regular subspaces of S.
Matrix mary_schur(const Matrix& w, const Subspace& s, const KreinSpace& space,
                  const Tolerances& tol);

/// Quotient through a global factorization W = D D^#, computed via the
/// bounded identity P_{M // M^[perp]} D^# = D^# Q.
Matrix mmp_schur(const Matrix& w, const Subspace& s, const KreinSpace& space,
                 const Tolerances& tol);

/// Krein Moore-Penrose inverse on a signature-j1 space: the generalized
/// inverse whose defect projections are j1-selfadjoint. Exposed for tests.
Matrix krein_pseudo_inverse(const Matrix& m, const Matrix& j1,
                            const Tolerances& tol);

/// Same predicates and Schur complement computed entirely in the Hilbert
/// space generated by an alternative signature operator of the same metric.
/// Used to exercise signature independence.
bool is_weakly_complementable_in_metric(const Matrix& w, const Subspace& s,
                                        const KreinSpace& space,
                                        const AltSignature& alt,
                                        const Tolerances& tol);
Matrix krein_schur_in_metric(const Matrix& w, const Subspace& s,
                             const KreinSpace& space, const AltSignature& alt,
                             const Tolerances& tol);

}  // namespace kschur
