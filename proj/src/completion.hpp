#pragma once

#include <cstdint>
#include <vector>

#include "krein_schur.hpp"

namespace kschur {

/// Incomplete 2x2 block operator: the S-corner and the coupling block are
/// prescribed, the S^[perp]-corner is free. Blocks are given in the
/// J-orthonormal frames (j1, j2) produced by krein_frames.
struct IncompleteBlock {
  KreinSpace space;
  Subspace sub;  // regular
  Matrix w11;    // k x k, j1-Krein-selfadjoint
  Matrix w12;    // k x m

  void validate(const Tolerances& tol) const;
};

/// Negative squares of the prescribed corner: negative inertia of j1 * w11.
int nu_minus_corner(const IncompleteBlock& p, const Tolerances& tol);

/// Negative squares of a full operator: negative inertia of J * w.
int nu_minus(const Matrix& w, const KreinSpace& space, const Tolerances& tol);

/// A completion with the same number of negative squares as the corner
/// exists iff R(w12) lies in the range of the polar factor of w11.
bool completion_exists(const IncompleteBlock& p, const Tolerances& tol);

struct Completion {
  Matrix w22_min;  // m x m block, the minimum of the solution set
  Matrix w;        // full operator in ambient coordinates
};

Completion minimal_completion(const IncompleteBlock& p, const Tolerances& tol);

/// Assembles the completion with the given free block, in ambient coordinates.
Matrix assemble_completion(const IncompleteBlock& p, const Matrix& w22,
                           const Tolerances& tol);

/// True iff w22 = w22_min + z with z Krein-selfadjoint and Krein-positive
/// in the j2 metric; such completions are exactly the inertia-preserving ones.
bool validate_completion(const IncompleteBlock& p, const Matrix& w22,
                         const Tolerances& tol);

/// Random members of the solution set; every returned operator passes
/// validate_completion. Deterministic per seed.
std::vector<Matrix> sample_solution_set(const IncompleteBlock& p,
                                        std::uint64_t seed, int count,
                                        const Tolerances& tol);

}  // namespace kschur
