#pragma once

#include <cstdint>
#include <string>

#include "krein_schur.hpp"

namespace kschur {

/// Outcome of one randomized verification. Slacks are eigenvalues of
/// (candidate - bound) differences: nonnegative up to tolerance on every
/// trial means the claimed extremal property held. The verdict also folds in
/// the attainment residual when an exact optimizer was constructed.
struct Report {
  std::string name;
  bool applicable = true;      // false: preconditions ruled the check out
  std::string skip_reason;
  long trials = 0;
  double worst_slack = 0.0;    // signed; most negative slack observed
  double attainment_residual = 0.0;
  bool attainment_checked = false;
  double scale = 0.0;          // norm of the operator under test
  bool pass = false;
};

/// Random idempotent with prescribed nullspace, built as [[0, e], [0, I]]
/// in the (S, S-perp) frame with |e| entries bounded by `scale`.
Matrix sample_projection_with_nullspace(const Subspace& s, std::uint64_t seed,
                                        double scale);

/// Checks that the Schur complement is a lower bound of Q*BQ over sampled
/// projections with nullspace S, with exact attainment at the constructed
/// optimizer when B is S-complementable. Needs S to be B-nonnegative.
Report verify_inf_over_projections(const Matrix& b, const Subspace& s,
                                   int trials, std::uint64_t seed,
                                   const Tolerances& tol);

/// Checks the nested sup-inf bracket over pairs of projections with
/// nullspaces S-minus / S-plus, against the analytic inner infimum.
Report verify_supinf_minmax(const Matrix& b, const Subspace& s, int trials,
                            std::uint64_t seed, const Tolerances& tol);

/// Checks membership and maximality of the Schur complement in the order set
/// of operators below B with range in S-perp.
Report verify_order_set_max(const Matrix& b, const Subspace& s, int trials,
                            std::uint64_t seed, const Tolerances& tol);

struct KreinReportBundle {
  Report inf;
  Report supinf;
  Report order_max;
};

/// Runs the Hilbert oracles on JW; by the metric transfer identities the
/// slacks reported are exactly the Krein-order slacks for W.
KreinReportBundle verify_krein_identities(const Matrix& w, const Subspace& s,
                                          const KreinSpace& space, int trials,
                                          std::uint64_t seed,
                                          const Tolerances& tol);

/// Draws random alternative signature operators of the same metric and
/// checks that the weak-complementability verdict and the Schur complement
/// are unchanged, to rel_tol * |W|.
Report verify_signature_independence(const Matrix& w, const Subspace& s,
                                     const KreinSpace& space, int trials,
                                     std::uint64_t seed, double rel_tol,
                                     const Tolerances& tol);

}  // namespace kschur
