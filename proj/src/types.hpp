#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace kschur {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Error categories shared by the C++ core and the C API.
enum class Status {
  Ok = 0,
  InvalidArgument,
  ShapeMismatch,
  NotSquare,
  NotHermitian,
  NotPsd,
  NotInRange,
  NotWeaklyComplementable,
  NotComplementable,
  NotKreinSelfadjoint,
  NotRegular,
  RangeNotRegular,
  NullspaceNotRegular,
  NoCompletion,
  NotNonnegative,
  Internal,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

/// Relative thresholds driving every rank, range, order and equality decision.
/// All identities in this library are scale covariant, so the thresholds are
/// relative; absolute tolerances are deliberately not supported.
struct Tolerances {
  double rank_rel = 1e-10;   // singular-value cutoff for numerical rank
  double range_rel = 1e-8;   // residual bound for range inclusion
  double order_rel = 1e-8;   // eigenvalue bound for semidefinite-order tests
  double eq_rel = 1e-8;      // Frobenius bound for matrix equality

  void validate() const {
    for (double v : {rank_rel, range_rel, order_rel, eq_rel}) {
      if (!(v > 0.0) || !(v < 1.0)) {
        throw Error(Status::InvalidArgument,
                    "tolerances must lie strictly between 0 and 1");
      }
    }
  }
};

/// Signature of a Hermitian matrix: eigenvalue counts by sign, with the zero
/// band decided by Tolerances::rank_rel.
struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  bool operator==(const Inertia&) const = default;
};

}  // namespace kschur
