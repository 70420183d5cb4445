#include "random.hpp"

#include <cmath>

namespace kschur {

Matrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                             std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(i, j) = Complex(dist(rng), dist(rng)) / std::sqrt(2.0);
    }
  }
  return out;
}

Matrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  Matrix a = random_complex_matrix(n, n, rng);
  return (a + a.adjoint()) / 2.0;
}

Matrix random_bounded_matrix(Eigen::Index rows, Eigen::Index cols,
                             double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double r = radius * std::sqrt(unit(rng));
      double t = angle(rng);
      out(i, j) = Complex(r * std::cos(t), r * std::sin(t));
    }
  }
  return out;
}

}  // namespace kschur
