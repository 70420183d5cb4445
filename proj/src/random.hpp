#pragma once

#include <cstdint>
#include <random>

#include "types.hpp"

namespace kschur {

/// Stateless per-trial seed derivation (splitmix64 step) so trials are
/// independent and reproducible under any execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Unit-scale complex Gaussian entries.
Matrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                             std::mt19937_64& rng);

Matrix random_hermitian(Eigen::Index n, std::mt19937_64& rng);

/// Complex entries uniform on the disc of the given radius.
Matrix random_bounded_matrix(Eigen::Index rows, Eigen::Index cols,
                             double radius, std::mt19937_64& rng);

}  // namespace kschur
