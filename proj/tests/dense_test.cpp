#include "doctest.h"
#include "testutil.hpp"

using namespace ktest;

namespace {
const Tolerances kTol;
}

TEST_CASE("hermitian_eig on diagonal and exchange matrices") {
  auto eig = hermitian_eig(diag({2, -3, 0}), kTol);
  CHECK(eig.values(0) == doctest::Approx(2.0));
  CHECK(eig.values(1) == doctest::Approx(0.0));
  CHECK(eig.values(2) == doctest::Approx(-3.0));
  // Diagonal input: eigenvectors are (signed) identity columns.
  for (int j = 0; j < 3; ++j) {
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(eig.vectors(i, j)) > 1e-12) ++nonzero;
    }
    CHECK(nonzero == 1);
  }

  Matrix x = mk({{0, 1}, {1, 0}});
  auto flip = hermitian_eig(x, kTol);
  CHECK(flip.values(0) == doctest::Approx(1.0));
  CHECK(flip.values(1) == doctest::Approx(-1.0));
  Matrix rebuilt = flip.vectors *
                   flip.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                   flip.vectors.adjoint();
  CHECK(close(rebuilt, x));

  auto id = hermitian_eig(Matrix::Identity(4, 4), kTol);
  CHECK(close(id.vectors, Matrix::Identity(4, 4)));

  CHECK_THROWS_AS(hermitian_eig(mk({{0, 1}, {0, 0}}), kTol), Error);
  CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3), kTol), Error);
}

TEST_CASE("numerical_rank with relative cutoff") {
  CHECK(numerical_rank(Matrix::Zero(3, 3), kTol) == 0);
  CHECK(numerical_rank(diag({1, 1e-15}), kTol) == 1);
  CHECK(numerical_rank(mk({{1, 2}, {2, 4}}), kTol) == 1);
  CHECK(numerical_rank(Matrix::Identity(5, 5), kTol) == 5);
}

TEST_CASE("pseudo_inverse basics and Penrose identities") {
  CHECK(close(pseudo_inverse(diag({2, 0}), kTol), diag({0.5, 0})));
  CHECK(close(pseudo_inverse(Matrix::Identity(3, 3), kTol),
              Matrix::Identity(3, 3)));
  CHECK(close(pseudo_inverse(mk({{1}, {1}}), kTol), mk({{0.5, 0.5}})));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = 2 + static_cast<int>(rng() % 5);
    int r = 1 + static_cast<int>(rng() % std::min(n, m));
    Matrix a = rnd_mat(n, r, rng) * rnd_mat(r, m, rng);
    Matrix p = pseudo_inverse(a, kTol);
    CHECK(close(a * p * a, a, 1e-10));
    CHECK(close(p * a * p, p, 1e-10));
    CHECK(close(Matrix(a * p), Matrix((a * p).adjoint()), 1e-10));
    CHECK(close(Matrix(p * a), Matrix((p * a).adjoint()), 1e-10));
  }
}

TEST_CASE("psd_sqrt squares back and rejects indefinite input") {
  CHECK(close(psd_sqrt(diag({4, 9}), kTol), diag({2, 3})));
  CHECK(close(psd_sqrt(Matrix::Zero(3, 3), kTol), Matrix::Zero(3, 3)));
  Matrix m = mk({{2, 1}, {1, 2}});
  Matrix r = psd_sqrt(m, kTol);
  CHECK(close(r * r, m));
  CHECK_THROWS_AS(psd_sqrt(diag({1, -1}), kTol), Error);
}

TEST_CASE("modulus_and_sign polar pieces") {
  auto ms = modulus_and_sign(diag({-1, 3}), kTol);
  CHECK(close(ms.modulus, diag({1, 3})));
  CHECK(close(ms.sign, diag({-1, 1})));

  auto zero = modulus_and_sign(Matrix::Zero(2, 2), kTol);
  CHECK(close(zero.modulus, Matrix::Zero(2, 2)));
  CHECK(close(zero.sign, Matrix::Zero(2, 2)));

  Matrix x = mk({{0, 1}, {1, 0}});
  auto flip = modulus_and_sign(x, kTol);
  CHECK(close(flip.modulus, Matrix::Identity(2, 2)));
  CHECK(close(flip.sign, x));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Matrix h = rnd_hermitian(n, rng);
    auto parts = modulus_and_sign(h, kTol);
    CHECK(close(parts.modulus * parts.modulus, h * h, 1e-9));
    CHECK(close(parts.sign * parts.modulus, h, 1e-9));
    CHECK(close(parts.modulus * parts.sign, h, 1e-9));
    CHECK(close(parts.sign, parts.sign.adjoint()));
    CHECK(close(parts.sign * parts.sign * parts.sign, parts.sign, 1e-9));
  }
}

TEST_CASE("range_inclusion residual test") {
  CHECK(range_inclusion(mk({{1}, {0}}), diag({1, 0}), kTol));
  CHECK_FALSE(range_inclusion(mk({{0}, {1}}), diag({1, 0}), kTol));
  CHECK(range_inclusion(mk({{1}, {1}}), mk({{1, 0}, {1, 0}}), kTol));
  CHECK(range_inclusion(Matrix::Zero(3, 2), Matrix::Zero(3, 1), kTol));
  CHECK_THROWS_AS(range_inclusion(Matrix::Zero(3, 1), Matrix::Zero(2, 1), kTol),
                  Error);
}

TEST_CASE("reduced_solution solves and stays in the coimage") {
  CHECK(close(reduced_solution(mk({{1}}), mk({{2}}), kTol), mk({{0.5}})));
  CHECK(close(reduced_solution(mk({{1}, {0}}), diag({1, 0}), kTol),
              mk({{1}, {0}})));
  CHECK_THROWS_AS(reduced_solution(mk({{0}, {1}}), diag({1, 0}), kTol), Error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int r = 1 + static_cast<int>(rng() % n);
    Matrix y = rnd_mat(n, r, rng) * rnd_mat(r, n, rng);
    Matrix z = y * rnd_mat(n, 2, rng);
    Matrix d0 = reduced_solution(z, y, kTol);
    CHECK(close(y * d0, z, 1e-8));
    // Columns of the reduced solution live in the numerical row space of y.
    Eigen::JacobiSVD<Matrix> svd(y, Eigen::ComputeThinV);
    int rank = numerical_rank(y, kTol);
    Matrix v = svd.matrixV().leftCols(rank);
    Matrix residual = d0 - v * (v.adjoint() * d0);
    CHECK(residual.norm() <= kTol.range_rel * std::max(d0.norm(), 1e-12));
  }
}

TEST_CASE("inertia counts and Sylvester invariance") {
  Inertia i1 = inertia_of(diag({2, -3, 0}), kTol);
  CHECK(i1 == Inertia{1, 1, 1});
  CHECK(inertia_of(Matrix::Zero(4, 4), kTol) == Inertia{0, 4, 0});
  CHECK(inertia_of(mk({{1, 2}, {2, 1}}), kTol) == Inertia{1, 0, 1});

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_int_distribution<int> kind(0, 2);
    RealVector lambda(n);
    for (int i = 0; i < n; ++i) {
      int k = kind(rng);
      lambda(i) = k == 0 ? mag(rng) : (k == 1 ? -mag(rng) : 0.0);
    }
    Matrix u = rnd_unitary(n, rng);
    Matrix m = u * lambda.asDiagonal() * u.adjoint();
    m = (m + m.adjoint()) / 2.0;
    Matrix g = rnd_mat(n, n, rng) + 3.0 * Matrix::Identity(n, n);
    Matrix congruent = g.adjoint() * m * g;
    congruent = (congruent + congruent.adjoint()) / 2.0;
    CHECK(inertia_of(congruent, kTol) == inertia_of(m, kTol));
  }
}

TEST_CASE("order_leq by smallest eigenvalue of the difference") {
  CHECK(order_leq(Matrix::Zero(2, 2), Matrix::Identity(2, 2), kTol));
  CHECK_FALSE(order_leq(diag({1, 0}), diag({0, 1}), kTol));
  CHECK(order_leq(mk({{1, 1}, {1, 1}}), 2.0 * Matrix::Identity(2, 2), kTol));
  CHECK_THROWS_AS(order_leq(Matrix::Zero(2, 2), Matrix::Zero(3, 3), kTol),
                  Error);
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Matrix h = rnd_hermitian(n, rng);
    auto eig = hermitian_eig(h, kTol);
    Matrix rebuilt = eig.vectors *
                     eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                     eig.vectors.adjoint();
    CHECK(close(rebuilt, h, 1e-10));
    CHECK(close(eig.vectors.adjoint() * eig.vectors, Matrix::Identity(n, n),
                1e-10));
    for (int i = 0; i + 1 < n; ++i) CHECK(eig.values(i) >= eig.values(i + 1));
  }
}
