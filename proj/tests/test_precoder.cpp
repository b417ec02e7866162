#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ftn/errors.hpp"
#include "ftn/parallel.hpp"
#include "ftn/precoder.hpp"
#include "ftn/rng.hpp"
#include "oracle_helpers.hpp"

using namespace ftn;
constexpr double kPi = std::numbers::pi;

namespace {
Eigen::VectorXd random_vector(int n, std::uint64_t seed) {
  GaussianSampler g(substream_engine(seed, 0));
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = g();
  return x;
}
}  // namespace

TEST_CASE("exact operator on the identity gramian") {
  const ToeplitzGramian id = build_sinc_gramian(1.0, 8);
  const PrecodingOperator op = inverse_sqrt_exact(id);
  CHECK(op.mode() == PrecodingOperator::Mode::ExactEigen);
  CHECK(op.min_eigenvalue() == doctest::Approx(1.0).epsilon(1e-12));
  const Eigen::VectorXd x = random_vector(8, 1);
  CHECK((op.apply(x) - x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((op.apply_sqrt(x) - x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("defining identity K H K = I") {
  const ToeplitzGramian g = build_rrc_gramian(1.0 / 1.22, 0.22, 64);
  const PrecodingOperator op = inverse_sqrt_exact(g);
  const Eigen::MatrixXd K = op.dense_inverse_sqrt();
  const Eigen::MatrixXd I = K * g.dense() * K;
  CHECK((I - Eigen::MatrixXd::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-8);
  // roundtrip form of the same identity
  const Eigen::VectorXd x = random_vector(64, 2);
  CHECK((op.apply(g.dense() * op.apply(x)) - x).cwiseAbs().maxCoeff() < 1e-8);
  // recorded conditioning matches the spectrum
  CHECK(op.min_eigenvalue() == doctest::Approx(eigenvalues(g)[0]).epsilon(1e-10));
}

TEST_CASE("ill-conditioned gramian raises with the offending eigenvalue") {
  const ToeplitzGramian g = build_rrc_gramian(0.5, 0.22, 256);  // (1+b)rho = 0.61
  CHECK_THROWS_AS((void)inverse_sqrt_exact(g, 1e-10), IllConditionedError);
  try {
    (void)inverse_sqrt_exact(g, 1e-10);
  } catch (const IllConditionedError& e) {
    CHECK(e.offending_eigenvalue() < 1e-10);
  }
}

TEST_CASE("apply is linear and validates dimensions") {
  const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, 32);
  const PrecodingOperator op = inverse_sqrt_exact(g);
  const Eigen::VectorXd x = random_vector(32, 3), y = random_vector(32, 4);
  const Eigen::VectorXd lhs = op.apply(2.0 * x - 3.0 * y);
  const Eigen::VectorXd rhs = 2.0 * op.apply(x) - 3.0 * op.apply(y);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(op.apply(Eigen::VectorXd::Zero(31)), std::invalid_argument);
}

TEST_CASE("denman-beavers oracle confirms the dense inverse square root") {
  const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, 64);
  const Eigen::MatrixXd K = inverse_sqrt_exact(g).dense_inverse_sqrt();
  const Eigen::MatrixXd K_db = oracle::denman_beavers_inverse_sqrt(g.dense());
  CHECK((K - K_db).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("circulant operator is the identity for the rho = 1 sinc symbol") {
  const ToeplitzGramian id = build_sinc_gramian(1.0, 16);
  const PrecodingOperator op = inverse_sqrt_circulant(id);
  CHECK(op.mode() == PrecodingOperator::Mode::CirculantFFT);
  const Eigen::VectorXd x = random_vector(16, 5);
  CHECK((op.apply(x) - x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("circulant operator requires a strictly positive symbol") {
  // at (1+beta) rho = 1 the symbol vanishes at the band edge
  const ToeplitzGramian g = build_rrc_gramian(1.0 / 1.22, 0.22, 64);
  CHECK_THROWS_AS((void)inverse_sqrt_circulant(g), IllConditionedError);
  ToeplitzGramian no_symbol = g;
  no_symbol.symbol.reset();
  CHECK_THROWS_AS((void)inverse_sqrt_circulant(no_symbol), std::invalid_argument);
}

TEST_CASE("circulant operator commutes with the cyclic shift") {
  const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, 64);
  const PrecodingOperator op = inverse_sqrt_circulant(g);
  const Eigen::VectorXd x = random_vector(64, 6);
  Eigen::VectorXd xs(64);
  for (int i = 0; i < 64; ++i) xs[i] = x[(i + 63) % 64];
  const Eigen::VectorXd lhs = op.apply(xs);
  const Eigen::VectorXd rhs_full = op.apply(x);
  Eigen::VectorXd rhs(64);
  for (int i = 0; i < 64; ++i) rhs[i] = rhs_full[(i + 63) % 64];
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("circulant agrees with the exact operator on interior vectors") {
  const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, 256);
  const PrecodingOperator exact = inverse_sqrt_exact(g);
  const PrecodingOperator circ = inverse_sqrt_circulant(g);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(256);
  GaussianSampler s(substream_engine(7, 0));
  for (int i = 64; i < 192; ++i) x[i] = s();
  const Eigen::VectorXd a = exact.apply(x);
  const Eigen::VectorXd b = circ.apply(x);
  CHECK((a - b).norm() / a.norm() < 1e-2);
}

TEST_CASE("coefficient-DFT circulant cross-checks the symbol-sampled one") {
  const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, 1024);
  const PrecodingOperator sym = inverse_sqrt_circulant(g);
  const PrecodingOperator coef = inverse_sqrt_circulant_from_coefficients(g);
  double diff = 0.0;
  for (int m = 0; m < 1024; ++m)
    diff = std::max(diff, std::abs(sym.spectral_multipliers()[m] -
                                   coef.spectral_multipliers()[m]));
  CHECK(diff < 1e-5);
}

TEST_CASE("circulant apply is safe and exact under concurrent use") {
  const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, 128);
  const PrecodingOperator op = inverse_sqrt_circulant(g);
  const int vectors = 32;
  std::vector<Eigen::VectorXd> inputs, expected(vectors), got(vectors);
  for (int i = 0; i < vectors; ++i) inputs.push_back(random_vector(128, 100 + i));
  for (int i = 0; i < vectors; ++i) expected[i] = op.apply(inputs[i]);
  const int before = ftn::max_threads();
  ftn::set_thread_count(4);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < vectors; ++i) got[i] = op.apply(inputs[i]);
  ftn::set_thread_count(before);
  for (int i = 0; i < vectors; ++i)
    CHECK((got[i].array() == expected[i].array()).all());
}

TEST_CASE("asymptotic toeplitz distance decreases with n") {
  double prev = 1e300;
  for (int n : {64, 256}) {
    const ToeplitzGramian g = build_rrc_gramian(0.9, 0.22, n);
    const Eigen::MatrixXd K = inverse_sqrt_exact(g).dense_inverse_sqrt();
    const double d = asymptotic_toeplitz_distance(K);
    CHECK(d < prev);
    prev = d;
  }
  // a Toeplitz matrix projects onto itself
  CHECK(asymptotic_toeplitz_distance(build_sinc_gramian(0.9, 16).dense()) < 1e-28);
}
