#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftn/errors.hpp"
#include "ftn/quadrature.hpp"

using namespace ftn;

TEST_CASE("gauss-legendre rule matches tabulated 5-point values") {
  const auto& r = quad::gauss_legendre(5);
  REQUIRE(r.nodes.size() == 5);
  CHECK(r.nodes[2] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.nodes[3] == doctest::Approx(0.5384693101056831).epsilon(1e-14));
  CHECK(r.nodes[4] == doctest::Approx(0.9061798459386640).epsilon(1e-14));
  CHECK(r.weights[2] == doctest::Approx(0.5688888888888889).epsilon(1e-14));
  CHECK(r.weights[3] == doctest::Approx(0.4786286704993665).epsilon(1e-14));
  CHECK(r.weights[4] == doctest::Approx(0.2369268850561891).epsilon(1e-14));
  double sum = 0.0;
  for (double w : r.weights) sum += w;
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("adaptive integration hits closed forms") {
  auto sq = [](double x) { return x * x; };
  CHECK(quad::integrate(sq, 0.0, 1.0).value == doctest::Approx(1.0 / 3).epsilon(1e-14));

  auto s = [](double x) { return std::sin(x); };
  CHECK(quad::integrate(s, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-13));

  // oscillatory integrand forces bisection
  auto osc = [](double x) { return std::cos(40.0 * x); };
  const double expected = std::sin(40.0 * 8.0) / 40.0;
  CHECK(quad::integrate(osc, 0.0, 8.0).value == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("adaptive integration reports failure when depth is exhausted") {
  auto spike = [](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); };
  CHECK_THROWS_AS(quad::integrate(spike, 0.0, 1.0, 1e-14, 4), NumericFailure);
}

TEST_CASE("composite rule agrees with the adaptive one on smooth integrands") {
  auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const double adaptive = quad::integrate(f, 0.0, 5.0).value;
  CHECK(quad::integrate_composite(f, 0.0, 5.0, 0.5) ==
        doctest::Approx(adaptive).epsilon(1e-12));

  std::vector<double> nodes, weights;
  quad::composite_nodes(0.0, 5.0, 0.5, 16, nodes, weights);
  CHECK(nodes.size() == 10 * 16);
  double acc = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  CHECK(acc == doctest::Approx(adaptive).epsilon(1e-12));
}

TEST_CASE("invalid quadrature arguments are rejected") {
  CHECK_THROWS_AS(quad::gauss_legendre(1), std::invalid_argument);
  auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS(quad::integrate(f, 1.0, 0.0), std::invalid_argument);
  CHECK(quad::integrate(f, 2.0, 2.0).value == 0.0);
}
