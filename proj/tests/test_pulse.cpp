#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "ftn/pulse.hpp"
#include "ftn/quadrature.hpp"
#include "oracle_helpers.hpp"

using namespace ftn;
namespace fz = oracle::frozen;

TEST_CASE("sinc pulse point values") {
  CHECK(eval_sinc(0.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(eval_sinc(1.0, 0.5)) < 1e-15);
  CHECK(eval_sinc(0.25, 0.5) == doctest::Approx(fz::kSinc025).epsilon(1e-13));
  // series branch is continuous with the direct branch
  CHECK(normalized_sinc(1e-4 - 1e-12) ==
        doctest::Approx(normalized_sinc(1e-4 + 1e-12)).epsilon(1e-12));
}

TEST_CASE("sinc pulse rejects bad arguments") {
  CHECK_THROWS_AS(eval_sinc(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_sinc(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_sinc(std::numeric_limits<double>::quiet_NaN(), 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_sinc(std::numeric_limits<double>::infinity(), 0.5),
                  std::invalid_argument);
}

TEST_CASE("rrc pulse limits at the removable singularities") {
  CHECK(eval_rrc(0.0, 0.22, 1.0) == doctest::Approx(fz::kRrcPeak).epsilon(1e-13));
  const double ts = 1.0 / (4.0 * 0.22);
  CHECK(eval_rrc(ts, 0.22, 1.0) == doctest::Approx(fz::kRrcSingular).epsilon(1e-11));
  // two-sided numeric limit agrees with the series value
  const double lim = 0.5 * (eval_rrc(ts + 1e-6, 0.22, 1.0) + eval_rrc(ts - 1e-6, 0.22, 1.0));
  CHECK(eval_rrc(ts, 0.22, 1.0) == doctest::Approx(lim).epsilon(1e-7));
  // continuity across the series/direct switch at |t - ts| = 1e-4
  for (double side : {-1.0, 1.0}) {
    const double a = eval_rrc(ts + side * (1e-4 - 1e-10), 0.22, 1.0);
    const double b = eval_rrc(ts + side * (1e-4 + 1e-10), 0.22, 1.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
  }
  // other roll-offs: singular values frozen from two-sided numeric limits
  CHECK(eval_rrc(0.25, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(eval_rrc(0.5, 0.5, 1.0) == doctest::Approx(0.578632469636).epsilon(1e-9));
}

TEST_CASE("rrc pulse is even and degenerates to the sinc at beta = 0") {
  for (double t : {0.3, 0.75, 1.1363636363636365, 2.4, 17.0}) {
    CHECK(eval_rrc(t, 0.22, 1.0) == eval_rrc(-t, 0.22, 1.0));
    CHECK(eval_sinc(t, 0.5) == eval_sinc(-t, 0.5));
    CHECK(eval_rrc(t, 0.0, 2.0) == doctest::Approx(eval_sinc(t, 0.25)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(eval_rrc(0.0, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_rrc(0.0, 0.22, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_rrc(std::numeric_limits<double>::quiet_NaN(), 0.22, 1.0),
                  std::invalid_argument);
}

TEST_CASE("rrc unit energy by windowed quadrature plus tail bound") {
  const PulseShape p = PulseShape::root_raised_cosine(0.22, 1.0);
  const double energy = pulse_inner_product(p, 0.0, 0.0, Interval{-200.0, 200.0});
  CHECK(energy == doctest::Approx(1.0).epsilon(1e-8));  // tail below 1e-8
}

TEST_CASE("rrc spectrum branches") {
  CHECK(rrc_spectrum(0.0, 0.22, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rrc_spectrum(2.0 * std::numbers::pi, 0.22, 1.0) == 0.0);
  CHECK(rrc_spectrum(std::numbers::pi, 0.22, 1.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  // continuity at the branch edges
  const double lo = (1.0 - 0.22) * std::numbers::pi;
  const double hi = (1.0 + 0.22) * std::numbers::pi;
  CHECK(rrc_spectrum(lo - 1e-12, 0.22, 1.0) ==
        doctest::Approx(rrc_spectrum(lo + 1e-12, 0.22, 1.0)).epsilon(1e-6));
  CHECK(rrc_spectrum(hi - 1e-9, 0.22, 1.0) < 1e-4);
}

TEST_CASE("rrc spectrum converges pointwise to the rect as beta -> 0") {
  const double w = 0.95 * std::numbers::pi;  // T = 1
  double prev = std::numeric_limits<double>::infinity();
  for (double beta : {0.2, 0.1, 0.05}) {
    const double diff = std::abs(rrc_spectrum(w, beta, 1.0) - 1.0);
    CHECK(diff <= prev + 1e-15);
    prev = diff;
  }
  CHECK(rrc_spectrum(w, 0.05, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("full-line inner products: unit energy, orthogonality, closed form") {
  const PulseShape p = PulseShape::sinc(0.5);
  CHECK(pulse_inner_product(p, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pulse_inner_product(p, 0.0, 1.0) == doctest::Approx(0.0).scale(1).epsilon(1e-10));
  CHECK(pulse_inner_product(p, 0.0, 0.9) == doctest::Approx(fz::kSinc09).epsilon(1e-9));
}

TEST_CASE("inner products depend only on the shift difference") {
  for (const PulseShape& p :
       {PulseShape::sinc(0.5), PulseShape::root_raised_cosine(0.22, 1.0)}) {
    const double base = pulse_inner_product(p, 0.0, 0.7);
    for (double s : {-3.2, 1.5, 10.0})
      CHECK(pulse_inner_product(p, s, 0.7 + s) == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("spectrum magnitude is invariant under time shifts") {
  // numeric transform of the shifted pulse at sampled omega
  const PulseShape p = PulseShape::root_raised_cosine(0.22, 1.0);
  const double L = 200.0;
  const double tau = 0.6;
  for (double w : {0.5, 2.0, 3.0}) {
    auto re = [&](double t) { return p(t - tau) * std::cos(w * t); };
    auto im = [&](double t) { return p(t - tau) * std::sin(w * t); };
    const double x = quad::integrate(re, -L, L + tau, 1e-9).value;
    const double y = quad::integrate(im, -L, L + tau, 1e-9).value;
    CHECK(std::hypot(x, y) == doctest::Approx(p.spectrum(w)).epsilon(2e-3));
  }
}

TEST_CASE("time shift grid invariants") {
  const TimeShiftGrid g = TimeShiftGrid::from_nyquist_span(0.81, 20, 1.0);
  CHECK(g.count_m == 24);
  CHECK(g.shift_step == doctest::Approx(0.81));
  CHECK(g.shift(0) == 0.0);
  CHECK(g.shift(3) == doctest::Approx(3 * 0.81));
  CHECK(TimeShiftGrid::from_nyquist_span(0.25, 4, 1.0).count_m == 16);
  CHECK(TimeShiftGrid::from_nyquist_span(0.1, 4, 1.0).count_m == 40);
  CHECK_THROWS_AS(TimeShiftGrid(1.2, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(TimeShiftGrid(0.5, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(TimeShiftGrid(0.5, 4, -1.0), std::invalid_argument);
}
