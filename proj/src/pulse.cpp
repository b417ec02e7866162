#include "ftn/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftn/quadrature.hpp"

namespace ftn {

namespace {
constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}
}  // namespace

double normalized_sinc(double x) {
  const double px = kPi * x;
  if (std::abs(x) < 1e-4) {
    const double p2 = px * px;
    return 1.0 - p2 / 6.0 * (1.0 - p2 / 20.0 * (1.0 - p2 / 42.0));
  }
  return std::sin(px) / px;
}

double eval_sinc(double t, double W) {
  require_finite(t, "t");
  if (!std::isfinite(W) || W <= 0.0) throw std::invalid_argument("eval_sinc: W must be > 0");
  return std::sqrt(2.0 * W) * normalized_sinc(2.0 * W * t);
}

namespace {

// Ratio of the root-raised-cosine numerator and denominator near the removable
// singularity x0 = 1/(4 beta), from the fourth-order Taylor expansion of the
// numerator N(x) = cos(a pi x) + sin(b pi x)/(4 beta x) around x0 and the exact
// factorization D(x0+u) = -8 beta u (1 + 2 beta u).
double rrc_ratio_near_singularity(double u, double beta) {
  const double x0 = 1.0 / (4.0 * beta);
  const double a = 1.0 + beta;
  const double b = 1.0 - beta;
  const double ca = a * kPi;
  const double c = b * kPi;
  const double cos_a = std::cos(ca * x0);
  const double sin_a = std::sin(ca * x0);
  const double s0 = std::sin(c * x0);
  const double s1 = c * std::cos(c * x0);
  const double s2 = -c * c * s0;
  const double s3 = -c * c * s1;
  const double s4 = c * c * c * c * s0;
  const double q = 1.0 / (4.0 * beta);
  const double ix = 1.0 / x0;
  const double d1 = q * (s1 * ix - s0 * ix * ix);
  const double d2 = q * (s2 * ix - 2.0 * s1 * ix * ix + 2.0 * s0 * ix * ix * ix);
  const double d3 = q * (s3 * ix - 3.0 * s2 * ix * ix + 6.0 * s1 * ix * ix * ix -
                         6.0 * s0 * ix * ix * ix * ix);
  const double d4 = q * (s4 * ix - 4.0 * s3 * ix * ix + 12.0 * s2 * ix * ix * ix -
                         24.0 * s1 * ix * ix * ix * ix +
                         24.0 * s0 * ix * ix * ix * ix * ix);
  const double n1 = -ca * sin_a + d1;
  const double n2 = (-ca * ca * cos_a + d2) / 2.0;
  const double n3 = (ca * ca * ca * sin_a + d3) / 6.0;
  const double n4 = (ca * ca * ca * ca * cos_a + d4) / 24.0;
  const double b2 = 2.0 * beta;
  const double c0 = n1;
  const double c1 = n2 - b2 * n1;
  const double c2 = n3 - b2 * n2 + b2 * b2 * n1;
  const double c3 = n4 - b2 * n3 + b2 * b2 * n2 - b2 * b2 * b2 * n1;
  return -(c0 + u * (c1 + u * (c2 + u * c3))) / (8.0 * beta);
}

}  // namespace

double eval_rrc(double t, double beta, double T) {
  require_finite(t, "t");
  if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("eval_rrc: beta must be in [0,1]");
  if (!std::isfinite(T) || T <= 0.0) throw std::invalid_argument("eval_rrc: T must be > 0");
  if (beta == 0.0) return eval_sinc(t, 1.0 / (2.0 * T));

  const double x = std::abs(t) / T;  // the pulse is even
  const double scale = 4.0 * beta / (kPi * std::sqrt(T));
  const double x0 = 1.0 / (4.0 * beta);
  const double u = x - x0;
  if (std::abs(u) < 1e-4) return scale * rrc_ratio_near_singularity(u, beta);

  const double a = 1.0 + beta;
  const double b = 1.0 - beta;
  const double num =
      std::cos(a * kPi * x) + (b * kPi / (4.0 * beta)) * normalized_sinc(b * x);
  const double den = 1.0 - (4.0 * beta * x) * (4.0 * beta * x);
  return scale * num / den;
}

double rrc_spectrum(double omega, double beta, double T) {
  require_finite(omega, "omega");
  if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("rrc_spectrum: beta must be in [0,1]");
  if (!std::isfinite(T) || T <= 0.0)
    throw std::invalid_argument("rrc_spectrum: T must be > 0");
  const double w = std::abs(omega);
  const double lo = (1.0 - beta) * kPi / T;
  const double hi = (1.0 + beta) * kPi / T;
  if (w <= lo) return std::sqrt(T);
  if (w > hi) return 0.0;
  const double s = 1.0 - std::sin((T / (2.0 * beta)) * (w - kPi / T));
  return std::sqrt(T / 2.0) * std::sqrt(std::max(0.0, s));
}

PulseShape PulseShape::sinc(double W) {
  if (!std::isfinite(W) || W <= 0.0) throw std::invalid_argument("PulseShape: W must be > 0");
  return PulseShape{PulseKind::Sinc, W, 0.0, 1.0 / (2.0 * W)};
}

PulseShape PulseShape::root_raised_cosine(double beta, double T) {
  if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("PulseShape: beta must be in [0,1]");
  if (!std::isfinite(T) || T <= 0.0) throw std::invalid_argument("PulseShape: T must be > 0");
  return PulseShape{PulseKind::RootRaisedCosine, 1.0 / (2.0 * T), beta, T};
}

double PulseShape::operator()(double t) const {
  return kind == PulseKind::Sinc ? eval_sinc(t, bandwidth_W)
                                 : eval_rrc(t, rolloff_beta, symbol_time_T);
}

double PulseShape::spectrum(double omega) const {
  if (kind == PulseKind::Sinc) {
    return std::abs(omega) <= kPi / symbol_time_T ? std::sqrt(symbol_time_T) : 0.0;
  }
  return rrc_spectrum(omega, rolloff_beta, symbol_time_T);
}

double PulseShape::spectrum_edge() const {
  const double base = kPi / symbol_time_T;  // 2 pi W
  return kind == PulseKind::Sinc ? base : (1.0 + rolloff_beta) * base;
}

std::vector<double> PulseShape::spectrum_breakpoints() const {
  if (kind == PulseKind::Sinc || rolloff_beta == 0.0) return {};
  const double lo = (1.0 - rolloff_beta) * kPi / symbol_time_T;
  if (lo <= 0.0 || lo >= spectrum_edge()) return {};
  return {lo};
}

double pulse_inner_product(const PulseShape& p, double tau1, double tau2,
                           std::optional<Interval> window) {
  require_finite(tau1, "tau1");
  require_finite(tau2, "tau2");
  if (window) {
    auto f = [&](double t) { return p(t - tau1) * p(t - tau2); };
    return quad::integrate(f, window->a, window->b, 1e-10).value;
  }
  // Full line: Parseval form over the compactly supported spectral product.
  const double delta = tau1 - tau2;
  auto f = [&](double w) {
    const double g = p.spectrum(w);
    return g * g * std::cos(w * delta);
  };
  std::vector<double> edges = {0.0};
  for (double bp : p.spectrum_breakpoints()) edges.push_back(bp);
  edges.push_back(p.spectrum_edge());
  double acc = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    acc += quad::integrate(f, edges[i], edges[i + 1], 1e-12).value;
  return acc / kPi;
}

TimeShiftGrid::TimeShiftGrid(double rho_, int count, double T)
    : rho(rho_), count_m(count), shift_step(rho_ * T) {
  if (!std::isfinite(rho_) || rho_ <= 0.0 || rho_ > 1.0)
    throw std::invalid_argument("TimeShiftGrid: rho must be in (0,1]");
  if (count < 1) throw std::invalid_argument("TimeShiftGrid: count must be >= 1");
  if (!std::isfinite(T) || T <= 0.0)
    throw std::invalid_argument("TimeShiftGrid: T must be > 0");
}

TimeShiftGrid TimeShiftGrid::from_nyquist_span(double rho_, int n, double T) {
  if (n < 1) throw std::invalid_argument("TimeShiftGrid: n must be >= 1");
  // floor with a fuzz so exact ratios (e.g. 4/0.1) are not lost to rounding
  const int m = static_cast<int>(std::floor(n / rho_ + 1e-9));
  return TimeShiftGrid(rho_, m, T);
}

}  // namespace ftn
