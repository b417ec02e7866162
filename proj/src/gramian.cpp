#include "ftn/gramian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftn/errors.hpp"

namespace ftn {

namespace {
constexpr double kPi = std::numbers::pi;

// cos(pi v) / (1 - 4 v^2) with the removable singularity at |v| = 1/2 handled
// through the exact rewrite sin(pi w)/(4 w (1 + w)), w = |v| - 1/2.
double raised_cosine_factor(double v) {
  const double av = std::abs(v);
  const double w = av - 0.5;
  if (std::abs(w) < 0.25) return (kPi / 4.0) * normalized_sinc(w) / (1.0 + w);
  return std::cos(kPi * av) / (1.0 - 4.0 * av * av);
}

void check_rho(double rho) {
  if (!(rho > 0.0) || rho > 1.0)
    throw std::invalid_argument("rho must be in (0, 1]");
}

void check_z(double z) {
  if (!(std::abs(z) <= kPi * (1.0 + 1e-12)))
    throw std::invalid_argument("z must lie in [-pi, pi]");
}
}  // namespace

double AssociatedFunction::at_wrapped(double z) const {
  double w = std::remainder(z, 2.0 * kPi);  // (-pi, pi]
  return value(w);
}

double ToeplitzGramian::coefficient(long k) const {
  const long a = std::labs(k);
  if (a >= static_cast<long>(coefficients.size())) return 0.0;
  return coefficients[static_cast<size_t>(a)];
}

Eigen::MatrixXd ToeplitzGramian::dense() const {
  Eigen::MatrixXd m(order, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) m(i, j) = coefficient(i - j);
  return m;
}

double sinc_gramian_coefficient(double rho, long k) {
  check_rho(rho);
  return normalized_sinc(rho * static_cast<double>(k));
}

double rrc_gramian_coefficient(double rho, double beta, long k,
                               RrcNormalization norm) {
  check_rho(rho);
  if (!(beta >= 0.0) || beta > 1.0)
    throw std::invalid_argument("beta must be in [0, 1]");
  const double x = rho * static_cast<double>(k);
  const double scale = norm == RrcNormalization::SqrtRho ? rho : 1.0;
  return scale * normalized_sinc(x) * raised_cosine_factor(beta * x);
}

double rrc_associated_function(double rho, double beta, double z) {
  check_rho(rho);
  if (!(beta >= 0.0) || beta > 1.0)
    throw std::invalid_argument("beta must be in [0, 1]");
  check_z(z);
  const double az = std::abs(z);
  if (beta == 0.0) return az <= rho * kPi ? 1.0 : 0.0;  // degenerate roll-off
  const double lo = (1.0 - beta) * rho * kPi;
  if ((1.0 + beta) * rho <= 1.0) {
    const double hi = (1.0 + beta) * rho * kPi;
    if (az <= lo) return 1.0;
    if (az <= hi) return 0.5 * (1.0 - std::sin((az - rho * kPi) / (2.0 * beta * rho)));
    return 0.0;
  }
  const double hi = (2.0 - (1.0 + beta) * rho) * kPi;
  if (az <= lo) return 1.0;
  if (az <= hi) return 0.5 * (1.0 - std::sin((az - rho * kPi) / (2.0 * beta * rho)));
  const double edge = std::sin(kPi * (1.0 - rho) / (2.0 * beta * rho));
  return 1.0 - edge * std::cos((az - kPi) / (2.0 * beta * rho));
}

double folded_spectrum(const PulseShape& p, double tau, double z) {
  if (!(tau > 0.0)) throw std::invalid_argument("folded_spectrum: tau must be > 0");
  check_z(z);
  double scale_sq = 1.0;
  if (p.kind == PulseKind::RootRaisedCosine)
    scale_sq = tau / p.symbol_time_T;  // Gramian convention: sqrt(rho)-scaled pulses
  const double edge = p.spectrum_edge();
  // enumerate l with |z + 2 pi l| <= tau * edge
  const double span = tau * edge;
  const long l_lo = static_cast<long>(std::ceil((-span - z) / (2.0 * kPi) - 1e-12));
  const long l_hi = static_cast<long>(std::floor((span - z) / (2.0 * kPi) + 1e-12));
  double acc = 0.0;
  for (long l = l_lo; l <= l_hi; ++l) {
    const double g = p.spectrum((z + 2.0 * kPi * static_cast<double>(l)) / tau);
    acc += g * g;
  }
  return scale_sq * acc / tau;
}

AssociatedFunction make_sinc_symbol(double rho) {
  check_rho(rho);
  AssociatedFunction f;
  f.value = [rho](double z) { return std::abs(z) <= rho * kPi ? 1.0 / rho : 0.0; };
  if (rho < 1.0) f.breakpoints = {-rho * kPi, rho * kPi};
  f.inf_value = rho < 1.0 ? 0.0 : 1.0 / rho;
  f.sup_value = 1.0 / rho;
  return f;
}

AssociatedFunction make_rrc_symbol(double rho, double beta, RrcNormalization norm) {
  check_rho(rho);
  if (!(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("beta must be in (0, 1]");
  AssociatedFunction f;
  const double scale = norm == RrcNormalization::SqrtRho ? 1.0 : 1.0 / rho;
  f.value = [rho, beta, scale](double z) {
    return scale * rrc_associated_function(rho, beta, z);
  };
  const double lo = (1.0 - beta) * rho * kPi;
  const double hi =
      (1.0 + beta) * rho <= 1.0 ? (1.0 + beta) * rho * kPi : (2.0 - (1.0 + beta) * rho) * kPi;
  for (double b : {-hi, -lo, lo, hi})
    if (std::abs(b) < kPi && (f.breakpoints.empty() || b > f.breakpoints.back()))
      f.breakpoints.push_back(b);
  f.sup_value = scale;
  if ((1.0 + beta) * rho <= 1.0) {
    f.inf_value = 0.0;
  } else {
    f.inf_value =
        scale * (1.0 - std::sin(kPi * (1.0 - rho) / (2.0 * beta * rho)));
  }
  return f;
}

ToeplitzGramian build_sinc_gramian(double rho, int m) {
  check_rho(rho);
  if (m < 1) throw std::invalid_argument("order must be >= 1");
  ToeplitzGramian g;
  g.order = m;
  g.coefficients.resize(m);
  for (int k = 0; k < m; ++k) g.coefficients[k] = sinc_gramian_coefficient(rho, k);
  g.symbol = make_sinc_symbol(rho);
  return g;
}

ToeplitzGramian build_rrc_gramian(double rho, double beta, int n,
                                  RrcNormalization norm) {
  check_rho(rho);
  if (!(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("beta must be in (0, 1]");
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  ToeplitzGramian g;
  g.order = n;
  g.coefficients.resize(n);
  for (int k = 0; k < n; ++k)
    g.coefficients[k] = rrc_gramian_coefficient(rho, beta, k, norm);
  g.symbol = make_rrc_symbol(rho, beta, norm);
  return g;
}

double unit_pulse_autocorrelation(const PulseShape& p, double lag) {
  const double x = lag / p.symbol_time_T;
  if (p.kind == PulseKind::Sinc) return normalized_sinc(x);
  return normalized_sinc(x) * raised_cosine_factor(p.rolloff_beta * x);
}

ToeplitzGramian full_gramian(const TimeShiftGrid& grid, const PulseShape& p) {
  ToeplitzGramian g;
  g.order = grid.count_m;
  g.coefficients.resize(grid.count_m);
  for (int k = 0; k < grid.count_m; ++k)
    g.coefficients[k] = unit_pulse_autocorrelation(p, grid.shift(k));
  const double rho_eff = grid.shift_step / p.symbol_time_T;
  if (rho_eff <= 1.0) {
    if (p.kind == PulseKind::Sinc)
      g.symbol = make_sinc_symbol(rho_eff);
    else if (p.rolloff_beta > 0.0)
      g.symbol = make_rrc_symbol(rho_eff, p.rolloff_beta, RrcNormalization::UnitEnergy);
  }
  return g;
}

Eigen::VectorXd eigenvalues(const ToeplitzGramian& H) {
  Eigen::MatrixXd m = H.dense();
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("eigenvalue solver did not converge", 0.0);
  return solver.eigenvalues();
}

double szego_distribution_gap(const Eigen::VectorXd& lambdas,
                              const AssociatedFunction& symbol,
                              const std::function<double(double)>& F) {
  const int n = static_cast<int>(lambdas.size());
  double acc = 0.0;
  for (int l = 1; l <= n; ++l) {
    const double z = 2.0 * kPi * l / n - kPi;
    acc += F(lambdas[l - 1]) - F(symbol(z));
  }
  return acc / n;
}

double szego_distribution_gap(const ToeplitzGramian& H,
                              const std::function<double(double)>& F) {
  if (!H.symbol)
    throw std::invalid_argument("szego_distribution_gap requires an attached symbol");
  return szego_distribution_gap(eigenvalues(H), *H.symbol, F);
}

}  // namespace ftn
