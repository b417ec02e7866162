#include "ftn/localization.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ftn/errors.hpp"
#include "ftn/precoder.hpp"
#include "ftn/quadrature.hpp"

namespace ftn {

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::MatrixXd windowed_gramian_impl(const TimeShiftGrid& grid, const PulseShape& p,
                                      Interval omega, bool parallel) {
  const int m = grid.count_m;
  std::vector<double> nodes, weights;
  // Panels of half a symbol time keep the band-limited integrand resolved far
  // below the 1e-8 validation tolerance.
  quad::composite_nodes(omega.a, omega.b, 0.5 * p.symbol_time_T, 16, nodes, weights);
  const long q = static_cast<long>(nodes.size());

  // Pulse samples with sqrt(weight) folded in, so an entry is a plain dot product.
  std::vector<double> phi(static_cast<size_t>(m) * q);
#pragma omp parallel for schedule(static) if (parallel)
  for (int k = 0; k < m; ++k) {
    const double tau = grid.shift(k);
    double* row = phi.data() + static_cast<size_t>(k) * q;
    for (long i = 0; i < q; ++i) row[i] = std::sqrt(weights[i]) * p(nodes[i] - tau);
  }

  Eigen::MatrixXd h(m, m);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int k = 0; k < m; ++k) {
    const double* rk = phi.data() + static_cast<size_t>(k) * q;
    for (int l = k; l < m; ++l) {
      const double* rl = phi.data() + static_cast<size_t>(l) * q;
      double acc = 0.0;
      for (long i = 0; i < q; ++i) acc += rk[i] * rl[i];
      h(k, l) = acc;
      h(l, k) = acc;
    }
  }
  return h;
}

}  // namespace

Eigen::MatrixXd windowed_gramian(const TimeShiftGrid& grid, const PulseShape& p,
                                 Interval omega, bool parallel) {
  return windowed_gramian_impl(grid, p, omega, parallel);
}

Eigen::MatrixXd windowed_gramian_serial(const TimeShiftGrid& grid,
                                        const PulseShape& p, Interval omega) {
  return windowed_gramian_impl(grid, p, omega, false);
}

double concentration_ratio(const Eigen::VectorXd& coeffs, const Eigen::MatrixXd& full,
                           const Eigen::MatrixXd& windowed) {
  if (coeffs.size() != full.rows() || full.rows() != windowed.rows())
    throw std::invalid_argument("concentration_ratio: dimension mismatch");
  const double total = coeffs.dot(full * coeffs);
  if (!(total > 0.0))
    throw std::invalid_argument("concentration_ratio: zero signal");
  return coeffs.dot(windowed * coeffs) / total;
}

double concentration_ratio(const Eigen::VectorXd& coeffs, const TimeShiftGrid& grid,
                           const PulseShape& p, Interval omega) {
  if (coeffs.size() != grid.count_m)
    throw std::invalid_argument("concentration_ratio: coefficient count mismatch");
  if (coeffs.norm() == 0.0)
    throw std::invalid_argument("concentration_ratio: zero signal");
  const Eigen::MatrixXd full = full_gramian(grid, p).dense();
  const Eigen::MatrixXd win = windowed_gramian(grid, p, omega);
  return concentration_ratio(coeffs, full, win);
}

LocalizationReport localize(const Eigen::VectorXd& coeffs, const TimeShiftGrid& grid,
                            const PulseShape& p, Interval omega) {
  const Eigen::MatrixXd full = full_gramian(grid, p).dense();
  const Eigen::MatrixXd win = windowed_gramian(grid, p, omega);
  LocalizationReport report{omega, 0.0, 0.0, 0.0};
  report.concentration = concentration_ratio(coeffs, full, win);
  report.mu = 1.0 - report.concentration;
  report.worst_case_outside = max_energy_outside(full, win).lambda_max;
  return report;
}

OutsideEnergy max_energy_outside(const Eigen::MatrixXd& H,
                                 const Eigen::MatrixXd& H_omega) {
  const int n = static_cast<int>(H.rows());
  if (H.cols() != n || H_omega.rows() != n || H_omega.cols() != n)
    throw std::invalid_argument("max_energy_outside: dimension mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(H);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    const double lam_min = es.info() == Eigen::Success ? es.eigenvalues()[0] : 0.0;
    std::ostringstream msg;
    msg << "full Gramian is not numerically positive definite (lambda_min="
        << lam_min << ")";
    throw IllConditionedError(msg.str(), lam_min);
  }
  const Eigen::MatrixXd outside = H - H_omega;
  Eigen::MatrixXd mid = llt.matrixL().solve(outside);
  mid = llt.matrixL().solve(mid.transpose().eval());
  mid = 0.5 * (mid + mid.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mid);
  if (es.info() != Eigen::Success)
    throw NumericFailure("eigenvalue solver did not converge", 0.0);
  OutsideEnergy out;
  out.lambda_max = es.eigenvalues()[n - 1];
  out.worst_coeffs = llt.matrixU().solve(es.eigenvectors().col(n - 1));
  return out;
}

std::vector<OutsideEnergyPoint> outside_energy_sweep(double rho, const PulseShape& p,
                                                     int n,
                                                     const std::vector<int>& m_values,
                                                     bool parallel) {
  for (size_t i = 0; i < m_values.size(); ++i) {
    if (m_values[i] < 0)
      throw std::invalid_argument("outside_energy_sweep: m values must be >= 0");
    if (i > 0 && m_values[i] <= m_values[i - 1])
      throw std::invalid_argument("outside_energy_sweep: m values must increase");
  }
  const double T = p.symbol_time_T;
  const TimeShiftGrid grid = TimeShiftGrid::from_nyquist_span(rho, n, T);
  const Eigen::MatrixXd full = full_gramian(grid, p).dense();
  std::vector<OutsideEnergyPoint> points(m_values.size());
  const int count = static_cast<int>(m_values.size());
  std::exception_ptr failure;  // exceptions must not unwind through the omp loop
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    try {
      const int m = m_values[i];
      const Interval omega{-m * T, (m + n - 1) * T};
      const Eigen::MatrixXd win = windowed_gramian_serial(grid, p, omega);
      points[i] = {m, max_energy_outside(full, win).lambda_max};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return points;
}

LeastSquaresFit ftn_least_squares(const BandLimitedTarget& target,
                                  const TimeShiftGrid& grid, const PulseShape& p) {
  const int m = grid.count_m;
  const Eigen::MatrixXd H = full_gramian(grid, p).dense();
  Eigen::VectorXd b(m);
  double tail = 0.0;
  for (int k = 0; k < m; ++k) {
    const double tau = grid.shift(k);
    if (target.inner_with_pulse_at) {
      b[k] = target.inner_with_pulse_at(tau);
    } else {
      const double L = 500.0 * p.symbol_time_T;
      auto f = [&](double t) { return target.eval(t) * p(t - tau); };
      b[k] = quad::integrate(f, tau - L, tau + L, 1e-10).value;
      // 1/t^2 worst-case product tail
      tail = std::max(tail, 2.0 / (kPi * kPi * L));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success)
    throw NumericFailure("eigenvalue solver did not converge", 0.0);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double lam_max = lam[m - 1];
  if (!(lam_max > 0.0))
    throw IllConditionedError("basis Gramian has no positive spectrum", lam_max);
  // Pseudo-inverse with a relative clamp: small-rho Gramians are numerically
  // singular by construction, the clamped directions carry no usable signal.
  const double clamp = 1e3 * std::numeric_limits<double>::epsilon() * lam_max;
  Eigen::VectorXd proj = es.eigenvectors().transpose() * b;
  for (int i = 0; i < m; ++i) proj[i] = lam[i] > clamp ? proj[i] / lam[i] : 0.0;
  LeastSquaresFit fit;
  fit.coeffs = es.eigenvectors() * proj;
  fit.residual_sq = target.norm_sq - b.dot(fit.coeffs);
  fit.relative_l2 = std::sqrt(std::max(0.0, fit.residual_sq) / target.norm_sq);
  fit.min_eigenvalue = lam[0];
  fit.tail_estimate = tail;
  return fit;
}

namespace {

ToeplitzGramian effective_pulse_gramian(int half_width_n, const PulseShape& p,
                                        double t_prime) {
  if (half_width_n < 0) throw std::invalid_argument("half width must be >= 0");
  if (!(t_prime > 0.0)) throw std::invalid_argument("T' must be > 0");
  const int order = 2 * half_width_n + 1;
  ToeplitzGramian g;
  g.order = order;
  g.coefficients.resize(order);
  for (int k = 0; k < order; ++k)
    g.coefficients[k] = unit_pulse_autocorrelation(p, k * t_prime);
  return g;
}

}  // namespace

Eigen::VectorXd effective_pulse(int half_width_n, int ell, const PulseShape& p,
                                double t_prime, const std::vector<double>& t_samples) {
  if (std::abs(ell) > half_width_n)
    throw std::invalid_argument("effective_pulse: |ell| must be <= n");
  const ToeplitzGramian g = effective_pulse_gramian(half_width_n, p, t_prime);
  const PrecodingOperator op = inverse_sqrt_exact(g);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(g.order);
  e[ell + half_width_n] = 1.0;
  const Eigen::VectorXd row = op.apply(e);  // symmetric: row (l) of H^{-1/2}
  Eigen::VectorXd out(static_cast<long>(t_samples.size()));
  for (size_t i = 0; i < t_samples.size(); ++i) {
    double acc = 0.0;
    for (int k = -half_width_n; k <= half_width_n; ++k)
      acc += row[k + half_width_n] * p(t_samples[i] - k * t_prime);
    out[static_cast<long>(i)] = acc;
  }
  return out;
}

double effective_pulse_l2_distance(int half_width_n, const PulseShape& p,
                                   double t_prime) {
  const ToeplitzGramian g = effective_pulse_gramian(half_width_n, p, t_prime);
  const PrecodingOperator op = inverse_sqrt_exact(g);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(g.order);
  e[half_width_n] = 1.0;
  const Eigen::VectorXd w = op.apply(e);
  // q_k = <g(.-kT'), ref> over the common spectral support, ref flat sqrt(T')
  const double ref_edge = kPi / t_prime;  // 2 pi W'
  const double edge = std::min(p.spectrum_edge(), ref_edge);
  std::vector<double> pieces = {0.0};
  for (double bp : p.spectrum_breakpoints())
    if (bp < edge) pieces.push_back(bp);
  pieces.push_back(edge);
  Eigen::VectorXd q(g.order);
  for (int k = -half_width_n; k <= half_width_n; ++k) {
    auto f = [&](double wfreq) {
      return p.spectrum(wfreq) * std::sqrt(t_prime) * std::cos(wfreq * k * t_prime);
    };
    double acc = 0.0;
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
      acc += quad::integrate(f, pieces[i], pieces[i + 1], 1e-12).value;
    q[k + half_width_n] = acc / kPi;
  }
  const Eigen::MatrixXd H = g.dense();
  const double dist_sq = w.dot(H * w) - 2.0 * w.dot(q) + 1.0;
  return std::sqrt(std::max(0.0, dist_sq));
}

}  // namespace ftn
