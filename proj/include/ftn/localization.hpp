#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "ftn/gramian.hpp"
#include "ftn/interval.hpp"
#include "ftn/pulse.hpp"

namespace ftn {

/// Energy-concentration summary of one signal on one interval.
struct LocalizationReport {
  Interval interval;
  double concentration = 0.0;       // K_D in [0,1]
  double mu = 0.0;                  // 1 - K_D
  double worst_case_outside = 0.0;  // largest eigenvalue of I - H^{-1} H(Omega)
};

/// Concentration of the given signal on omega together with the worst case
/// over all signals on the same pulse grid.
LocalizationReport localize(const Eigen::VectorXd& coeffs, const TimeShiftGrid& grid,
                            const PulseShape& p, Interval omega);

/// Windowed Gramian H(Omega)_{k,l} = int_Omega h_k h_l dt for unit-energy
/// pulses on the shift grid, filled by composite Gauss-Legendre panels.
/// The parallel path is bit-identical to the serial reference.
Eigen::MatrixXd windowed_gramian(const TimeShiftGrid& grid, const PulseShape& p,
                                 Interval omega, bool parallel = true);
Eigen::MatrixXd windowed_gramian_serial(const TimeShiftGrid& grid,
                                        const PulseShape& p, Interval omega);

/// Fraction of signal energy inside omega, computed through the quadratic
/// forms A' H(Omega) A / A' H A (no waveform sampling).
double concentration_ratio(const Eigen::VectorXd& coeffs, const TimeShiftGrid& grid,
                           const PulseShape& p, Interval omega);
double concentration_ratio(const Eigen::VectorXd& coeffs, const Eigen::MatrixXd& full,
                           const Eigen::MatrixXd& windowed);

struct OutsideEnergy {
  double lambda_max = 0.0;       // worst-case fraction of energy outside
  Eigen::VectorXd worst_coeffs;  // H-normalized maximizer
};

/// Largest eigenvalue of the pencil (H - H(Omega)) v = lambda H v, solved
/// through the Cholesky reduction L^{-1}(H - H(Omega))L^{-T}.
OutsideEnergy max_energy_outside(const Eigen::MatrixXd& H,
                                 const Eigen::MatrixXd& H_omega);

struct OutsideEnergyPoint {
  int m = 0;
  double lambda_max = 0.0;
};

/// Worst-case outside energy for the nested intervals Omega_m = [-m, m+n-1]*T,
/// with floor(n/rho) pulses. m_values must be nonnegative and increasing.
std::vector<OutsideEnergyPoint> outside_energy_sweep(double rho, const PulseShape& p,
                                                     int n,
                                                     const std::vector<int>& m_values,
                                                     bool parallel = true);

/// A band-limited approximation target. When inner_with_pulse_at is empty the
/// cross inner products are computed by truncated time-domain quadrature
/// (|t - tau| <= 500 T), whose tail is reported in tail_estimate.
struct BandLimitedTarget {
  std::function<double(double)> eval;
  double norm_sq = 1.0;
  std::function<double(double)> inner_with_pulse_at;  // tau -> <target, g(.-tau)>
};

struct LeastSquaresFit {
  Eigen::VectorXd coeffs;
  double residual_sq = 0.0;
  double relative_l2 = 0.0;     // sqrt(residual_sq / ||target||^2)
  double min_eigenvalue = 0.0;  // of the basis Gramian
  double tail_estimate = 0.0;   // quadrature truncation bound, 0 on closed forms
};

/// Best L2(R) approximation of the target in the span of the shifted pulses:
/// solves H A = b through the eigendecomposition pseudo-inverse (near-singular
/// Gramians are expected for small rho).
LeastSquaresFit ftn_least_squares(const BandLimitedTarget& target,
                                  const TimeShiftGrid& grid, const PulseShape& p);

/// Effective pulse xi_l^(2n+1)(t) = sum_k [H^{-1/2}]_{(l),(k)} g(t - k T')
/// carried by symbol l of the precoded transmission, sampled on t_samples.
/// Indices k, l run over -n..n.
Eigen::VectorXd effective_pulse(int half_width_n, int ell, const PulseShape& p,
                                double t_prime, const std::vector<double>& t_samples);

/// L2 distance of the center effective pulse to the flat-spectrum reference
/// (the unit-energy sinc of bandwidth 1/(2 T')), via quadratic forms.
double effective_pulse_l2_distance(int half_width_n, const PulseShape& p,
                                   double t_prime);

}  // namespace ftn
