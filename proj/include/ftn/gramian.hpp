#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "ftn/pulse.hpp"

namespace ftn {

/// 2-pi-periodic associated function (symbol) of a Toeplitz matrix, i.e. the
/// folded power spectrum of the generating pulses. Defined on [-pi, pi] and
/// extended periodically for DFT grids.
struct AssociatedFunction {
  std::function<double(double)> value;
  std::vector<double> breakpoints;  // interior non-smooth points, ascending
  double inf_value = 0.0;
  double sup_value = 0.0;

  double operator()(double z) const { return value(z); }
  /// Periodic extension for angles outside [-pi, pi].
  double at_wrapped(double z) const;
};

/// Normalization of the FTN root-raised-cosine pulse family: unit-energy
/// pulses, or the sqrt(rho)-scaled pulses whose Gramian has c_0 = rho.
enum class RrcNormalization { UnitEnergy, SqrtRho };

/// Symmetric Toeplitz Gram matrix of shifted pulses stored by its first row.
struct ToeplitzGramian {
  std::vector<double> coefficients;  // c_0 .. c_{n-1}
  int order = 0;
  std::optional<AssociatedFunction> symbol;

  double coefficient(long k) const;  // c_{|k|}; 0 beyond the stored row
  Eigen::MatrixXd dense() const;     // symmetric materialization
};

/// c_k of the unit-energy sinc FTN Gramian: sinc(rho k).
double sinc_gramian_coefficient(double rho, long k);

/// c_k of the root-raised-cosine FTN Gramian, i.e. the raised cosine sampled
/// at lag rho*k, scaled by rho under the SqrtRho convention. The removable
/// singularity at 2*beta*rho*|k| = 1 is evaluated through its exact
/// factorization.
double rrc_gramian_coefficient(double rho, double beta, long k,
                               RrcNormalization norm = RrcNormalization::SqrtRho);

/// Piecewise closed form of the RRC Gramian symbol (SqrtRho convention),
/// z in [-pi, pi]; the two branch sets meet continuously at (1+beta)rho = 1.
double rrc_associated_function(double rho, double beta, double z);

/// Aliased pulse power spectrum (1/tau) * sum_l |G((z+2*pi*l)/tau)|^2, with
/// the finitely many nonzero terms enumerated exactly. Applies the same pulse
/// scaling as the matching Gramian builder: unit-energy sinc, sqrt(rho)-scaled
/// root-raised-cosine with rho = tau/T.
double folded_spectrum(const PulseShape& p, double tau, double z);

AssociatedFunction make_sinc_symbol(double rho);
AssociatedFunction make_rrc_symbol(double rho, double beta,
                                   RrcNormalization norm = RrcNormalization::SqrtRho);

ToeplitzGramian build_sinc_gramian(double rho, int m);
ToeplitzGramian build_rrc_gramian(double rho, double beta, int n,
                                  RrcNormalization norm = RrcNormalization::SqrtRho);

/// Full-line Gramian of unit-energy pulses on a shift grid (closed forms).
ToeplitzGramian full_gramian(const TimeShiftGrid& grid, const PulseShape& p);

/// Unit-energy pulse autocorrelation <g, g(. - lag)> in closed form.
double unit_pulse_autocorrelation(const PulseShape& p, double lag);

/// Ascending eigenvalues of the dense materialization.
Eigen::VectorXd eigenvalues(const ToeplitzGramian& H);

/// (1/n) * sum_l [F(lambda_l) - F(f(2*pi*l/n - pi))], the equal-distribution
/// diagnostic; requires an attached symbol.
double szego_distribution_gap(const ToeplitzGramian& H,
                              const std::function<double(double)>& F);
double szego_distribution_gap(const Eigen::VectorXd& lambdas,
                              const AssociatedFunction& symbol,
                              const std::function<double(double)>& F);

}  // namespace ftn
