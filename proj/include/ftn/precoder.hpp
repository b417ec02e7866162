#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "ftn/gramian.hpp"

namespace ftn {

class SpectralFilter;

/// Application of H^(-1/2) (and its inverse H^(+1/2)), realized either through
/// an exact symmetric eigendecomposition or as a circulant operator whose DFT
/// multipliers sample 1/sqrt(symbol). Immutable after construction; apply()
/// may be called concurrently on distinct vectors.
class PrecodingOperator {
 public:
  enum class Mode { ExactEigen, CirculantFFT };

  Mode mode() const { return mode_; }
  int order() const { return n_; }
  /// Smallest eigenvalue (exact mode) or smallest symbol sample (circulant)
  /// encountered at construction; the conditioning record.
  double min_eigenvalue() const { return min_eigenvalue_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;       // H^(-1/2) x
  Eigen::VectorXd apply_sqrt(const Eigen::VectorXd& x) const;  // H^(+1/2) x

  Eigen::MatrixXd dense_inverse_sqrt() const;

  /// Circulant mode: the per-bin grid of 1/sqrt(f at DFT frequencies).
  const std::vector<double>& spectral_multipliers() const { return mult_inv_sqrt_; }

  friend PrecodingOperator inverse_sqrt_exact(const ToeplitzGramian&, double);
  friend PrecodingOperator make_circulant_operator(std::vector<double>, double);

 private:
  PrecodingOperator() = default;

  Mode mode_ = Mode::ExactEigen;
  int n_ = 0;
  double min_eigenvalue_ = 0.0;
  // exact mode
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd inv_sqrt_eigenvalues_;
  Eigen::VectorXd sqrt_eigenvalues_;
  // circulant mode
  std::vector<double> mult_inv_sqrt_;
  std::vector<double> mult_sqrt_;
  std::shared_ptr<SpectralFilter> fft_;
};

/// H^(-1/2) by symmetric eigendecomposition. min_lambda_tol < 0 selects the
/// default 1e-10 * sup(symbol) (or 1e-10 * lambda_max without a symbol); any
/// eigenvalue below the tolerance raises IllConditionedError. The dense path
/// is limited to n <= 4096.
PrecodingOperator inverse_sqrt_exact(const ToeplitzGramian& H,
                                     double min_lambda_tol = -1.0);

/// Circulant approximation of H^(-1/2): DFT bin m multiplies by
/// 1/sqrt(f(2*pi*m/n wrapped)), sampling the closed-form symbol. Requires an
/// attached symbol with inf f > 0. Application cost O(n log n).
PrecodingOperator inverse_sqrt_circulant(const ToeplitzGramian& H, int n = -1);

/// Secondary circulant constructor for cross-checking: multipliers from the
/// DFT of the Strang-folded coefficient row instead of symbol samples.
PrecodingOperator inverse_sqrt_circulant_from_coefficients(const ToeplitzGramian& H,
                                                           int n = -1);

/// (1/n) * ||K - P(K)||_F^2 where P projects onto Toeplitz matrices
/// (per-diagonal means) — the asymptotic-Toeplitz convergence metric.
double asymptotic_toeplitz_distance(const Eigen::MatrixXd& K);

}  // namespace ftn
