#include "ftn/precoder.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ftn/errors.hpp"
#include "spectral_filter.hpp"

namespace ftn {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kDenseOrderLimit = 4096;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_eigen(const ToeplitzGramian& H) {
  if (H.order > kDenseOrderLimit)
    throw std::invalid_argument(
        "dense eigendecomposition is limited to n <= 4096; use the circulant path");
  Eigen::MatrixXd m = H.dense();
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("eigenvalue solver did not converge", 0.0);
  return solver;
}
}  // namespace

PrecodingOperator make_circulant_operator(std::vector<double> symbol_grid,
                                          double symbol_inf) {
  const int n = static_cast<int>(symbol_grid.size());
  double fmin = symbol_grid[0];
  for (double v : symbol_grid) fmin = std::min(fmin, v);
  if (!(symbol_inf > 0.0) || !(fmin > 0.0))
    throw IllConditionedError("circulant inverse square root requires inf f > 0",
                              std::min(symbol_inf, fmin));
  PrecodingOperator op;
  op.mode_ = PrecodingOperator::Mode::CirculantFFT;
  op.n_ = n;
  op.min_eigenvalue_ = fmin;
  op.mult_inv_sqrt_.resize(n);
  op.mult_sqrt_.resize(n);
  for (int m = 0; m < n; ++m) {
    op.mult_inv_sqrt_[m] = 1.0 / std::sqrt(symbol_grid[m]);
    op.mult_sqrt_[m] = std::sqrt(symbol_grid[m]);
  }
  op.fft_ = std::make_shared<SpectralFilter>(n);
  return op;
}

PrecodingOperator inverse_sqrt_exact(const ToeplitzGramian& H, double min_lambda_tol) {
  auto solver = solve_eigen(H);
  const Eigen::VectorXd& lam = solver.eigenvalues();
  const double lam_min = lam[0];
  const double lam_max = lam[lam.size() - 1];
  double tol = min_lambda_tol;
  if (tol < 0.0)
    tol = 1e-10 * (H.symbol ? H.symbol->sup_value : std::max(lam_max, 0.0));
  if (lam_min < tol) {
    std::ostringstream msg;
    msg << "Gramian is ill-conditioned for the inverse square root: lambda_min="
        << lam_min << " < tol=" << tol;
    throw IllConditionedError(msg.str(), lam_min);
  }
  PrecodingOperator op;
  op.mode_ = PrecodingOperator::Mode::ExactEigen;
  op.n_ = H.order;
  op.min_eigenvalue_ = lam_min;
  op.eigenvectors_ = solver.eigenvectors();
  op.inv_sqrt_eigenvalues_ = lam.array().rsqrt();
  op.sqrt_eigenvalues_ = lam.array().sqrt();
  return op;
}

PrecodingOperator inverse_sqrt_circulant(const ToeplitzGramian& H, int n) {
  if (!H.symbol)
    throw std::invalid_argument("inverse_sqrt_circulant requires an attached symbol");
  if (n < 0) n = H.order;
  if (n < 1) throw std::invalid_argument("inverse_sqrt_circulant: n must be >= 1");
  std::vector<double> grid(n);
  for (int m = 0; m < n; ++m)
    grid[m] = H.symbol->at_wrapped(2.0 * kPi * m / n);
  return make_circulant_operator(std::move(grid), H.symbol->inf_value);
}

PrecodingOperator inverse_sqrt_circulant_from_coefficients(const ToeplitzGramian& H,
                                                           int n) {
  if (n < 0) n = H.order;
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  // Strang fold: s_j = c_j for j <= n/2, c_{n-j} beyond; eigenvalues are the
  // DFT of s, real because s is symmetric.
  std::vector<double> s(n);
  for (int j = 0; j < n; ++j) s[j] = H.coefficient(j <= n / 2 ? j : n - j);
  std::vector<double> grid(n, 0.0);
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += s[j] * std::cos(2.0 * kPi * static_cast<double>(m) * j / n);
    grid[m] = acc;
  }
  double g = grid[0];
  for (double v : grid) g = std::min(g, v);
  return make_circulant_operator(std::move(grid), g);
}

Eigen::VectorXd PrecodingOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("PrecodingOperator::apply: dimension mismatch");
  if (mode_ == Mode::ExactEigen)
    return eigenvectors_ *
           (inv_sqrt_eigenvalues_.array() * (eigenvectors_.transpose() * x).array())
               .matrix();
  return fft_->apply(x, mult_inv_sqrt_);
}

Eigen::VectorXd PrecodingOperator::apply_sqrt(const Eigen::VectorXd& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("PrecodingOperator::apply_sqrt: dimension mismatch");
  if (mode_ == Mode::ExactEigen)
    return eigenvectors_ *
           (sqrt_eigenvalues_.array() * (eigenvectors_.transpose() * x).array())
               .matrix();
  return fft_->apply(x, mult_sqrt_);
}

Eigen::MatrixXd PrecodingOperator::dense_inverse_sqrt() const {
  Eigen::MatrixXd out(n_, n_);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
  for (int j = 0; j < n_; ++j) {
    e[j] = 1.0;
    out.col(j) = apply(e);
    e[j] = 0.0;
  }
  return out;
}

double asymptotic_toeplitz_distance(const Eigen::MatrixXd& K) {
  const int n = static_cast<int>(K.rows());
  if (K.cols() != n) throw std::invalid_argument("square matrix required");
  // per-diagonal means = nearest Toeplitz matrix in Frobenius norm
  std::vector<double> mean(2 * n - 1, 0.0);
  for (int d = -(n - 1); d <= n - 1; ++d) {
    double acc = 0.0;
    const int len = n - std::abs(d);
    for (int i = std::max(0, -d); i < std::min(n, n - d); ++i) acc += K(i, i + d);
    mean[d + n - 1] = acc / len;
  }
  double dist = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double r = K(i, j) - mean[j - i + n - 1];
      dist += r * r;
    }
  return dist / n;
}

}  // namespace ftn
