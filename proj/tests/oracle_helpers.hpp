#pragma once

// Test-only oracles, independent of the implementation paths they validate.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Frozen expected values, computed up front with an independent high-precision
// oracle (quadrature / eigensolver cross-checks) before the implementation.
namespace frozen {
inline constexpr double kSinc025 = 0.9003163161571061;
inline constexpr double kSinc09 = 0.10929240478705181;
inline constexpr double kRrcPeak = 1.0601126998417358;        // (1-b+4b/pi), b=.22
inline constexpr double kRrcSingular = -0.15718426207720726;  // t = T/(4b), b=.22
inline constexpr double kRrcC1 = 0.16570001784009122;         // rho=1/1.22, b=.22
inline constexpr double kCapacityRho05 = 1.1699250014423124;  // 2 log2(1.5)
inline constexpr double kCapacityB022 = 1.0536878051204082;   // 1.22 log2(1+1/1.22)
inline constexpr double kQ1 = 0.15865525393145707;
inline constexpr double kOutside081 = 0.515362;  // rho=.81, n=20, m=15
inline constexpr double kOutside10 = 0.086043;   // rho=1.0, n=20, m=15
inline constexpr double kConcentrationWide = 0.750350;   // [-rho, rho m]
inline constexpr double kConcentrationTight = 0.273665;  // [0, rho(m-1)]
inline constexpr double kApproxRelErr[3] = {0.867647, 0.327835, 0.178461};
inline constexpr double kApproxThreshold = 0.197;  // 0.178461 + 10% margin
inline constexpr double kEffDist[3] = {0.151451, 0.080837, 0.041161};  // n=8,32,128
}  // namespace frozen

/// Fejer-averaged Fourier partial sum sum_{|k|<=N} (1-|k|/(N+1)) c_k e^{ikz}
/// for real even coefficients.
inline double fejer_partial_sum(const std::function<double(long)>& coeff, long N,
                                double z) {
  double acc = coeff(0);
  for (long k = 1; k <= N; ++k)
    acc += 2.0 * (1.0 - static_cast<double>(k) / (N + 1)) * coeff(k) *
           std::cos(k * z);
  return acc;
}

/// Denman-Beavers iteration: Y -> H^(1/2), Z -> H^(-1/2). Independent of the
/// eigendecomposition route used by the implementation.
inline Eigen::MatrixXd denman_beavers_inverse_sqrt(const Eigen::MatrixXd& H,
                                                   int iterations = 60) {
  Eigen::MatrixXd Y = H;
  Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(H.rows(), H.cols());
  for (int i = 0; i < iterations; ++i) {
    const Eigen::MatrixXd Yn = 0.5 * (Y + Z.inverse());
    const Eigen::MatrixXd Zn = 0.5 * (Z + Y.inverse());
    const double delta = (Yn - Y).norm() / std::max(1.0, Y.norm());
    Y = Yn;
    Z = Zn;
    if (delta < 1e-15) break;
  }
  return Z;
}

/// Upper chi-square quantile by the Wilson-Hilferty approximation.
inline double chi2_quantile(double dof, double z_upper) {
  const double a = 2.0 / (9.0 * dof);
  const double c = 1.0 - a + z_upper * std::sqrt(a);
  return dof * c * c * c;
}
inline constexpr double kZ99 = 2.3263478740408408;

}  // namespace oracle
