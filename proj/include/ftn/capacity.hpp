#pragma once

#include <cmath>
#include <stdexcept>

namespace ftn {

/// Capacity of the real discrete memoryless Gaussian channel,
/// (1/2) log2(1 + 2 Es / N0) bits per sample.
inline double capacity_per_sample(double Es, double N0) {
  if (!(Es >= 0.0)) throw std::invalid_argument("capacity_per_sample: Es must be >= 0");
  if (!(N0 > 0.0)) throw std::invalid_argument("capacity_per_sample: N0 must be > 0");
  return 0.5 * std::log2(1.0 + 2.0 * Es / N0);
}

/// (W/rho) log2(1 + rho P/(N0 W)) bits/second — the rate the FTN model would
/// deliver if its signals were time-localized; rho = 1 is the Shannon capacity.
inline double ftn_naive_capacity(double rho, double W, double P, double N0) {
  if (!(rho > 0.0) || rho > 1.0)
    throw std::invalid_argument("ftn_naive_capacity: rho must be in (0, 1]");
  if (!(W > 0.0)) throw std::invalid_argument("ftn_naive_capacity: W must be > 0");
  if (!(N0 > 0.0)) throw std::invalid_argument("ftn_naive_capacity: N0 must be > 0");
  if (!(P >= 0.0)) throw std::invalid_argument("ftn_naive_capacity: P must be >= 0");
  return (W / rho) * std::log2(1.0 + rho * P / (N0 * W));
}

/// (1+beta) W log2(1 + P/(N0 W (1+beta))) bits/second — capacity of precoded
/// FTN with a roll-off-beta pulse; beta = 0 reduces to Shannon.
inline double precoded_rrc_capacity(double beta, double W, double P, double N0) {
  if (!(beta >= 0.0) || beta > 1.0)
    throw std::invalid_argument("precoded_rrc_capacity: beta must be in [0, 1]");
  if (!(W > 0.0)) throw std::invalid_argument("precoded_rrc_capacity: W must be > 0");
  if (!(N0 > 0.0)) throw std::invalid_argument("precoded_rrc_capacity: N0 must be > 0");
  if (!(P >= 0.0)) throw std::invalid_argument("precoded_rrc_capacity: P must be >= 0");
  const double Wp = (1.0 + beta) * W;
  return Wp * std::log2(1.0 + P / (N0 * Wp));
}

/// C(rho) - C(1): strictly positive for rho < 1 and P > 0, the diagnostic for
/// the would-be Shannon violation of time-localized FTN.
inline double paradox_gap(double rho, double W, double P, double N0) {
  if (!(rho > 0.0) || !(rho < 1.0))
    throw std::invalid_argument("paradox_gap: rho must be in (0, 1)");
  return ftn_naive_capacity(rho, W, P, N0) - ftn_naive_capacity(1.0, W, P, N0);
}

/// One evaluated point of a capacity sweep (value in bits/second).
struct CapacityPoint {
  double rho = 1.0;
  double beta = 0.0;
  double W = 1.0;
  double P = 0.0;
  double N0 = 1.0;
  double value = 0.0;

  static CapacityPoint naive_ftn(double rho, double W, double P, double N0) {
    return {rho, 0.0, W, P, N0, ftn_naive_capacity(rho, W, P, N0)};
  }
  static CapacityPoint precoded_rrc(double beta, double W, double P, double N0) {
    return {1.0, beta, W, P, N0, precoded_rrc_capacity(beta, W, P, N0)};
  }
};

}  // namespace ftn
