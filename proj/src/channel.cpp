#include "ftn/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ftn/errors.hpp"

namespace ftn {

double snr_to_sigma(double snr_db) {
  if (!std::isfinite(snr_db)) throw std::invalid_argument("snr_db must be finite");
  return std::pow(10.0, -snr_db / 20.0);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double throughput(double error_rate, double payload_bits) {
  if (!(error_rate >= 0.0) || !(error_rate <= 1.0))
    throw std::invalid_argument("throughput: rate must lie in [0, 1]");
  if (!(payload_bits >= 0.0))
    throw std::invalid_argument("throughput: payload bits must be >= 0");
  return (1.0 - error_rate) * payload_bits;
}

const char* to_string(EnergyConvention c) {
  return c == EnergyConvention::NyquistBlock ? "nyquist-block" : "per-sample";
}

const char* to_string(PrecodingOperator::Mode m) {
  return m == PrecodingOperator::Mode::ExactEigen ? "exact-eigen" : "circulant-fft";
}

PrecodedChannel::PrecodedChannel(const ToeplitzGramian& H,
                                 PrecodingOperator::Mode mode, double min_lambda_tol)
    : gramian_(H),
      dense_h_(H.dense()),
      exact_(inverse_sqrt_exact(H, min_lambda_tol)) {
  if (mode == PrecodingOperator::Mode::CirculantFFT) {
    circulant_ = inverse_sqrt_circulant(H);
    precoder_ = &*circulant_;
  } else {
    precoder_ = &exact_;
  }
}

Eigen::VectorXd PrecodedChannel::precode(const Eigen::VectorXd& x) const {
  return precoder_->apply(x);
}

Eigen::VectorXd PrecodedChannel::channel_pass(const Eigen::VectorXd& a, double N0,
                                              GaussianSampler& noise) const {
  if (a.size() != order())
    throw std::invalid_argument("channel_pass: dimension mismatch");
  if (N0 < 0.0) throw std::invalid_argument("channel_pass: N0 must be >= 0");
  Eigen::VectorXd y = dense_h_ * a;
  if (N0 > 0.0) {
    const double s = std::sqrt(0.5 * N0);
    Eigen::VectorXd v(order());
    for (int i = 0; i < order(); ++i) v[i] = s * noise();
    y += exact_.apply_sqrt(v);  // matched-filter noise, covariance (N0/2) H
  }
  return y;
}

Eigen::VectorXd PrecodedChannel::decode(const Eigen::VectorXd& y) const {
  return precoder_->apply(y);
}

BlockResult PrecodedChannel::run_block(const TransmissionConfig& config,
                                       std::uint64_t block_index) const {
  const int m = order();
  GaussianSampler noise(substream_engine(config.seed, block_index));
  BlockResult res;
  res.sent_bits.resize(m);
  res.decoded_bits.resize(m);
  const double amp = std::sqrt(config.per_sample_energy());
  Eigen::VectorXd x(m);
  for (int i = 0; i < m; ++i) {
    const std::uint8_t bit = static_cast<std::uint8_t>(noise.engine()() >> 63);
    res.sent_bits[i] = bit;
    x[i] = bit ? -amp : amp;
  }
  const Eigen::VectorXd a = precode(x);
  const Eigen::VectorXd y = channel_pass(a, config.noise_density_N0(), noise);
  res.decoded_soft = decode(y);
  res.bit_errors = 0;
  for (int i = 0; i < m; ++i) {
    const std::uint8_t bit = hard_decision(res.decoded_soft[i]);
    res.decoded_bits[i] = bit;
    if (bit != res.sent_bits[i]) ++res.bit_errors;
  }
  res.block_error = res.bit_errors > 0;
  return res;
}

namespace {

ToeplitzGramian config_gramian(const TransmissionConfig& config) {
  if (config.block_m < 1)
    throw std::invalid_argument("run_ber: block_m must be >= 1");
  if (config.beta > 0.0)
    return build_rrc_gramian(config.rho, config.beta, config.block_m);
  return build_sinc_gramian(config.rho, config.block_m);
}

std::vector<BerPoint> run_ber_impl(const TransmissionConfig& config,
                                   const std::vector<double>& snr_grid_db,
                                   long min_bits, bool parallel) {
  if (min_bits < 1) throw std::invalid_argument("run_ber: min_bits must be >= 1");
  const PrecodedChannel channel(config_gramian(config), config.precoder_mode);
  const int m = channel.order();
  const long blocks = (min_bits + m - 1) / m;
  std::vector<BerPoint> points(snr_grid_db.size());
  for (size_t s = 0; s < snr_grid_db.size(); ++s) {
    TransmissionConfig point_config = config;
    point_config.snr_db = snr_grid_db[s];
    long errors = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : errors) if (parallel)
    for (long b = 0; b < blocks; ++b) {
      const std::uint64_t index =
          static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(blocks) +
          static_cast<std::uint64_t>(b);
      errors += channel.run_block(point_config, index).bit_errors;
    }
    BerPoint& pt = points[s];
    pt.snr_db = snr_grid_db[s];
    pt.bits = blocks * m;
    pt.errors = errors;
    pt.ber = static_cast<double>(errors) / static_cast<double>(pt.bits);
    const WilsonInterval ci = wilson_interval(errors, pt.bits);
    pt.ci_low = ci.low;
    pt.ci_high = ci.high;
    const double sgm = point_config.sigma();
    pt.ber_theory =
        sgm > 0.0 ? q_function(std::sqrt(point_config.per_sample_energy()) / sgm) : 0.0;
  }
  return points;
}

}  // namespace

std::vector<BerPoint> run_ber(const TransmissionConfig& config,
                              const std::vector<double>& snr_grid_db, long min_bits,
                              bool parallel) {
  return run_ber_impl(config, snr_grid_db, min_bits, parallel);
}

std::vector<BerPoint> run_ber_serial(const TransmissionConfig& config,
                                     const std::vector<double>& snr_grid_db,
                                     long min_bits) {
  return run_ber_impl(config, snr_grid_db, min_bits, false);
}

WilsonInterval wilson_interval(long errors, long trials, double z) {
  if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (errors == 0) ci.low = 0.0;  // exact endpoint, not a rounding residue
  if (errors == trials) ci.high = 1.0;
  return ci;
}

}  // namespace ftn
