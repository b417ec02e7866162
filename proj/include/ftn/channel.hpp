#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftn/gramian.hpp"
#include "ftn/precoder.hpp"
#include "ftn/rng.hpp"

namespace ftn {

/// sigma = 10^(-snr_db/20).
double snr_to_sigma(double snr_db);

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

/// (1 - error rate) * payload bits; rate must lie in [0, 1].
double throughput(double error_rate, double payload_bits);

/// BPSK hard decision at threshold 0; an exact 0 decides bit 1.
inline std::uint8_t hard_decision(double soft) { return soft > 0.0 ? 0 : 1; }

/// How the per-sample energy derives from the rho=1 reference Es:
/// NyquistBlock keeps the block energy at n*Es (per-sample rho*Es, the
/// constant-power accounting); PerSample spends Es on every sample.
enum class EnergyConvention { NyquistBlock, PerSample };

const char* to_string(EnergyConvention c);
const char* to_string(PrecodingOperator::Mode m);

/// Physical parameters of one simulated transmission.
struct TransmissionConfig {
  double rho = 1.0;
  double beta = 0.0;  // 0 selects the sinc family
  double bandwidth_W = 0.5;
  int block_m = 0;  // samples per block
  double Es = 1.0;  // energy per sample at the rho=1 reference
  double snr_db = 0.0;
  std::uint64_t seed = 0;
  PrecodingOperator::Mode precoder_mode = PrecodingOperator::Mode::ExactEigen;
  EnergyConvention energy_convention = EnergyConvention::NyquistBlock;

  double sigma() const { return snr_to_sigma(snr_db); }
  double noise_density_N0() const {
    const double s = sigma();
    return 2.0 * s * s;  // per-sample noise variance is N0/2
  }
  double per_sample_energy() const {
    return energy_convention == EnergyConvention::NyquistBlock ? rho * Es : Es;
  }
};

struct BlockResult {
  std::vector<std::uint8_t> sent_bits;
  Eigen::VectorXd decoded_soft;
  std::vector<std::uint8_t> decoded_bits;
  long bit_errors = 0;
  bool block_error = false;
};

/// Matched-filter AWGN channel for one Gramian, with precoding and decoding.
/// The H^(1/2) noise-shaping path is always the exact eigendecomposition;
/// precoder_mode selects the operator used for precode/decode. Immutable and
/// safe for concurrent block simulation.
class PrecodedChannel {
 public:
  PrecodedChannel(const ToeplitzGramian& H,
                  PrecodingOperator::Mode mode = PrecodingOperator::Mode::ExactEigen,
                  double min_lambda_tol = -1.0);

  /// A = K x with K = H^(-1/2); A' H A == ||x||^2 in exact mode.
  Eigen::VectorXd precode(const Eigen::VectorXd& x) const;
  /// Y = H a + H^(1/2) V, V iid N(0, N0/2).
  Eigen::VectorXd channel_pass(const Eigen::VectorXd& a, double N0,
                               GaussianSampler& noise) const;
  /// S = K y; composed with the above, S = x + white noise.
  Eigen::VectorXd decode(const Eigen::VectorXd& y) const;

  /// One deterministic BPSK block: substream `block_index` of config.seed.
  BlockResult run_block(const TransmissionConfig& config,
                        std::uint64_t block_index) const;

  int order() const { return gramian_.order; }
  const ToeplitzGramian& gramian() const { return gramian_; }
  const Eigen::MatrixXd& dense_gramian() const { return dense_h_; }
  const PrecodingOperator& precoder() const { return *precoder_; }
  const PrecodingOperator& exact_operator() const { return exact_; }

 private:
  ToeplitzGramian gramian_;
  Eigen::MatrixXd dense_h_;
  PrecodingOperator exact_;
  std::optional<PrecodingOperator> circulant_;  // only in circulant mode
  const PrecodingOperator* precoder_;           // the mode-selected operator
};

struct BerPoint {
  double snr_db = 0.0;
  long bits = 0;
  long errors = 0;
  double ber = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double ber_theory = 0.0;  // Q(sqrt(2 Es_eff / N0))
};

/// Monte-Carlo BER of hard-decision BPSK over the precoded channel. Blocks
/// are independent substreams, so the parallel path is bit-identical to the
/// serial reference for a fixed (config, seed).
std::vector<BerPoint> run_ber(const TransmissionConfig& config,
                              const std::vector<double>& snr_grid_db, long min_bits,
                              bool parallel = true);
std::vector<BerPoint> run_ber_serial(const TransmissionConfig& config,
                                     const std::vector<double>& snr_grid_db,
                                     long min_bits);

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};

/// 95% Wilson score interval by default.
WilsonInterval wilson_interval(long errors, long trials, double z = 1.959963984540054);

}  // namespace ftn
