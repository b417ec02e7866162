#pragma once

#include <Eigen/Dense>
#include <vector>

// Forward declarations so fftw3.h stays out of public headers.
struct fftw_plan_s;

namespace ftn {

/// Applies y = IDFT(d .* DFT(x)) for real x and a real, even multiplier grid
/// (d[m] == d[n-m]); the output is real. Plans are created once; apply() is
/// safe to call concurrently (new-array execution on per-call buffers).
class SpectralFilter {
 public:
  explicit SpectralFilter(int n);
  ~SpectralFilter();
  SpectralFilter(const SpectralFilter&) = delete;
  SpectralFilter& operator=(const SpectralFilter&) = delete;

  int size() const { return n_; }

  /// multipliers holds one value per DFT bin m = 0..n-1; only bins 0..n/2 are
  /// read (real-input transform).
  Eigen::VectorXd apply(const Eigen::VectorXd& x,
                        const std::vector<double>& multipliers) const;

 private:
  int n_;
  fftw_plan_s* fwd_;
  fftw_plan_s* bwd_;
  double* plan_real_;
  void* plan_spec_;
};

}  // namespace ftn
