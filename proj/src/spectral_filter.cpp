#include "spectral_filter.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace ftn {

namespace {
// The FFTW planner is not thread-safe; execution via the new-array API is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwReal {
  double* p;
  explicit FftwReal(int n) : p(fftw_alloc_real(n)) {}
  ~FftwReal() { fftw_free(p); }
};
struct FftwComplex {
  fftw_complex* p;
  explicit FftwComplex(int n) : p(fftw_alloc_complex(n)) {}
  ~FftwComplex() { fftw_free(p); }
};
}  // namespace

SpectralFilter::SpectralFilter(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SpectralFilter: n must be >= 1");
  std::scoped_lock lock(planner_mutex());
  plan_real_ = fftw_alloc_real(n_);
  auto* spec = fftw_alloc_complex(n_ / 2 + 1);
  plan_spec_ = spec;
  fwd_ = fftw_plan_dft_r2c_1d(n_, plan_real_, spec, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_c2r_1d(n_, spec, plan_real_, FFTW_ESTIMATE);
  if (!fwd_ || !bwd_) throw std::runtime_error("SpectralFilter: fftw planning failed");
}

SpectralFilter::~SpectralFilter() {
  std::scoped_lock lock(planner_mutex());
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
  fftw_free(plan_real_);
  fftw_free(static_cast<fftw_complex*>(plan_spec_));
}

Eigen::VectorXd SpectralFilter::apply(const Eigen::VectorXd& x,
                                      const std::vector<double>& multipliers) const {
  if (x.size() != n_) throw std::invalid_argument("SpectralFilter: length mismatch");
  FftwReal in(n_);
  FftwComplex spec(n_ / 2 + 1);
  for (int i = 0; i < n_; ++i) in.p[i] = x[i];
  fftw_execute_dft_r2c(fwd_, in.p, spec.p);
  for (int m = 0; m <= n_ / 2; ++m) {
    spec.p[m][0] *= multipliers[m];
    spec.p[m][1] *= multipliers[m];
  }
  fftw_execute_dft_c2r(bwd_, spec.p, in.p);
  Eigen::VectorXd y(n_);
  for (int i = 0; i < n_; ++i) y[i] = in.p[i] / n_;
  return y;
}

}  // namespace ftn
