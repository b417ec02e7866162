// Wall-time comparison of the OpenMP kernels against their serial references.
// The outputs are also checked for agreement, so a mismatch shows up here
// before it would in ctest.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "ftn/channel.hpp"
#include "ftn/localization.hpp"
#include "ftn/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, double max_diff) {
  std::printf("%-24s serial %9.1f ms   omp %9.1f ms   speedup %5.2fx   max|diff| %g\n",
              kernel, serial_ms, parallel_ms, serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("threads available: %d\n", ftn::max_threads());

  {
    const ftn::PulseShape p = ftn::PulseShape::sinc(0.5);
    const int m = quick ? 60 : 200;
    const ftn::TimeShiftGrid grid(0.9, m, p.symbol_time_T);
    const ftn::Interval omega{-1.0, 0.9 * m + 1.0};
    Eigen::MatrixXd serial, parallel;
    const double ts = time_ms([&] { serial = ftn::windowed_gramian_serial(grid, p, omega); });
    const double tp = time_ms([&] { parallel = ftn::windowed_gramian(grid, p, omega); });
    report("windowed_gramian", ts, tp, (serial - parallel).cwiseAbs().maxCoeff());
  }

  {
    ftn::TransmissionConfig cfg;
    cfg.rho = 0.9;
    cfg.beta = 0.22;
    cfg.block_m = 128;
    cfg.seed = 42;
    const std::vector<double> grid = {4.0};
    const long bits = quick ? 40000 : 400000;
    std::vector<ftn::BerPoint> serial, parallel;
    const double ts = time_ms([&] { serial = ftn::run_ber_serial(cfg, grid, bits); });
    const double tp = time_ms([&] { parallel = ftn::run_ber(cfg, grid, bits); });
    const double diff = std::abs(serial[0].ber - parallel[0].ber) +
                        std::abs(static_cast<double>(serial[0].errors - parallel[0].errors));
    report("run_ber", ts, tp, diff);
  }

  {
    const ftn::PulseShape p = ftn::PulseShape::sinc(0.5);
    std::vector<int> ms;
    for (int m = 0; m <= (quick ? 10 : 20); ++m) ms.push_back(m);
    std::vector<ftn::OutsideEnergyPoint> serial, parallel;
    const double ts =
        time_ms([&] { serial = ftn::outside_energy_sweep(0.81, p, 20, ms, false); });
    const double tp =
        time_ms([&] { parallel = ftn::outside_energy_sweep(0.81, p, 20, ms, true); });
    double diff = 0.0;
    for (size_t i = 0; i < serial.size(); ++i)
      diff = std::max(diff, std::abs(serial[i].lambda_max - parallel[i].lambda_max));
    report("outside_energy_sweep", ts, tp, diff);
  }

  return 0;
}
