#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ftn {

/// Algorithm identifier recorded in run metadata.
inline constexpr const char* kRngId = "splitmix64-substream+mt19937_64+box-muller";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Engine for Monte-Carlo substream `index` of a seeded run. Substream seeds
/// are whitened through splitmix64 so neighbouring block indices do not
/// produce correlated engine states.
inline std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
}

/// Box-Muller Gaussian sampler on top of mt19937_64 uniforms; avoids the
/// implementation-defined std::normal_distribution so that a (seed, index)
/// pair reproduces bit-identical streams across standard libraries.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::mt19937_64 engine) : engine_(engine) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }  // [0, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ftn
