#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "ftn/config.hpp"

namespace ftn {

inline constexpr const char* kVersion = "0.1.0";

/// Inputs shared by every experiment: the validated key=value configuration,
/// the output directory, and the common command-line flags.
struct ExperimentContext {
  KeyValueConfig config;
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

// Each command validates its configuration (unknown keys are rejected before
// any computation), writes plot-ready CSV artifacts plus one metadata sidecar
// per CSV, and throws: std::invalid_argument on bad configuration,
// IllConditionedError / NumericFailure from the numeric layers.
void cmd_gramian(ExperimentContext& ctx);
void cmd_localize(ExperimentContext& ctx);
void cmd_approx(ExperimentContext& ctx);
void cmd_simulate(ExperimentContext& ctx);
void cmd_capacity(ExperimentContext& ctx);
void cmd_effective_pulse(ExperimentContext& ctx);

}  // namespace ftn
