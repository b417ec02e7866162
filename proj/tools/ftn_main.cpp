#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftn/errors.hpp"
#include "ftn/experiments.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  std::vector<std::string> overrides;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "key = value configuration file");
  cmd->add_option("--out", flags.out_dir, "output directory for CSV artifacts");
  cmd->add_option("--seed", flags.seed, "64-bit seed for randomized experiments")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  cmd->add_option("--threads", flags.threads, "thread cap for parallel kernels");
  cmd->add_option("--set", flags.overrides,
                  "config override key=value (wins over --config)");
}

ftn::ExperimentContext make_context(const CommonFlags& flags) {
  ftn::ExperimentContext ctx;
  if (!flags.config_path.empty())
    ctx.config = ftn::KeyValueConfig::from_file(flags.config_path);
  for (const auto& kv : flags.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    ctx.config.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  ctx.out_dir = flags.out_dir;
  if (flags.seed_set) ctx.seed = flags.seed;
  ctx.threads = flags.threads;
  return ctx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"faster-than-Nyquist signaling toolkit"};
  app.set_version_flag("--version", ftn::kVersion);
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    void (*run)(ftn::ExperimentContext&);
  };
  const Command commands[] = {
      {"gramian", "pulse Gramian coefficients, symbol and eigenvalue summary",
       ftn::cmd_gramian},
      {"localize", "time-localization sweeps and concentration ratios",
       ftn::cmd_localize},
      {"approx", "least-squares approximation of a band-limited target",
       ftn::cmd_approx},
      {"simulate", "Monte-Carlo BER of precoded BPSK over the matched-filter channel",
       ftn::cmd_simulate},
      {"capacity", "capacity formulas and the packing-paradox sweep",
       ftn::cmd_capacity},
      {"effective-pulse", "effective pulses of the precoded transmission",
       ftn::cmd_effective_pulse},
  };

  std::vector<CommonFlags> flags(std::size(commands));
  for (size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].help);
    add_common_flags(sub, flags[i]);
    sub->callback([&, i]() {
      ftn::ExperimentContext ctx = make_context(flags[i]);
      commands[i].run(ctx);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ftn::IllConditionedError& e) {
    std::fprintf(stderr, "ill-conditioned: %s\n", e.what());
    return ftn::kExitIllConditioned;
  } catch (const ftn::NumericFailure& e) {
    std::fprintf(stderr, "numeric failure: %s (achieved error %g)\n", e.what(),
                 e.achieved_error());
    return ftn::kExitNumericFailure;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid configuration: %s\n", e.what());
    return ftn::kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ftn::kExitFailure;
  }
  return ftn::kExitOk;
}
