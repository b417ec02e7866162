#include "ftn/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ftn/capacity.hpp"
#include "ftn/channel.hpp"
#include "ftn/csv.hpp"
#include "ftn/errors.hpp"
#include "ftn/localization.hpp"
#include "ftn/parallel.hpp"
#include "ftn/precoder.hpp"

namespace ftn {

namespace {
constexpr double kPi = std::numbers::pi;

using Entries = std::vector<std::pair<std::string, std::string>>;

Entries base_metadata(const ExperimentContext& ctx, const std::string& experiment) {
  Entries e;
  e.emplace_back("experiment", experiment);
  e.emplace_back("tool_version", kVersion);
  if (ctx.seed) e.emplace_back("seed", std::to_string(*ctx.seed));
  e.emplace_back("threads", std::to_string(ctx.threads));
  for (const auto& kv : ctx.config.entries())
    e.emplace_back("config." + kv.first, kv.second);
  return e;
}

void write_sidecar(const std::filesystem::path& csv_path, const Entries& entries) {
  write_metadata(csv_path.string() + ".meta", entries);
}

int nyquist_block_length(int n, double rho) {
  return static_cast<int>(std::floor(n / rho + 1e-9));
}

std::uint64_t required_seed(ExperimentContext& ctx) {
  if (ctx.seed) {
    ctx.config.get_u64("seed", 0);  // consume a config seed if present
    return *ctx.seed;
  }
  if (ctx.config.has("seed")) return ctx.config.get_u64("seed");
  throw std::invalid_argument(
      "randomized experiments require an explicit seed (--seed or 'seed = ...')");
}

}  // namespace

void cmd_gramian(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  const std::string pulse_name = cfg.get_string("pulse", "rrc");
  const double rho = cfg.get_double("rho", 0.9);
  const double beta = cfg.get_double("beta", 0.22);
  const int n = cfg.get_int("n", 256);
  const std::string norm_name = cfg.get_string("normalization", "sqrt-rho");
  const int symbol_points = cfg.get_int("symbol_points", 2048);
  cfg.get_u64("seed", 0);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);
  if (symbol_points < 2) throw std::invalid_argument("symbol_points must be >= 2");
  RrcNormalization norm;
  if (norm_name == "sqrt-rho")
    norm = RrcNormalization::SqrtRho;
  else if (norm_name == "unit")
    norm = RrcNormalization::UnitEnergy;
  else
    throw std::invalid_argument("normalization must be 'sqrt-rho' or 'unit'");

  ToeplitzGramian g;
  if (pulse_name == "sinc")
    g = build_sinc_gramian(rho, n);
  else if (pulse_name == "rrc")
    g = build_rrc_gramian(rho, beta, n, norm);
  else
    throw std::invalid_argument("pulse must be 'sinc' or 'rrc'");

  const Entries meta = base_metadata(ctx, "gramian");

  CsvWriter coeffs(ctx.out_dir / "gramian_coefficients.csv", {"k", "c_k"});
  for (int k = 0; k < n; ++k) coeffs.row(k, g.coefficients[k]);
  write_sidecar(coeffs.path(), meta);

  CsvWriter sym(ctx.out_dir / "gramian_symbol.csv", {"z", "f_z"});
  for (int j = 0; j < symbol_points; ++j) {
    const double z = -kPi + 2.0 * kPi * (j + 1) / symbol_points;  // half-open grid
    sym.row(z, (*g.symbol)(z));
  }
  write_sidecar(sym.path(), meta);

  const Eigen::VectorXd lam = eigenvalues(g);
  CsvWriter eig(ctx.out_dir / "gramian_eigenvalues.csv", {"index", "lambda"});
  for (int i = 0; i < n; ++i) eig.row(i, lam[i]);
  write_sidecar(eig.path(), meta);

  CsvWriter summary(ctx.out_dir / "gramian_eigen_summary.csv",
                    {"n", "lambda_min", "lambda_max", "inf_f", "sup_f"});
  summary.row(n, lam[0], lam[n - 1], g.symbol->inf_value, g.symbol->sup_value);
  write_sidecar(summary.path(), meta);

  try {
    (void)inverse_sqrt_exact(g);
  } catch (const IllConditionedError& err) {
    const double beta_eff = pulse_name == "sinc" ? 0.0 : beta;
    std::ostringstream msg;
    msg << err.what() << "; (1+beta)*rho = " << (1.0 + beta_eff) * rho
        << (pulse_name == "sinc"
                ? " (sinc packing with rho < 1 has a vanishing symbol)"
                : " (precoding needs (1+beta)*rho >= 1 for a numerically well "
                  "behaved Gramian)");
    throw IllConditionedError(msg.str(), err.offending_eigenvalue());
  }
}

namespace {

void localize_sweep(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  const double W = cfg.get_double("W", 0.5);
  const int n = cfg.get_int("n", 20);
  const std::vector<double> rho_list =
      cfg.get_double_list("rho_list", {0.7, 0.81, 0.9, 1.0});
  std::vector<int> default_m(21);
  for (int i = 0; i <= 20; ++i) default_m[i] = i;
  const std::vector<int> m_values = cfg.get_int_list("m_values", default_m);
  const double worst_rho = cfg.get_double("worst_rho", 0.81);
  const int worst_m = cfg.get_int("worst_m", 15);
  const int waveform_points = cfg.get_int("waveform_points", 2001);
  cfg.get_u64("seed", 0);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);
  if (waveform_points < 2)
    throw std::invalid_argument("waveform_points must be >= 2");

  const PulseShape p = PulseShape::sinc(W);
  const double T = p.symbol_time_T;
  const Entries meta = base_metadata(ctx, "localize");

  CsvWriter sweep(ctx.out_dir / "localize_sweep.csv", {"rho", "n", "m", "lambda_max"});
  for (double rho : rho_list) {
    const auto points = outside_energy_sweep(rho, p, n, m_values);
    for (const auto& pt : points) sweep.row(rho, n, pt.m, pt.lambda_max);
    for (const auto& pt : points) {
      if (std::abs(rho - 0.81) < 1e-12 && pt.m == 15 && n == 20) {
        std::printf("claim check (rho=0.81, n=20, m=15): lambda_max=%.6f > 0.5 -> %s\n",
                    pt.lambda_max, pt.lambda_max > 0.5 ? "PASS" : "FAIL");
      }
    }
  }
  write_sidecar(sweep.path(), meta);

  // worst-case signal at the designated sweep point
  const TimeShiftGrid grid = TimeShiftGrid::from_nyquist_span(worst_rho, n, T);
  const Eigen::MatrixXd full = full_gramian(grid, p).dense();
  const Interval omega{-worst_m * T, (worst_m + n - 1) * T};
  const Eigen::MatrixXd win = windowed_gramian(grid, p, omega);
  const OutsideEnergy worst = max_energy_outside(full, win);
  CsvWriter wave(ctx.out_dir / "localize_worst_waveform.csv", {"t", "amplitude"});
  const double t0 = omega.a - 10.0 * T;
  const double t1 = omega.b + 10.0 * T;
  for (int i = 0; i < waveform_points; ++i) {
    const double t = t0 + (t1 - t0) * i / (waveform_points - 1);
    double x = 0.0;
    for (int k = 0; k < grid.count_m; ++k)
      x += worst.worst_coeffs[k] * p(t - grid.shift(k));
    wave.row(t, x);
  }
  write_sidecar(wave.path(), meta);
}

void localize_alternating(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  const double W = cfg.get_double("W", 0.5);
  const double rho = cfg.get_double("rho", 0.9);
  const int m = cfg.get_int("m", 400);
  const int waveform_points = cfg.get_int("waveform_points", 4001);
  cfg.get_u64("seed", 0);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);
  if (waveform_points < 2)
    throw std::invalid_argument("waveform_points must be >= 2");

  const PulseShape p = PulseShape::sinc(W);
  const double T = p.symbol_time_T;
  const TimeShiftGrid grid(rho, m, T);
  Eigen::VectorXd coeffs(m);
  for (int i = 0; i < m; ++i) coeffs[i] = (i + 1) % 2 == 0 ? 1.0 : -1.0;  // (-1)^k

  const Eigen::MatrixXd full = full_gramian(grid, p).dense();
  const Entries meta = base_metadata(ctx, "localize");
  CsvWriter conc(ctx.out_dir / "localize_concentration.csv",
                 {"interval", "a", "b", "concentration"});
  const Interval inner{-rho * T, rho * m * T};
  const Interval tight{0.0, rho * (m - 1) * T};
  for (const auto& [label, omega] :
       {std::pair<std::string, Interval>{"[-rho .. rho*m]", inner},
        std::pair<std::string, Interval>{"[0 .. rho*(m-1)]", tight}}) {
    const Eigen::MatrixXd win = windowed_gramian(grid, p, omega);
    conc.row(label, omega.a, omega.b, concentration_ratio(coeffs, full, win));
  }
  write_sidecar(conc.path(), meta);

  CsvWriter wave(ctx.out_dir / "localize_waveform.csv", {"t", "amplitude"});
  const double t0 = -20.0 * T;
  const double t1 = rho * m * T + 20.0 * T;
  for (int i = 0; i < waveform_points; ++i) {
    const double t = t0 + (t1 - t0) * i / (waveform_points - 1);
    double x = 0.0;
    for (int k = 0; k < m; ++k) x += coeffs[k] * p(t - grid.shift(k));
    wave.row(t, x);
  }
  write_sidecar(wave.path(), meta);
}

}  // namespace

void cmd_localize(ExperimentContext& ctx) {
  const std::string task = ctx.config.get_string("task", "sweep");
  if (task == "sweep")
    localize_sweep(ctx);
  else if (task == "alternating")
    localize_alternating(ctx);
  else
    throw std::invalid_argument("task must be 'sweep' or 'alternating'");
}

void cmd_approx(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  const double W = cfg.get_double("W", 0.5);
  const int n = cfg.get_int("n", 4);
  const std::vector<double> rho_list =
      cfg.get_double_list("rho_list", {0.5, 1.0 / 3.0, 0.25});
  const double center = cfg.get_double("target_center", 6.0);
  const int waveform_points = cfg.get_int("waveform_points", 1201);
  const double t_lo = cfg.get_double("t_min", -2.0);
  const double t_hi = cfg.get_double("t_max", 10.0);
  cfg.get_u64("seed", 0);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);
  if (!(t_lo < t_hi)) throw std::invalid_argument("t_min must be < t_max");
  if (waveform_points < 2)
    throw std::invalid_argument("waveform_points must be >= 2");

  const PulseShape p = PulseShape::sinc(W);
  const double T = p.symbol_time_T;
  BandLimitedTarget target;
  target.eval = [p, center](double t) { return p(t - center); };
  target.norm_sq = 1.0;
  target.inner_with_pulse_at = [p, center](double tau) {
    return unit_pulse_autocorrelation(p, center - tau);
  };

  const Entries meta = base_metadata(ctx, "approx");
  CsvWriter res(ctx.out_dir / "approx_residuals.csv",
                {"rho", "m", "residual_l2", "relative_error"});
  CsvWriter waves(ctx.out_dir / "approx_waveforms.csv",
                  {"rho", "t", "target", "approximation"});
  for (double rho : rho_list) {
    // basis centers rho*k*T for k = 0..floor(n/rho): they span [0, n*T]
    const int count = nyquist_block_length(n, rho) + 1;
    const TimeShiftGrid grid(rho, count, T);
    const LeastSquaresFit fit = ftn_least_squares(target, grid, p);
    const double res_l2 = std::sqrt(std::max(0.0, fit.residual_sq));
    res.row(rho, count, res_l2, fit.relative_l2);
    for (int i = 0; i < waveform_points; ++i) {
      const double t = t_lo + (t_hi - t_lo) * i / (waveform_points - 1);
      double approx = 0.0;
      for (int k = 0; k < count; ++k) approx += fit.coeffs[k] * p(t - grid.shift(k));
      waves.row(rho, t, target.eval(t), approx);
    }
  }
  write_sidecar(res.path(), meta);
  write_sidecar(waves.path(), meta);
}

void cmd_simulate(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  TransmissionConfig tc;
  tc.rho = cfg.get_double("rho", 0.9);
  tc.beta = cfg.get_double("beta", 0.22);
  tc.bandwidth_W = cfg.get_double("W", 0.5);
  const int n = cfg.get_int("n", 100);  // Nyquist-equivalent samples per block
  tc.block_m = cfg.get_int("block_m", nyquist_block_length(n, tc.rho));
  tc.Es = cfg.get_double("Es", 1.0);
  const std::string mode = cfg.get_string("precoder_mode", "exact-eigen");
  const std::string convention = cfg.get_string("energy_convention", "nyquist-block");
  const std::vector<double> snr_grid =
      cfg.get_double_list("snr_db_list", {0.0, 2.0, 4.0, 6.0, 8.0});
  const long min_bits = static_cast<long>(cfg.get_u64("min_bits", 100000));
  tc.seed = required_seed(ctx);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);

  if (mode == "exact-eigen")
    tc.precoder_mode = PrecodingOperator::Mode::ExactEigen;
  else if (mode == "circulant-fft")
    tc.precoder_mode = PrecodingOperator::Mode::CirculantFFT;
  else
    throw std::invalid_argument("precoder_mode must be 'exact-eigen' or 'circulant-fft'");
  if (convention == "nyquist-block")
    tc.energy_convention = EnergyConvention::NyquistBlock;
  else if (convention == "per-sample")
    tc.energy_convention = EnergyConvention::PerSample;
  else
    throw std::invalid_argument(
        "energy_convention must be 'nyquist-block' or 'per-sample'");

  const auto points = run_ber(tc, snr_grid, min_bits);

  Entries meta = base_metadata(ctx, "simulate");
  meta.emplace_back("rng", kRngId);
  meta.emplace_back("resolved_seed", std::to_string(tc.seed));
  meta.emplace_back("energy_convention", to_string(tc.energy_convention));
  meta.emplace_back("precoder_mode", to_string(tc.precoder_mode));
  meta.emplace_back("per_sample_energy", format_double(tc.per_sample_energy()));
  meta.emplace_back("block_m", std::to_string(tc.block_m));

  CsvWriter out(ctx.out_dir / "simulate_ber.csv",
                {"snr_db", "rho", "beta", "n", "precoder_mode", "bits", "errors",
                 "ber", "ci_low", "ci_high", "ber_q"});
  for (const auto& pt : points)
    out.row(pt.snr_db, tc.rho, tc.beta, tc.block_m, to_string(tc.precoder_mode),
            pt.bits, pt.errors, pt.ber, pt.ci_low, pt.ci_high, pt.ber_theory);
  write_sidecar(out.path(), meta);
}

void cmd_capacity(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  const std::string mode = cfg.get_string("mode", "rho-sweep");
  const double snr_ratio = cfg.get_double("snr_ratio", 10.0);  // P/(N0 W)
  const double W = cfg.get_double("W", 1.0);
  const double lo = cfg.get_double("min", mode == "rho-sweep" ? 0.5 : 0.0);
  const double hi = cfg.get_double("max", 1.0);
  const int points = cfg.get_int("points", 100);
  cfg.get_u64("seed", 0);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);
  if (points < 2) throw std::invalid_argument("points must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("min must be < max");
  if (!(snr_ratio >= 0.0)) throw std::invalid_argument("snr_ratio must be >= 0");

  const double N0 = 1.0;
  const double P = snr_ratio * N0 * W;
  CsvWriter out(ctx.out_dir / "capacity_sweep.csv",
                {"rho_or_beta", "snr_ratio", "capacity"});
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    CapacityPoint pt;
    if (mode == "rho-sweep")
      pt = CapacityPoint::naive_ftn(x, W, P, N0);
    else if (mode == "beta-sweep")
      pt = CapacityPoint::precoded_rrc(x, W, P, N0);
    else
      throw std::invalid_argument("mode must be 'rho-sweep' or 'beta-sweep'");
    out.row(x, snr_ratio, pt.value);
  }
  Entries meta = base_metadata(ctx, "capacity");
  if (mode == "rho-sweep")
    meta.emplace_back(
        "caveat",
        "rho-sweep rates assume time-localized signaling; the average-power "
        "premise behind them fails for rho < 1, so values above the rho = 1 "
        "row are not physically attainable");
  write_sidecar(out.path(), meta);
}

void cmd_effective_pulse(ExperimentContext& ctx) {
  auto& cfg = ctx.config;
  const double beta = cfg.get_double("beta", 0.22);
  const double W = cfg.get_double("W", 0.5);
  const std::vector<int> n_list = cfg.get_int_list("n_list", {8, 32, 128});
  const int t_points = cfg.get_int("waveform_points", 801);
  const double t_max = cfg.get_double("t_max", 6.0);
  cfg.get_u64("seed", 0);
  cfg.reject_unknown();
  set_thread_count(ctx.threads);
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
  if (t_points < 2) throw std::invalid_argument("waveform_points must be >= 2");

  const double T = 1.0 / (2.0 * W);
  const PulseShape p = PulseShape::root_raised_cosine(beta, T);
  const double t_prime = T / (1.0 + beta);  // rho = 1/(1+beta)
  const double w_prime = 1.0 / (2.0 * t_prime);

  const Entries meta = base_metadata(ctx, "effective-pulse");
  CsvWriter dist(ctx.out_dir / "effective_pulse_distance.csv", {"n", "l2_distance"});
  CsvWriter waves(ctx.out_dir / "effective_pulse_waveforms.csv",
                  {"n", "t", "xi", "reference"});
  std::vector<double> samples(t_points);
  for (int i = 0; i < t_points; ++i)
    samples[i] = -t_max + 2.0 * t_max * i / (t_points - 1);
  for (int n : n_list) {
    dist.row(n, effective_pulse_l2_distance(n, p, t_prime));
    const Eigen::VectorXd xi = effective_pulse(n, 0, p, t_prime, samples);
    for (int i = 0; i < t_points; ++i)
      waves.row(n, samples[i], xi[i], eval_sinc(samples[i], w_prime));
  }
  write_sidecar(dist.path(), meta);
  write_sidecar(waves.path(), meta);
}

}  // namespace ftn
