#pragma once

#include <optional>
#include <vector>

#include "ftn/interval.hpp"

namespace ftn {

enum class PulseKind { Sinc, RootRaisedCosine };

/// sin(pi x)/(pi x) with a series evaluation near x = 0.
double normalized_sinc(double x);

/// Unit-energy sinc pulse sqrt(2W) * sinc(2W t).
double eval_sinc(double t, double W);

/// Unit-energy root-raised-cosine pulse with roll-off beta and symbol time T.
/// The removable singularities at t = 0 and |t| = T/(4 beta) are evaluated
/// through series expansions; beta = 0 degenerates to the sinc with W = 1/(2T).
double eval_rrc(double t, double beta, double T);

/// Fourier transform of the root-raised-cosine pulse (real, even):
/// sqrt(T) on the flat band, the sine roll-off branch up to (1+beta)*pi/T, 0 beyond.
double rrc_spectrum(double omega, double beta, double T);

/// Band-limited transmit pulse family: sinc or root-raised-cosine, unit energy.
struct PulseShape {
  PulseKind kind = PulseKind::Sinc;
  double bandwidth_W = 0.5;   // one-sided linear bandwidth; RRC occupies W(1+beta)
  double rolloff_beta = 0.0;  // in [0,1], 0 for sinc
  double symbol_time_T = 1.0; // T = 1/(2W)

  static PulseShape sinc(double W);
  static PulseShape root_raised_cosine(double beta, double T);

  double operator()(double t) const;
  /// Real even Fourier transform G(omega).
  double spectrum(double omega) const;
  /// Band edge: G(omega) == 0 for |omega| > spectrum_edge().
  double spectrum_edge() const;
  /// Points in (0, edge) where the spectrum changes branch (for quadrature).
  std::vector<double> spectrum_breakpoints() const;
};

/// Integral of g(t - tau1) g(t - tau2) over the window, or over all of R when
/// the window is empty. The full-line value is computed from the compactly
/// supported spectral product (no truncation); windowed values use adaptive
/// time-domain Gauss-Legendre. This is the oracle that validates the
/// closed-form Gramian coefficients.
double pulse_inner_product(const PulseShape& p, double tau1, double tau2,
                           std::optional<Interval> window = std::nullopt);

/// Uniform grid of pulse time shifts: pulse k (0-based) sits at k * shift_step.
struct TimeShiftGrid {
  double rho = 1.0;        // packing factor in (0,1]
  int count_m = 1;         // number of pulses, >= 1
  double shift_step = 1.0; // tau = rho * T seconds

  TimeShiftGrid(double rho_, int count, double T);
  /// m = floor(n/rho) pulses packed into the time of n Nyquist samples.
  static TimeShiftGrid from_nyquist_span(double rho_, int n, double T);

  double shift(int k) const { return shift_step * k; }
};

}  // namespace ftn
