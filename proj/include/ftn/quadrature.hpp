#pragma once

#include <functional>
#include <vector>

namespace ftn::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (order >= 2).
const Rule& gauss_legendre(int order);

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Legendre with interval bisection. A panel is accepted when
/// the one-panel estimate and the two-half estimate agree within panel_tol.
/// Throws NumericFailure when max_depth bisections are not enough.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double panel_tol = 1e-10, int max_depth = 48, int order = 15);

/// Fixed composite rule with panels no longer than max_panel.
double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, double max_panel, int order = 16);

/// Nodes and weights of the composite rule, shared by kernels that evaluate
/// many integrands on one grid.
void composite_nodes(double a, double b, double max_panel, int order,
                     std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace ftn::quad
