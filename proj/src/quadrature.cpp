#include "ftn/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "ftn/errors.hpp"

namespace ftn::quad {

namespace {

Rule compute_rule(int order) {
  // Legendre roots by Newton iteration from the Chebyshev-like initial guess.
  Rule r;
  r.nodes.resize(order);
  r.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Evaluate P_order(x) and its derivative by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[order - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[order - 1 - i] = w;
  }
  return r;
}

}  // namespace

const Rule& gauss_legendre(int order) {
  if (order < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
  static std::mutex mtx;
  static std::map<int, Rule> cache;
  std::scoped_lock lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

namespace {

double panel_estimate(const std::function<double(double)>& f, double a,
                      double b, const Rule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

struct Adaptive {
  const std::function<double(double)>& f;
  const Rule& rule;
  double panel_tol;
  int max_depth;
  double error_acc = 0.0;

  double run(double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel_estimate(f, a, mid, rule);
    const double right = panel_estimate(f, mid, b, rule);
    const double diff = std::abs(left + right - whole);
    if (diff <= panel_tol) {
      error_acc += diff;
      return left + right;
    }
    if (depth >= max_depth)
      throw NumericFailure("adaptive quadrature did not converge", diff);
    return run(a, mid, left, depth + 1) + run(mid, b, right, depth + 1);
  }
};

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double panel_tol, int max_depth, int order) {
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (a == b) return {0.0, 0.0};
  const Rule& rule = gauss_legendre(order);
  Adaptive ad{f, rule, panel_tol, max_depth};
  const double whole = panel_estimate(f, a, b, rule);
  const double value = ad.run(a, b, whole, 0);
  return {value, ad.error_acc};
}

void composite_nodes(double a, double b, double max_panel, int order,
                     std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  if (!(b > a)) return;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
  const Rule& rule = gauss_legendre(order);
  nodes.reserve(static_cast<size_t>(panels) * order);
  weights.reserve(static_cast<size_t>(panels) * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < order; ++i) {
      nodes.push_back(mid + 0.5 * h * rule.nodes[i]);
      weights.push_back(0.5 * h * rule.weights[i]);
    }
  }
}

double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, double max_panel, int order) {
  std::vector<double> nodes, weights;
  composite_nodes(a, b, max_panel, order, nodes, weights);
  double acc = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

}  // namespace ftn::quad
