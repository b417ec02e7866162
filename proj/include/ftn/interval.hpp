#pragma once

#include <stdexcept>

namespace ftn {

/// Closed time interval [a, b], a < b.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) throw std::invalid_argument("Interval requires a < b");
  }
  double length() const { return b - a; }
};

}  // namespace ftn
