#pragma once

#include "common.hpp"
#include "expr/function_spec.hpp"

namespace blab {

// Closed contour for argument-principle counting. Node count is the initial
// sampling resolution and must be at least 64.
struct Contour {
  enum class Kind { Rectangle, Circle };

  static Contour rectangle(Complex lo, Complex hi, int node_count = 256);
  static Contour circle(Complex center, double radius, int node_count = 256);

  Complex point(double t) const;  // t in [0, 1)

  Kind kind = Kind::Circle;
  Complex lo{0.0, 0.0};  // rectangle corners
  Complex hi{0.0, 0.0};
  Complex center{0.0, 0.0};
  double radius = 0.0;
  int node_count = 256;
};

// Total argument increment of f along c divided by 2*pi, rounded to the
// nearest integer. Tracks the argument by continuation and doubles the node
// count until every consecutive increment is below pi/2.
int winding_number(const FunctionSpec& f, const Contour& c, double tol = 1e-12);

}  // namespace blab
