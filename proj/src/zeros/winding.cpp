#include "zeros/winding.hpp"

#include <cmath>

#include "geom/domain.hpp"

namespace blab {

Contour Contour::rectangle(Complex lo, Complex hi, int node_count) {
  if (!(hi.real() > lo.real()) || !(hi.imag() > lo.imag()))
    fail(ErrorCode::InvalidArgument, "contour rectangle is degenerate");
  if (node_count < 64) fail(ErrorCode::InvalidArgument, "contour needs >= 64 nodes");
  Contour c;
  c.kind = Kind::Rectangle;
  c.lo = lo;
  c.hi = hi;
  c.node_count = node_count;
  return c;
}

Contour Contour::circle(Complex center, double radius, int node_count) {
  if (!(radius > 0.0)) fail(ErrorCode::InvalidArgument, "contour radius must be positive");
  if (node_count < 64) fail(ErrorCode::InvalidArgument, "contour needs >= 64 nodes");
  Contour c;
  c.kind = Kind::Circle;
  c.center = center;
  c.radius = radius;
  c.node_count = node_count;
  return c;
}

Complex Contour::point(double t) const {
  if (kind == Kind::Circle) {
    const double a = kTwoPi * t;
    return center + radius * Complex{std::cos(a), std::sin(a)};
  }
  const double w = hi.real() - lo.real();
  const double hgt = hi.imag() - lo.imag();
  const double per = 2.0 * (w + hgt);
  double s = t * per;
  if (s < w) return Complex{lo.real() + s, lo.imag()};
  s -= w;
  if (s < hgt) return Complex{hi.real(), lo.imag() + s};
  s -= hgt;
  if (s < w) return Complex{hi.real() - s, hi.imag()};
  s -= w;
  return Complex{lo.real(), hi.imag() - s};
}

int winding_number(const FunctionSpec& f, const Contour& c, double tol) {
  constexpr int kMaxNodes = 1 << 22;
  if (const Domain* declared = f.declared_domain()) {
    for (int k = 0; k < 64; ++k)
      if (!declared->contains(c.point(static_cast<double>(k) / 64.0)))
        fail(ErrorCode::Precondition,
             "contour exits the function's declared domain");
  }
  int n = c.node_count;
  // A zero/pole pair pinched inside one inter-node gap can alias: the two
  // local pi-swings cancel and every measured step stays small. Doubling is
  // therefore continued until two consecutive levels pass the step threshold
  // with the same integer; the inserted midpoints land inside any pinch.
  bool have_previous = false;
  int previous = 0;
  while (true) {
    double total = 0.0;
    bool smooth = true;
    Complex prev = f.eval(c.point(0.0));
    if (std::abs(prev) <= tol)
      fail(ErrorCode::Precondition, "zero on contour (|f| <= tol at a node)");
    const Complex first = prev;
    for (int k = 1; k <= n; ++k) {
      const Complex cur = (k == n) ? first : f.eval(c.point(static_cast<double>(k) / n));
      if (k < n && std::abs(cur) <= tol)
        fail(ErrorCode::Precondition, "zero on contour (|f| <= tol at a node)");
      const double step = std::arg(cur / prev);
      if (!std::isfinite(step) || std::abs(step) >= kPi / 2.0) {
        smooth = false;
        break;
      }
      total += step;
      prev = cur;
    }
    if (smooth) {
      const int result = static_cast<int>(std::lround(total / kTwoPi));
      if (have_previous && previous == result) return result;
      have_previous = true;
      previous = result;
    } else {
      have_previous = false;
    }
    if (n >= kMaxNodes)
      fail(ErrorCode::Numeric,
           "argument continuation did not settle after node doubling");
    n *= 2;
  }
}

}  // namespace blab
