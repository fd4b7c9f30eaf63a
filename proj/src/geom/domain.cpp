#include "geom/domain.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "expr/parser.hpp"

namespace blab {

namespace {

// Circle through three points, or nullopt when they are collinear.
std::optional<Circle> circle_through(Complex p, Complex q, Complex r) {
  const double ax = p.real(), ay = p.imag();
  const double bx = q.real(), by = q.imag();
  const double cx = r.real(), cy = r.imag();
  const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double scale = std::max({std::abs(ax), std::abs(ay), std::abs(bx),
                                 std::abs(by), std::abs(cx), std::abs(cy), 1.0});
  if (std::abs(d) < 1e-12 * scale * scale) return std::nullopt;
  const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                     (cx * cx + cy * cy) * (ay - by)) / d;
  const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                     (cx * cx + cy * cy) * (bx - ax)) / d;
  Circle circle;
  circle.center = Complex{ux, uy};
  circle.radius = std::abs(p - circle.center);
  return circle;
}

}  // namespace

Domain Domain::unit_disk() {
  Domain d;
  d.kind_ = Kind::UnitDisk;
  return d;
}

Domain Domain::disk(Complex center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    fail(ErrorCode::Domain, "disk radius must be positive and finite");
  Domain d;
  d.kind_ = Kind::Disk;
  // z = r w + center
  d.a_ = Complex{radius, 0.0};
  d.b_ = center;
  d.c_ = Complex{0.0, 0.0};
  d.d_ = Complex{1.0, 0.0};
  return d;
}

Domain Domain::moebius_image(Complex a, Complex b, Complex c, Complex d) {
  if (std::abs(a * d - b * c) < 1e-300)
    fail(ErrorCode::Domain, "moebius map must have ad - bc != 0");
  Domain out;
  out.kind_ = Kind::MoebiusImageOfDisk;
  out.a_ = a;
  out.b_ = b;
  out.c_ = c;
  out.d_ = d;
  return out;
}

Domain Domain::whole_plane() {
  Domain d;
  d.kind_ = Kind::WholePlane;
  return d;
}

Domain Domain::parse(const std::string& text) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t at = s.find(sep, start);
      if (at == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, at - start));
      start = at + 1;
    }
    return parts;
  };
  if (text == "unitdisk") return unit_disk();
  if (text.rfind("disk:", 0) == 0) {
    auto parts = split(text.substr(5), ',');
    if (parts.size() != 2) fail(ErrorCode::Parse, "disk spec needs center,radius");
    return disk(parse_complex(parts[0]), parse_complex(parts[1]).real());
  }
  if (text.rfind("moebius:", 0) == 0) {
    auto parts = split(text.substr(8), ',');
    if (parts.size() != 4) fail(ErrorCode::Parse, "moebius spec needs a,b,c,d");
    return moebius_image(parse_complex(parts[0]), parse_complex(parts[1]),
                         parse_complex(parts[2]), parse_complex(parts[3]));
  }
  // A bare number means a disk of that radius about the origin.
  Complex r = parse_complex(text);
  if (r.imag() != 0.0 || !(r.real() > 0.0))
    fail(ErrorCode::Parse, "domain spec '" + text + "' not recognized");
  return disk(Complex{0.0, 0.0}, r.real());
}

Complex Domain::to_disk(Complex z) const {
  switch (kind_) {
    case Kind::UnitDisk: return z;
    case Kind::Disk: return (z - b_) / a_;
    case Kind::MoebiusImageOfDisk: {
      Complex den = -c_ * z + a_;
      return (d_ * z - b_) / den;
    }
    case Kind::WholePlane:
      fail(ErrorCode::Domain, "whole plane has no disk chart");
  }
  fail(ErrorCode::Domain, "corrupt domain");
}

Complex Domain::from_disk(Complex w) const {
  switch (kind_) {
    case Kind::UnitDisk: return w;
    case Kind::Disk: return a_ * w + b_;
    case Kind::MoebiusImageOfDisk: return (a_ * w + b_) / (c_ * w + d_);
    case Kind::WholePlane:
      fail(ErrorCode::Domain, "whole plane has no disk chart");
  }
  fail(ErrorCode::Domain, "corrupt domain");
}

double Domain::chart_abs(Complex z) const {
  if (kind_ == Kind::WholePlane) return 0.0;
  Complex w = to_disk(z);
  double a = std::abs(w);
  return std::isnan(a) ? kPosInf : a;
}

bool Domain::contains(Complex z) const {
  if (kind_ == Kind::WholePlane) return std::isfinite(z.real()) && std::isfinite(z.imag());
  return chart_abs(z) < 1.0;
}

std::optional<Circle> Domain::boundary_circle() const {
  switch (kind_) {
    case Kind::UnitDisk: return Circle{Complex{0.0, 0.0}, 1.0};
    case Kind::Disk: return Circle{b_, a_.real()};
    case Kind::MoebiusImageOfDisk:
      return circle_through(from_disk(Complex{1.0, 0.0}),
                            from_disk(Complex{0.0, 1.0}),
                            from_disk(Complex{-1.0, 0.0}));
    case Kind::WholePlane: return std::nullopt;
  }
  return std::nullopt;
}

double Domain::boundary_distance(Complex z) const {
  if (kind_ == Kind::WholePlane) return kPosInf;
  if (auto circle = boundary_circle()) {
    return std::abs(std::abs(z - circle->center) - circle->radius);
  }
  // Boundary is a line through phi^{-1}(1) and phi^{-1}(-1).
  Complex p = from_disk(Complex{1.0, 0.0});
  Complex q = from_disk(Complex{-1.0, 0.0});
  Complex dir = (q - p) / std::abs(q - p);
  Complex rel = z - p;
  return std::abs((rel - dir * (rel.real() * dir.real() + rel.imag() * dir.imag())));
}

void Domain::bounding_box(Complex* lo, Complex* hi) const {
  auto circle = boundary_circle();
  if (!circle)
    fail(ErrorCode::Domain, "domain is unbounded; no bounding box");
  // The disk chart can map onto the circle's exterior; reject that case by
  // checking that the chart center lands inside the circle.
  Complex center_image = from_disk(Complex{0.0, 0.0});
  if (std::abs(center_image - circle->center) > circle->radius)
    fail(ErrorCode::Domain, "domain is unbounded; no bounding box");
  *lo = circle->center - Complex{circle->radius, circle->radius};
  *hi = circle->center + Complex{circle->radius, circle->radius};
}

Domain Domain::with_inner(const Domain& d0) const {
  if (kind_ == Kind::WholePlane && d0.kind_ == Kind::WholePlane)
    fail(ErrorCode::Domain, "inner sub-domain must be a proper subset");
  auto inner_circle = d0.boundary_circle();
  if (!inner_circle)
    fail(ErrorCode::Domain, "inner sub-domain must have a circular boundary");
  const int samples = 512;
  double min_outer_dist = kPosInf;
  for (int k = 0; k < samples; ++k) {
    double t = kTwoPi * k / samples;
    Complex p = inner_circle->center +
                inner_circle->radius * Complex{std::cos(t), std::sin(t)};
    if (kind_ != Kind::WholePlane && chart_abs(p) >= 1.0)
      fail(ErrorCode::Domain,
           "inner sub-domain is not compactly contained (boundary exits the domain)");
    min_outer_dist = std::min(min_outer_dist, boundary_distance(p));
  }
  if (!(min_outer_dist > 0.0))
    fail(ErrorCode::Domain,
         "inner sub-domain is not compactly contained (touches the boundary)");
  Domain out = *this;
  out.inner_ = std::make_shared<Domain>(d0);
  return out;
}

double Domain::gap_width() const {
  if (!inner_) fail(ErrorCode::Domain, "domain has no inner sub-domain");
  auto inner_circle = inner_->boundary_circle();
  const int samples = 512;
  double gap = kPosInf;
  for (int k = 0; k < samples; ++k) {
    double t = kTwoPi * k / samples;
    Complex p = inner_circle->center +
                inner_circle->radius * Complex{std::cos(t), std::sin(t)};
    gap = std::min(gap, boundary_distance(p));
  }
  return gap;
}

Domain Domain::chart_subdisk(double rho) const {
  if (!(rho > 0.0) || rho > 1.0)
    fail(ErrorCode::InvalidArgument, "chart_subdisk needs 0 < rho <= 1");
  switch (kind_) {
    case Kind::UnitDisk:
      return disk(Complex{0.0, 0.0}, rho);
    case Kind::Disk:
      return disk(b_, a_.real() * rho);
    case Kind::MoebiusImageOfDisk:
      return moebius_image(a_ * rho, b_, c_ * rho, d_);
    case Kind::WholePlane:
      fail(ErrorCode::Domain, "whole plane has no chart sub-disk");
  }
  fail(ErrorCode::Domain, "corrupt domain");
}

double Domain::from_disk_jacobian(Complex w) const {
  switch (kind_) {
    case Kind::UnitDisk:
      return 1.0;
    case Kind::Disk:
      return a_.real() * a_.real();
    case Kind::MoebiusImageOfDisk: {
      const Complex den = c_ * w + d_;
      const double den2 = std::norm(den);
      const double det = std::abs(a_ * d_ - b_ * c_);
      return det * det / (den2 * den2);
    }
    case Kind::WholePlane:
      fail(ErrorCode::Domain, "whole plane has no chart");
  }
  fail(ErrorCode::Domain, "corrupt domain");
}

std::string Domain::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::UnitDisk: out = "unitdisk"; break;
    case Kind::Disk:
      out = "disk:" + format_complex(b_) + "," + format_g15(a_.real());
      break;
    case Kind::MoebiusImageOfDisk:
      out = "moebius:" + format_complex(a_) + "," + format_complex(b_) + "," +
            format_complex(c_) + "," + format_complex(d_);
      break;
    case Kind::WholePlane: out = "plane"; break;
  }
  if (inner_) out += " \\ " + inner_->describe();
  return out;
}

}  // namespace blab
