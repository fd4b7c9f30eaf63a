#pragma once

#include <memory>
#include <optional>
#include <string>

#include "common.hpp"

namespace blab {

struct Circle {
  Complex center{0.0, 0.0};
  double radius = 0.0;
};

// A sub-domain of the extended plane realized as a Moebius image of the unit
// disk (or the whole finite plane), optionally carrying a compactly contained
// inner sub-domain. The chart phi maps the domain onto the unit disk.
class Domain {
 public:
  enum class Kind { UnitDisk, Disk, MoebiusImageOfDisk, WholePlane };

  static Domain unit_disk();
  static Domain disk(Complex center, double radius);
  // z = (a w + b) / (c w + d) with w in the unit disk; ad - bc must be nonzero
  // and the image must not be the whole plane.
  static Domain moebius_image(Complex a, Complex b, Complex c, Complex d);
  static Domain whole_plane();

  // "unitdisk", "disk:c,r", "moebius:a,b,c,d", or a bare radius meaning a
  // disk about the origin.
  static Domain parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool regular() const { return regular_; }

  bool contains(Complex z) const;          // strict interior
  double chart_abs(Complex z) const;       // |phi(z)|, may be +inf
  Complex to_disk(Complex z) const;        // phi
  Complex from_disk(Complex w) const;      // phi^{-1}
  // Euclidean distance to the boundary curve; +inf for the whole plane.
  double boundary_distance(Complex z) const;
  // Boundary as a circle in the plane; nullopt when it is a line or absent.
  std::optional<Circle> boundary_circle() const;
  // Axis-aligned box enclosing the domain; throws for unbounded domains.
  void bounding_box(Complex* lo, Complex* hi) const;

  // Returns a copy carrying d0 as inner sub-domain. Verifies numerically that
  // d0 is compactly contained: 512 samples of its boundary stay inside with
  // strictly positive distance to the outer boundary.
  Domain with_inner(const Domain& d0) const;
  const Domain* inner() const { return inner_.get(); }

  // Distance between the two boundaries (the width of the gap).
  double gap_width() const;

  // The sub-domain {z : |phi(z)| < rho} for 0 < rho <= 1.
  Domain chart_subdisk(double rho) const;
  // |d phi^{-1} / dw|^2 at w, the area Jacobian of the chart inverse.
  double from_disk_jacobian(Complex w) const;

  std::string describe() const;

 private:
  Domain() = default;

  Kind kind_ = Kind::UnitDisk;
  Complex a_{1.0, 0.0}, b_{0.0, 0.0}, c_{0.0, 0.0}, d_{1.0, 0.0};
  bool regular_ = true;
  std::shared_ptr<const Domain> inner_;
};

// Membership predicate for integration regions such as D minus D0.
struct RegionFilter {
  const Domain* inside = nullptr;    // require strict interior when set
  const Domain* outside = nullptr;   // require NOT in the strict interior
  bool contains(Complex z) const {
    if (inside && !inside->contains(z)) return false;
    if (outside && outside->contains(z)) return false;
    return true;
  }
  // D \ D0 for a domain carrying an inner sub-domain.
  static RegionFilter between(const Domain& d) {
    return RegionFilter{&d, d.inner()};
  }
  static RegionFilter all() { return RegionFilter{}; }
};

}  // namespace blab
