#include "potential/green.hpp"

#include <cmath>

namespace blab {

double green_unit_disk(Complex z, Complex z0) {
  if (std::abs(z0) >= 1.0)
    fail(ErrorCode::Precondition, "green pole must lie strictly inside the unit disk");
  if (std::abs(z) >= 1.0) return 0.0;
  if (z == z0) fail(ErrorCode::Precondition, "green evaluated at its pole");
  const double value = std::log(std::abs(1.0 - std::conj(z0) * z)) -
                       std::log(std::abs(z - z0));
  return value > 0.0 ? value : 0.0;
}

double green_domain(const Domain& d, Complex z, Complex z0) {
  if (d.kind() == Domain::Kind::WholePlane)
    fail(ErrorCode::Domain, "no Green's function for the whole plane");
  if (d.kind() == Domain::Kind::UnitDisk) return green_unit_disk(z, z0);
  const Complex w0 = d.to_disk(z0);
  if (!(std::abs(w0) < 1.0))
    fail(ErrorCode::Precondition, "green pole must lie inside the domain");
  const Complex w = d.to_disk(z);
  const double aw = std::abs(w);
  if (!(aw < 1.0)) return 0.0;  // includes NaN from chart poles
  return green_unit_disk(w, w0);
}

}  // namespace blab
