#pragma once

#include "common.hpp"
#include "geom/domain.hpp"

namespace blab {

// Green's function of the unit disk with pole z0, extended by 0 outside the
// closed disk. Nonnegative; fails at z == z0.
double green_unit_disk(Complex z, Complex z0);

// Green's function of a Moebius image of the disk via conformal invariance,
// extended by 0 outside. The whole plane is rejected.
double green_domain(const Domain& d, Complex z, Complex z0);

}  // namespace blab
