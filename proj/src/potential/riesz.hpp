#pragma once

#include <optional>
#include <vector>

#include "common.hpp"
#include "expr/grid.hpp"
#include "geom/domain.hpp"
#include "potential/means.hpp"
#include "potential/measure.hpp"
#include "zeros/locate.hpp"

namespace blab {

// Per-cell masses (1/2pi) * five-point Laplacian * h^2 at interior nodes with
// a fully valid stencil. Nodes whose stencil touches a -inf value are skipped
// and reported through `excluded` for winding-number patching.
MeasureEstimate riesz_measure_grid(const GridField& m,
                                   std::vector<Complex>* excluded = nullptr,
                                   double cell_floor = 1e-13);

enum class MeasureRoute { Auto, Atomic, Grid };

struct RieszOptions {
  double h = 1.0 / 256.0;
  LocateOptions locate;
  double cell_floor = 1e-13;
};

// Riesz measure of the field over the domain. The atomic route recognizes
// sums and differences of log-moduli of holomorphic specs and returns signed
// zero-counting atoms; the grid route samples the field and applies the
// discrete Laplacian, patching -inf nodes by winding counts when the field is
// backed by a holomorphic spec.
MeasureEstimate riesz_measure(const Field& m, const Domain& domain,
                              const RieszOptions& options = {},
                              MeasureRoute route = MeasureRoute::Auto);

// Disk-average recovery of the field value at z. Returns +inf when z falls
// outside the numeric dom set, that is, when the local log potential of the
// total variation of nu is -inf.
double recover_field_value(const Field& m, const MeasureEstimate& nu, Complex z,
                           double r);

// Signed weighted combination of holomorphic factors detected in a spec.
struct LogModTerm {
  FunctionSpec factor;
  double weight = 1.0;
};
std::optional<std::vector<LogModTerm>> decompose_log_modulus(const FunctionSpec& m);

}  // namespace blab
