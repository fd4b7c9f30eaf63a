#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>

#include "common.hpp"
#include "expr/function_spec.hpp"
#include "expr/grid.hpp"
#include "geom/domain.hpp"

namespace blab {

// A real-valued field backed by a function spec (log-modulus for holomorphic
// specs, value for real expressions) or by a sampled grid.
class Field {
 public:
  explicit Field(FunctionSpec spec);
  explicit Field(GridField grid);
  // Forces log|f| semantics even for real-valued specs (constants).
  static Field log_modulus_of(FunctionSpec spec);

  double operator()(Complex z) const;
  const FunctionSpec* spec() const { return spec_.get(); }
  const GridField* grid() const { return grid_.get(); }
  // True when the field is log|f| of a holomorphic spec.
  bool logmod_of_holomorphic() const;
  std::string describe() const;

 private:
  std::shared_ptr<const FunctionSpec> spec_;
  std::shared_ptr<const GridField> grid_;
  bool force_logmod_ = false;
};

// Mean of M over the circle |z' - z| = r by the trapezoidal rule on `nodes`
// equispaced angles. Known zeros within r of the center have their log
// singularity integrated in closed form (classical circular mean of the log
// kernel) and only the smooth remainder is sampled.
double circular_mean(const Field& M, Complex z, double r, int nodes,
                     std::span<const ZeroAtom> known_zeros = {},
                     const Domain* domain = nullptr);

// Area average over the closed disk D(z, r) by Gauss-Legendre in radius and
// the trapezoidal rule in angle.
double disk_mean(const Field& M, Complex z, double r, int radial_nodes = 64,
                 int angular_nodes = 256, const Domain* domain = nullptr);

}  // namespace blab
