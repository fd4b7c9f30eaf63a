#pragma once

#include <string>
#include <vector>

#include "common.hpp"
#include "geom/domain.hpp"

namespace blab {

struct MassAtom {
  Complex location{0.0, 0.0};
  double mass = 0.0;
};

struct MassCell {
  Complex lo{0.0, 0.0};
  Complex hi{0.0, 0.0};
  double mass = 0.0;
  Complex center() const { return 0.5 * (lo + hi); }
};

// Atomic point masses plus optional per-cell grid masses. Cells must not
// overlap; unsigned measures carry only nonnegative masses.
struct MeasureEstimate {
  std::vector<MassAtom> atoms;
  std::vector<MassCell> cells;
  bool is_signed = false;

  double total_mass() const;
  double total_variation() const;
  void check_unsigned() const;
};

struct ChargeSplit {
  MeasureEstimate positive;
  MeasureEstimate negative;
};

// Per-carrier sign split; positive - negative reproduces the input exactly
// and the two supports are disjoint.
ChargeSplit hahn_jordan_split(const MeasureEstimate& nu);

// Sum of v over atoms and cell centers inside the filter. Fails when v is
// infinite at a carrier of nonzero mass.
double integrate_measure(const std::function<double(Complex)>& v,
                         const MeasureEstimate& nu, const RegionFilter& filter);

// integral of log|z' - z| against |nu| over D(z, r); -inf exactly when an
// atom of |nu| sits at z. The cell containing z integrates the log kernel
// exactly against constant density.
double log_potential_at(const MeasureEstimate& nu, Complex z, double r);

std::string measure_to_json(const MeasureEstimate& nu);
MeasureEstimate measure_from_json(const std::string& text);
std::string measure_to_csv(const MeasureEstimate& nu);

}  // namespace blab
