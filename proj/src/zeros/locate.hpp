#pragma once

#include <string>
#include <vector>

#include "common.hpp"
#include "expr/function_spec.hpp"
#include "geom/domain.hpp"
#include "potential/measure.hpp"

namespace blab {

struct ZeroEntry {
  Complex location{0.0, 0.0};
  int multiplicity = 1;
  double refinement_error = 0.0;
};

// Located zeros inside a region, sorted by descending distance to the region
// boundary so truncated sums walk toward the boundary deterministically.
struct ZeroSequence {
  std::vector<ZeroEntry> entries;
  Domain region = Domain::unit_disk();

  int total_multiplicity() const;
  void sort_canonical();
};

struct LocateOptions {
  double h_min = 1e-3;        // multiplicity collapse scale
  double refine_tol = 1e-10;  // Newton / bisection target
  double contour_tol = 1e-12;
  int max_boxes = 200000;
};

// Recursive quadtree over the region's bounding box. Winding-0 boxes are
// discarded, winding-1 boxes refined by damped Newton with a bisection
// fallback, and boxes of winding >= 2 split until separated or smaller than
// h_min (then emitted at the box center with the box diagonal as error).
// Boxes containing a known pole of f are split blindly, never counted.
ZeroSequence locate_zeros(const FunctionSpec& f, const Domain& region,
                          const LocateOptions& options = {});

// Atomic measure with mass = multiplicity at each entry.
MeasureEstimate zero_counting_measure(const ZeroSequence& z);

// Builds a sequence from externally supplied entries (zero lists given
// without a function); entries must lie strictly inside the region.
ZeroSequence zero_sequence_from_entries(std::vector<ZeroEntry> entries,
                                        const Domain& region);

std::string zeroseq_to_json(const ZeroSequence& z);
ZeroSequence zeroseq_from_json(const std::string& text, const Domain& region);
std::string zeroseq_to_csv(const ZeroSequence& z);

}  // namespace blab
