#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"
#include "expr/function_spec.hpp"
#include "geom/domain.hpp"

namespace blab {

enum class SampleKind { Auto, LogModulus, RealValue };

// Uniform rectangular sample of an extended-real field. Row-major storage,
// rows run along the real axis. Masked-out nodes carry no value contract.
struct GridField {
  Complex lo{0.0, 0.0};
  Complex hi{0.0, 0.0};
  double h = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;   // nx * ny entries; -inf allowed at zeros
  std::vector<std::uint8_t> mask;  // 1 = valid

  int index(int ix, int iy) const { return iy * nx + ix; }
  Complex node(int ix, int iy) const {
    return Complex{lo.real() + ix * h, lo.imag() + iy * h};
  }
  std::size_t masked_out_count() const;

  // Bilinear interpolation over the four surrounding nodes; fails on masked
  // or out-of-range lookups. -inf corners propagate.
  double value_at(Complex z) const;
};

GridField sample_grid(const FunctionSpec& f, Complex lo, Complex hi, double h,
                      SampleKind kind = SampleKind::Auto,
                      const Domain* mask_domain = nullptr);

// Samples an arbitrary field callback (used for Green's functions).
GridField sample_grid_field(const std::function<double(Complex)>& field,
                            Complex lo, Complex hi, double h,
                            const Domain* mask_domain = nullptr);

// CSV rows "re,im,value" over unmasked nodes, deterministic row order.
std::string grid_to_csv(const GridField& g);
// JSON sidecar {rect, h, mask_count}.
std::string grid_meta_json(const GridField& g);

}  // namespace blab
