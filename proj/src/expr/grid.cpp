#include "expr/grid.hpp"

#include <cmath>

#include "json.hpp"

namespace blab {

namespace {

GridField make_frame(Complex lo, Complex hi, double h) {
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "grid spacing must be positive");
  if (!(hi.real() > lo.real()) || !(hi.imag() > lo.imag()))
    fail(ErrorCode::InvalidArgument, "grid rectangle is degenerate");
  GridField g;
  g.lo = lo;
  g.hi = hi;
  g.h = h;
  g.nx = static_cast<int>(std::floor((hi.real() - lo.real()) / h + 1e-9)) + 1;
  g.ny = static_cast<int>(std::floor((hi.imag() - lo.imag()) / h + 1e-9)) + 1;
  if (g.nx < 2 || g.ny < 2)
    fail(ErrorCode::InvalidArgument, "grid rectangle is degenerate");
  g.values.assign(static_cast<std::size_t>(g.nx) * g.ny, 0.0);
  g.mask.assign(static_cast<std::size_t>(g.nx) * g.ny, 1);
  return g;
}

void fill_grid(GridField& g, const std::function<double(Complex)>& field,
               const Domain* mask_domain) {
  const int nx = g.nx;
  parallel_for(g.ny, [&](std::int64_t row0, std::int64_t row1) {
    for (std::int64_t iy = row0; iy < row1; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const std::size_t at = static_cast<std::size_t>(iy) * nx + ix;
        const Complex z = g.node(ix, static_cast<int>(iy));
        if (mask_domain && !mask_domain->contains(z)) {
          g.mask[at] = 0;
          continue;
        }
        double v;
        try {
          v = field(z);
        } catch (const Error&) {
          g.mask[at] = 0;
          continue;
        }
        if (std::isnan(v) || v == kPosInf) {
          // Evaluation blew up (pole or outside validity); mask the node.
          g.mask[at] = 0;
          continue;
        }
        g.values[at] = v;
      }
    }
  });
}

}  // namespace

std::size_t GridField::masked_out_count() const {
  std::size_t n = 0;
  for (std::uint8_t m : mask)
    if (!m) ++n;
  return n;
}

double GridField::value_at(Complex z) const {
  const double fx = (z.real() - lo.real()) / h;
  const double fy = (z.imag() - lo.imag()) / h;
  int ix = static_cast<int>(std::floor(fx));
  int iy = static_cast<int>(std::floor(fy));
  ix = std::min(std::max(ix, 0), nx - 2);
  iy = std::min(std::max(iy, 0), ny - 2);
  const double tx = fx - ix, ty = fy - iy;
  if (tx < -1e-9 || tx > 1.0 + 1e-9 || ty < -1e-9 || ty > 1.0 + 1e-9)
    fail(ErrorCode::Eval, "grid lookup outside the sampled rectangle");
  const int i00 = index(ix, iy), i10 = index(ix + 1, iy);
  const int i01 = index(ix, iy + 1), i11 = index(ix + 1, iy + 1);
  if (!mask[i00] || !mask[i10] || !mask[i01] || !mask[i11])
    fail(ErrorCode::Eval, "grid lookup at a masked node");
  return (1 - tx) * (1 - ty) * values[i00] + tx * (1 - ty) * values[i10] +
         (1 - tx) * ty * values[i01] + tx * ty * values[i11];
}

GridField sample_grid(const FunctionSpec& f, Complex lo, Complex hi, double h,
                      SampleKind kind, const Domain* mask_domain) {
  GridField g = make_frame(lo, hi, h);
  const bool as_value =
      kind == SampleKind::RealValue || (kind == SampleKind::Auto && f.real_valued());
  fill_grid(
      g,
      [&f, as_value](Complex z) {
        return as_value ? f.eval(z).real() : f.log_modulus(z);
      },
      mask_domain);
  return g;
}

GridField sample_grid_field(const std::function<double(Complex)>& field,
                            Complex lo, Complex hi, double h,
                            const Domain* mask_domain) {
  GridField g = make_frame(lo, hi, h);
  fill_grid(g, field, mask_domain);
  return g;
}

std::string grid_to_csv(const GridField& g) {
  std::string out = "re,im,value\n";
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      const std::size_t at = static_cast<std::size_t>(iy) * g.nx + ix;
      if (!g.mask[at]) continue;
      const Complex z = g.node(ix, iy);
      out += format_g15(z.real());
      out += ',';
      out += format_g15(z.imag());
      out += ',';
      out += format_g15(g.values[at]);
      out += '\n';
    }
  return out;
}

std::string grid_meta_json(const GridField& g) {
  nlohmann::ordered_json j;
  j["rect"] = {{"lo", {{"re", round_g15(g.lo.real())}, {"im", round_g15(g.lo.imag())}}},
               {"hi", {{"re", round_g15(g.hi.real())}, {"im", round_g15(g.hi.imag())}}}};
  j["h"] = round_g15(g.h);
  j["mask_count"] = g.masked_out_count();
  return j.dump(2) + "\n";
}

}  // namespace blab
