#include "conditions/test_function.hpp"

#include <algorithm>
#include <cmath>

#include "expr/parser.hpp"
#include "potential/green.hpp"

namespace blab {

namespace {

double ipow_real(double base, int e) {
  double acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

double power_of(double x, double q) {
  const double rounded = std::round(q);
  if (rounded == q && rounded >= 0 && rounded < 4096)
    return ipow_real(x, static_cast<int>(rounded));
  return std::pow(x, q);
}

}  // namespace

TestFunction::TestFunction(Kind kind, Domain domain, double scale)
    : kind_(kind), domain_(std::move(domain)), scale_(scale) {
  if (!domain_.inner())
    fail(ErrorCode::Precondition, "test function needs a domain with an inner D0");
  if (!(scale_ > 0.0))
    fail(ErrorCode::InvalidArgument, "test function scale must be positive");
}

TestFunction TestFunction::log_inverse(const Domain& domain, double scale) {
  TestFunction v(Kind::LogInverse, domain, scale);
  const Complex chart_center = domain.from_disk(Complex{0.0, 0.0});
  if (!domain.inner()->contains(chart_center))
    fail(ErrorCode::Precondition,
         "log-inverse pole (the chart center) must lie inside D0");
  v.flags_.vanishes_on_boundary = true;
  v.flags_.normal_derivative_vanishes = false;
  v.compute_b();
  return v;
}

TestFunction TestFunction::green_pole(const Domain& domain, Complex pole, double scale) {
  TestFunction v(Kind::GreenPole, domain, scale);
  if (!domain.inner()->contains(pole))
    fail(ErrorCode::Precondition, "green pole must lie inside D0");
  v.pole_ = pole;
  v.flags_.vanishes_on_boundary = true;
  v.flags_.normal_derivative_vanishes = false;
  v.compute_b();
  return v;
}

TestFunction TestFunction::boundary_power(const Domain& domain, double exponent,
                                          double scale) {
  TestFunction v(Kind::BoundaryPower, domain, scale);
  if (!(exponent >= 2.0))
    fail(ErrorCode::InvalidArgument, "boundary power exponent must be >= 2");
  v.exponent_ = exponent;
  // Subharmonic only where |phi| >= 1/sqrt(q); that core must sit inside D0.
  const double core = 1.0 / std::sqrt(exponent);
  for (int k = 0; k < 512; ++k) {
    const double a = kTwoPi * k / 512;
    const Complex z = domain.from_disk(core * Complex{std::cos(a), std::sin(a)});
    if (!domain.inner()->contains(z))
      fail(ErrorCode::Precondition,
           "boundary power needs D0 to cover the chart disk of radius 1/sqrt(q)");
  }
  v.flags_.vanishes_on_boundary = true;
  v.flags_.normal_derivative_vanishes = true;
  v.compute_b();
  return v;
}

TestFunction TestFunction::custom(const Domain& domain, FunctionSpec spec, double scale) {
  TestFunction v(Kind::Custom, domain, scale);
  v.spec_ = std::move(spec);
  v.compute_b();
  return v;
}

TestFunction TestFunction::from_text(const std::string& kind_text, const Domain& domain,
                                     double scale) {
  if (kind_text == "loginv") return log_inverse(domain, scale);
  if (kind_text.rfind("greenpole:", 0) == 0)
    return green_pole(domain, parse_complex(kind_text.substr(10)), scale);
  if (kind_text.rfind("power:", 0) == 0)
    return boundary_power(domain, parse_complex(kind_text.substr(6)).real(), scale);
  fail(ErrorCode::Parse, "unknown test function '" + kind_text +
                             "' (expected loginv, greenpole:z0 or power:q)");
}

double TestFunction::eval(Complex z) const {
  switch (kind_) {
    case Kind::LogInverse: {
      const double w = domain_.chart_abs(z);
      if (w >= 1.0) return 0.0;
      if (w == 0.0) return kPosInf;
      return -scale_ * std::log(w);
    }
    case Kind::GreenPole: {
      if (z == pole_) return kPosInf;
      return scale_ * green_domain(domain_, z, pole_);
    }
    case Kind::BoundaryPower: {
      const double w = domain_.chart_abs(z);
      if (w >= 1.0) return 0.0;
      return scale_ * power_of(1.0 - w * w, exponent_);
    }
    case Kind::Custom:
      return scale_ * spec_->field_value(z);
  }
  fail(ErrorCode::Eval, "corrupt test function");
}

double TestFunction::eval_smooth(Complex z) const {
  switch (kind_) {
    case Kind::LogInverse: {
      const double w = domain_.chart_abs(z);
      if (w == 0.0) return kPosInf;
      return -scale_ * std::log(w);
    }
    case Kind::BoundaryPower: {
      const double w = domain_.chart_abs(z);
      return scale_ * power_of(1.0 - w * w, exponent_);
    }
    default:
      return eval(z);
  }
}

void TestFunction::compute_b() {
  auto circle = domain_.inner()->boundary_circle();
  if (!circle)
    fail(ErrorCode::Domain, "inner sub-domain must have a circular boundary");
  // Closed forms when D0 is concentric in the chart; otherwise a sampled sup
  // inflated by 1% as a Lipschitz allowance.
  bool concentric = true;
  double level = 0.0;
  for (int k = 0; k < 16 && concentric; ++k) {
    const double a = kTwoPi * k / 16;
    const Complex p =
        circle->center + circle->radius * Complex{std::cos(a), std::sin(a)};
    const double w = domain_.chart_abs(p);
    if (k == 0)
      level = w;
    else if (std::abs(w - level) > 1e-12)
      concentric = false;
  }
  if (concentric && kind_ == Kind::LogInverse) {
    b_ = -scale_ * std::log(level);
    return;
  }
  if (concentric && kind_ == Kind::BoundaryPower) {
    b_ = scale_ * power_of(1.0 - level * level, exponent_);
    return;
  }
  double sup = 0.0;
  for (int k = 0; k < 512; ++k) {
    const double a = kTwoPi * k / 512;
    const Complex p =
        circle->center + circle->radius * Complex{std::cos(a), std::sin(a)};
    sup = std::max(sup, eval(p));
  }
  b_ = sup * 1.01;
}

TestFunction TestFunction::scaled(double factor) const {
  if (!(factor > 0.0))
    fail(ErrorCode::InvalidArgument, "test function scale factor must be positive");
  TestFunction out = *this;
  out.scale_ *= factor;
  out.b_ *= factor;
  return out;
}

std::string TestFunction::describe() const {
  std::string base;
  switch (kind_) {
    case Kind::LogInverse: base = "loginv"; break;
    case Kind::GreenPole: base = "greenpole:" + format_complex(pole_); break;
    case Kind::BoundaryPower: base = "power:" + format_g15(exponent_); break;
    case Kind::Custom: base = "custom:" + spec_->source_text(); break;
  }
  if (scale_ != 1.0) base += " *" + format_g15(scale_);
  return base;
}

ConditionReport ValidationReport::to_report(const TestFunction& v) const {
  ConditionReport r;
  r.condition = "validate-v";
  r.verdict = class_member() ? Verdict::Holds : Verdict::Fails;
  r.lhs = worst_negativity;
  r.rhs = worst_laplacian_defect;
  r.constants["b"] = b_value;
  r.tolerances["tol_subharmonic"] = tol_subharmonic;
  r.grid_h = grid_h;
  r.grid_nodes = checked_nodes;
  r.inputs.emplace_back("v", v.describe());
  r.inputs.emplace_back("domain", v.domain().describe());
  r.extra["checks"] = {{"nonnegative", nonnegative},
                       {"subharmonic", subharmonic},
                       {"boundary_limit_zero", boundary_limit_zero},
                       {"normal_derivative_zero", normal_derivative_zero}};
  r.extra["boundary_sup"] = round_g15(boundary_sup);
  r.extra["normal_derivative_max"] = round_g15(normal_derivative_max);
  return r;
}

ValidationReport validate_test_function(const TestFunction& v, double h) {
  const Domain& d = v.domain();
  const double gap = d.gap_width();
  if (!(h > 0.0) || gap / h < 32.0)
    fail(ErrorCode::Precondition,
         "validation grid must resolve the gap with at least 32 nodes");
  ValidationReport rep;
  rep.grid_h = h;
  rep.b_value = v.b();

  Complex lo, hi;
  d.bounding_box(&lo, &hi);
  const int nx = static_cast<int>((hi.real() - lo.real()) / h) + 1;
  const int ny = static_cast<int>((hi.imag() - lo.imag()) / h) + 1;
  const RegionFilter region = RegionFilter::between(d);

  // Sample once; reuse for the sign and Laplacian passes.
  std::vector<double> vals(static_cast<std::size_t>(nx) * ny, kPosInf);
  std::vector<std::uint8_t> in_region(static_cast<std::size_t>(nx) * ny, 0);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const Complex z{lo.real() + ix * h, lo.imag() + iy * h};
      if (!region.contains(z)) continue;
      const std::size_t at = static_cast<std::size_t>(iy) * nx + ix;
      in_region[at] = 1;
      vals[at] = v.eval(z);
    }

  double vmin = 0.0, vmax = 0.0;
  long checked = 0;
  for (std::size_t at = 0; at < vals.size(); ++at) {
    if (!in_region[at] || !std::isfinite(vals[at])) continue;
    vmin = std::min(vmin, vals[at]);
    vmax = std::max(vmax, std::abs(vals[at]));
    ++checked;
  }
  rep.checked_nodes = checked;
  rep.worst_negativity = vmin;
  rep.nonnegative = vmin >= -1e-9 * (1.0 + vmax);

  // Raw five-point stencil sums; at this scaling the O(h^4) discretization
  // error of a harmonic function stays below tol_sh.
  const double tol_sh = 1e-6 * (1.0 + vmax);
  rep.tol_subharmonic = tol_sh;
  double worst_lap = 0.0;
  for (int iy = 1; iy + 1 < ny; ++iy)
    for (int ix = 1; ix + 1 < nx; ++ix) {
      const std::size_t c = static_cast<std::size_t>(iy) * nx + ix;
      const std::size_t l = c - 1, r = c + 1;
      const std::size_t dn = c - nx, up = c + nx;
      if (!in_region[c] || !in_region[l] || !in_region[r] || !in_region[dn] ||
          !in_region[up])
        continue;
      const double lap =
          vals[l] + vals[r] + vals[dn] + vals[up] - 4.0 * vals[c];
      if (!std::isfinite(lap)) continue;
      worst_lap = std::min(worst_lap, lap);
    }
  rep.worst_laplacian_defect = worst_lap;
  rep.subharmonic = worst_lap >= -tol_sh;

  // Boundary limit through shrinking collars.
  const double delta_min = std::min(gap / 64.0, 1e-3);
  double sup_near = 0.0;
  bool curve_ok = true;
  try {
    sup_near = sup_on_offset_curve(v, delta_min);
    double sup_prev = sup_on_offset_curve(v, delta_min * 8.0);
    rep.boundary_limit_zero =
        sup_near <= 1e-2 * (1.0 + v.b()) && sup_near <= sup_prev + 1e-12;
  } catch (const Error&) {
    curve_ok = false;
    rep.boundary_limit_zero = false;
  }
  rep.boundary_sup = curve_ok ? sup_near : kPosInf;

  // One-sided normal derivative at the outer boundary.
  double nd_max = 0.0;
  if (curve_ok) {
    auto circle = d.boundary_circle();
    const bool region_inside = d.contains(circle->center);
    const double t = 1e-6 * std::max(1.0, circle->radius);
    for (int k = 0; k < 64; ++k) {
      const double a = kTwoPi * k / 64;
      const Complex dir{std::cos(a), std::sin(a)};
      const Complex zb = circle->center + circle->radius * dir;
      const Complex inward = region_inside ? -dir : dir;
      const double v_in = v.eval(zb + t * inward);
      const double v_bd = v.eval(zb);
      if (!std::isfinite(v_in) || !std::isfinite(v_bd)) continue;
      nd_max = std::max(nd_max, std::abs((v_in - v_bd) / t));
    }
  }
  rep.normal_derivative_max = nd_max;
  rep.normal_derivative_zero = curve_ok && nd_max < 1e-3;
  return rep;
}

TestFunction make_test_function(const std::string& kind_text, const Domain& domain,
                                double scale, double validation_h) {
  TestFunction v = TestFunction::from_text(kind_text, domain, scale);
  const double h = validation_h > 0.0 ? validation_h : domain.gap_width() / 48.0;
  ValidationReport rep = validate_test_function(v, h);
  if (!rep.class_member())
    fail(ErrorCode::Validation,
         "test function fails class membership (nonnegative=" +
             std::to_string(rep.nonnegative) +
             ", subharmonic=" + std::to_string(rep.subharmonic) +
             ", boundary_limit_zero=" + std::to_string(rep.boundary_limit_zero) + ")");
  TestFunction::Flags flags;
  flags.vanishes_on_boundary = rep.boundary_limit_zero;
  flags.normal_derivative_vanishes = rep.normal_derivative_zero;
  v.set_flags(flags);
  return v;
}

TestFunction make_custom_test_function(const Domain& domain, FunctionSpec spec,
                                       double scale, double validation_h) {
  TestFunction v = TestFunction::custom(domain, std::move(spec), scale);
  const double h = validation_h > 0.0 ? validation_h : domain.gap_width() / 48.0;
  ValidationReport rep = validate_test_function(v, h);
  if (!rep.class_member())
    fail(ErrorCode::Validation,
         "custom test function fails class membership (nonnegative=" +
             std::to_string(rep.nonnegative) +
             ", subharmonic=" + std::to_string(rep.subharmonic) +
             ", boundary_limit_zero=" + std::to_string(rep.boundary_limit_zero) + ")");
  TestFunction::Flags flags;
  flags.vanishes_on_boundary = rep.boundary_limit_zero;
  flags.normal_derivative_vanishes = rep.normal_derivative_zero;
  v.set_flags(flags);
  return v;
}

double sup_on_offset_curve(const TestFunction& v, double delta, int samples) {
  auto circle = v.domain().boundary_circle();
  if (!circle)
    fail(ErrorCode::Domain, "offset curves need a circular outer boundary");
  const bool region_inside = v.domain().contains(circle->center);
  const double rho = region_inside ? circle->radius - delta : circle->radius + delta;
  if (!(rho > 0.0))
    fail(ErrorCode::InvalidArgument, "collar margin exceeds the domain radius");
  double sup = kNegInf;
  for (int k = 0; k < samples; ++k) {
    const double a = kTwoPi * k / samples;
    const Complex z = circle->center + rho * Complex{std::cos(a), std::sin(a)};
    sup = std::max(sup, v.eval(z));
  }
  return sup;
}

ConditionReport check_O_condition(const TestFunction& v,
                                  std::span<const double> epsilons) {
  auto circle = v.domain().boundary_circle();
  if (!circle)
    fail(ErrorCode::Domain, "collar search needs a circular outer boundary");
  ConditionReport report;
  report.condition = "o-condition";
  report.inputs.emplace_back("v", v.describe());
  report.inputs.emplace_back("domain", v.domain().describe());
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool all_hold = true;
  const double delta_probe = 1e-9 * circle->radius;
  for (double eps : epsilons) {
    if (!(eps > 0.0)) fail(ErrorCode::InvalidArgument, "epsilon must be positive");
    CollarEntry entry;
    entry.epsilon = eps;
    if (sup_on_offset_curve(v, delta_probe) >= eps) {
      entry.holds = false;
      all_hold = false;
    } else {
      entry.holds = true;
      // Widen the collar while the curve sup stays below eps.
      double lo = delta_probe;
      double hi_margin = circle->radius * (1.0 - 1e-12);
      if (sup_on_offset_curve(v, hi_margin) < eps) {
        entry.delta = hi_margin;
      } else {
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (lo + hi_margin);
          if (sup_on_offset_curve(v, mid) < eps)
            lo = mid;
          else
            hi_margin = mid;
        }
        entry.delta = lo;
      }
      const bool region_inside = v.domain().contains(circle->center);
      const double rho = region_inside ? circle->radius - entry.delta
                                       : circle->radius + entry.delta;
      entry.chart_radius =
          v.domain().chart_abs(circle->center + rho * Complex{1.0, 0.0});
    }
    rows.push_back({{"epsilon", round_g15(entry.epsilon)},
                    {"holds", entry.holds},
                    {"delta", round_g15(entry.delta)},
                    {"chart_radius", round_g15(entry.chart_radius)}});
  }
  report.extra["collars"] = std::move(rows);
  report.verdict = all_hold ? Verdict::Holds : Verdict::Fails;
  return report;
}

}  // namespace blab
