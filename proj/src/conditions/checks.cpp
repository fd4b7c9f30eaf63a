#include "conditions/checks.hpp"

#include <algorithm>
#include <cmath>

#include "potential/green.hpp"

namespace blab {

SumTrace blaschke_functional(const TestFunction& v, const ZeroSequence& z) {
  const Domain& d = v.domain();
  SumTrace trace;
  double running = 0.0;
  int k = 0;
  for (const ZeroEntry& e : z.entries) {
    if (d.inner() && d.inner()->contains(e.location)) {
      ++trace.skipped_inner;
      continue;
    }
    const double value = v.eval(e.location);
    if (value == kPosInf)
      fail(ErrorCode::Eval,
           "test function is infinite at zero " + format_complex(e.location));
    running += e.multiplicity * value;
    ++k;
    trace.index.push_back(k);
    trace.abs_zk.push_back(std::abs(e.location));
    trace.partial_sums.push_back(running);
  }
  trace.final_sum = running;
  return trace;
}

MajorantReport verify_majorant(const Field& u, const Field& m, const Domain& domain,
                               double h, double tol) {
  Complex lo, hi;
  domain.bounding_box(&lo, &hi);
  const RegionFilter region = RegionFilter::between(domain);
  MajorantReport rep;
  rep.tol = tol;
  double worst = kNegInf;
  const int nx = static_cast<int>((hi.real() - lo.real()) / h) + 1;
  const int ny = static_cast<int>((hi.imag() - lo.imag()) / h) + 1;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const Complex z{lo.real() + ix * h, lo.imag() + iy * h};
      if (!region.contains(z)) continue;
      double uv, mv;
      try {
        uv = u(z);
        mv = m(z);
      } catch (const Error&) {
        continue;  // grid-backed fields may not cover every node
      }
      ++rep.checked_nodes;
      if (uv == kNegInf) continue;
      const double diff = uv - mv;
      if (std::isnan(diff)) continue;
      if (diff > worst) {
        worst = diff;
        rep.worst_at = z;
      }
    }
  rep.worst_violation = worst == kNegInf ? 0.0 : worst;
  rep.holds = rep.worst_violation <= tol;
  return rep;
}

ConditionReport check_implication(const FunctionSpec* f, const ZeroSequence* zeros,
                                  const Field& m, const TestFunction& v,
                                  const Domain& domain,
                                  const ImplicationOptions& options) {
  if (!f && !zeros)
    fail(ErrorCode::Precondition, "check_implication needs a function or a zero list");
  ConditionReport report;
  report.condition = "implication";
  report.grid_h = options.h;
  report.inputs.emplace_back("v", v.describe());
  report.inputs.emplace_back("domain", domain.describe());
  if (f) report.inputs.emplace_back("f", f->source_text());
  report.inputs.emplace_back("M", m.describe());

  // Majorant hypothesis first; it is a precondition, not a verdict.
  if (f && !options.skip_majorant_check) {
    MajorantReport maj = verify_majorant(Field::log_modulus_of(*f), m, domain, options.h);
    if (!maj.holds)
      fail(ErrorCode::Precondition,
           "majorant hypothesis fails: log|f| - M reaches " +
               format_g15(maj.worst_violation) + " at " + format_complex(maj.worst_at));
    report.notes.push_back("majorant verified on " + std::to_string(maj.checked_nodes) +
                           " nodes");
  }

  ZeroSequence located;
  if (!zeros) {
    located = locate_zeros(*f, domain, options.locate);
    zeros = &located;
  }

  RieszOptions riesz_opt;
  riesz_opt.h = options.h;
  riesz_opt.locate = options.locate;
  const MeasureEstimate nu_m = riesz_measure(m, domain, riesz_opt, options.route);
  const double integral = integrate_measure([&v](Complex z) { return v.eval(z); },
                                            nu_m, RegionFilter::between(domain));

  SumTrace trace = blaschke_functional(v, *zeros);
  TraceAnalysis analysis = classify_trace(trace, options.trace_bound);

  report.lhs = integral;
  report.rhs = trace.final_sum;
  report.constants["c_prime"] = std::max(0.0, trace.final_sum - integral);
  report.constants["tail_slope"] = analysis.slope;
  report.constants["tail_r_squared"] = analysis.r_squared;
  report.tolerances["h"] = options.h;
  report.extra["zero_count"] = zeros->total_multiplicity();
  report.extra["measure"] = {{"atoms", nu_m.atoms.size()}, {"cells", nu_m.cells.size()}};

  if (!std::isfinite(integral)) {
    report.verdict = Verdict::Inconclusive;
    report.notes.push_back("integral side is not finite; nothing to test");
  } else if (analysis.cls == TraceClass::Divergent) {
    report.verdict = Verdict::Fails;
    report.notes.push_back(
        analysis.exceeded_bound
            ? "partial sums exceed the supplied bound " + format_g15(analysis.bound)
            : "tail model slope " + format_g15(analysis.slope) +
                  " >= -1 over " + std::to_string(analysis.fitted_terms) + " terms");
    report.notes.push_back(
        "summed side diverges while the integral side is finite under a verified "
        "majorant; no nonzero holomorphic function is consistent with these data "
        "(uniqueness contrapositive)");
  } else if (analysis.cls == TraceClass::Inconclusive) {
    report.verdict = Verdict::Inconclusive;
    report.notes.push_back("tail model could not classify the trace");
  } else {
    report.verdict = Verdict::Holds;
    if (analysis.cls == TraceClass::TooShort)
      report.notes.push_back("trace too short for the tail model; finite sum recorded");
    report.notes.push_back("summed side bounded by integral + c_prime across truncations");
  }
  trace.partial_sums.shrink_to_fit();
  report.trace = std::move(trace);
  return report;
}

namespace {

double field_value_at(const Field& m, Complex z0, const Domain& domain) {
  // Disk-average recovery; exact for fields harmonic near z0 and stable for
  // the smooth corpus. The radius stays clear of both boundaries.
  const double r =
      std::min(0.05, 0.25 * std::min(domain.boundary_distance(z0),
                                     domain.inner() ? domain.inner()->boundary_distance(z0)
                                                    : kPosInf));
  if (!(r > 0.0)) fail(ErrorCode::Precondition, "z0 sits on a boundary");
  return disk_mean(m, z0, r, 32, 128);
}

}  // namespace

ConditionReport evaluate_inequality_C(const Field& u, const Field& m,
                                      std::span<const TestFunction> v_family,
                                      Complex z0, double b, const Domain& domain,
                                      const InequalityOptions& options) {
  if (v_family.empty())
    fail(ErrorCode::Precondition, "evaluate_inequality_C needs at least one v");
  if (!domain.inner())
    fail(ErrorCode::Precondition, "domain must carry an inner D0");
  if (!domain.inner()->contains(z0))
    fail(ErrorCode::Precondition, "z0 must lie inside D0");
  if (b < 0.0) fail(ErrorCode::Precondition, "b must be nonnegative");

  ConditionReport report;
  report.condition = "inequality-c";
  report.grid_h = options.h;
  report.inputs.emplace_back("u", u.describe());
  report.inputs.emplace_back("M", m.describe());
  report.inputs.emplace_back("domain", domain.describe());
  report.inputs.emplace_back("z0", format_complex(z0));

  // Majorant precondition u <= M on D \ D0.
  MajorantReport maj = verify_majorant(u, m, domain, options.h);
  if (!maj.holds)
    fail(ErrorCode::Precondition,
         "majorization u <= M fails by " + format_g15(maj.worst_violation) + " at " +
             format_complex(maj.worst_at));

  RieszOptions riesz_opt;
  riesz_opt.h = options.h;
  riesz_opt.locate = options.locate;
  const MeasureEstimate nu_u = riesz_measure(u, domain, riesz_opt, options.route_u);
  const MeasureEstimate nu_m = riesz_measure(m, domain, riesz_opt, options.route_m);
  const ChargeSplit split = hahn_jordan_split(nu_m);

  // dom membership of z0 for M.
  const double dom_r = std::min(0.1, 0.5 * domain.inner()->boundary_distance(z0));
  const double logpot = log_potential_at(nu_m, z0, std::max(dom_r, 1e-6));
  if (logpot == kNegInf)
    fail(ErrorCode::Precondition,
         "z0 is outside dom_M (local log potential of |nu_M| is -inf)");

  const double u0 = u(z0);
  if (!std::isfinite(u0))
    fail(ErrorCode::Precondition, "u(z0) must be finite");
  const double m0 = field_value_at(m, z0, domain);

  // Default intermediate domain: the concentric chart disk halfway between
  // the hull of D0 and the outer boundary.
  Domain dtilde = domain.chart_subdisk(1.0);
  if (options.dtilde) {
    dtilde = *options.dtilde;
  } else {
    auto inner_circle = domain.inner()->boundary_circle();
    double hull = 0.0;
    for (int k = 0; k < 256; ++k) {
      const double a = kTwoPi * k / 256;
      const Complex p = inner_circle->center +
                        inner_circle->radius * Complex{std::cos(a), std::sin(a)};
      hull = std::max(hull, domain.chart_abs(p));
    }
    dtilde = domain.chart_subdisk(0.5 * (1.0 + hull));
  }
  report.inputs.emplace_back("dtilde", dtilde.describe());
  if (!dtilde.contains(z0))
    fail(ErrorCode::Precondition, "z0 must lie inside the intermediate domain");

  const Domain* d0 = domain.inner();
  const RegionFilter outer_region = RegionFilter::between(domain);
  const RegionFilter dtilde_all{&dtilde, nullptr};
  const RegionFilter dtilde_minus_d0{&dtilde, d0};
  auto green_tilde = [&](Complex z) { return green_domain(dtilde, z, z0); };

  const double t3 = integrate_measure(green_tilde, nu_m, dtilde_all);
  const double t4 = integrate_measure(green_tilde, split.negative, dtilde_minus_d0);

  // First pass: the per-member terms and the smallest C covering the family.
  struct Row {
    double lhs_int, t1, t2, c_min;
  };
  std::vector<Row> terms;
  terms.reserve(v_family.size());
  double c_required = 0.0;  // smallest shared C making every display hold
  bool feasible = true;
  for (const TestFunction& v : v_family) {
    auto v_eval = [&v](Complex z) { return v.eval(z); };
    Row row;
    row.lhs_int = integrate_measure(v_eval, nu_u, outer_region);
    row.t1 = integrate_measure(v_eval, nu_m, outer_region);
    row.t2 = integrate_measure(v_eval, split.negative, dtilde_minus_d0);

    // C*(u0 - K) <= R with K and R below; the smallest admissible C >= 0.
    const double K = t3 + t4 + m0;
    const double R = row.t1 + row.t2 - row.lhs_int;
    const double slack = 1e-12 * (1.0 + std::abs(R) + std::abs(u0 - K));
    if (u0 - K <= slack) {
      row.c_min = R >= -slack ? 0.0 : R / (u0 - K);
      if (!(u0 - K < -slack) && R < -slack) {
        feasible = false;
        row.c_min = kPosInf;
      }
    } else {
      row.c_min = R >= -slack ? 0.0 : kPosInf;
      if (row.c_min == kPosInf) feasible = false;
    }
    c_required = std::max(c_required, row.c_min);
    terms.push_back(row);
  }

  // Second pass: the compact form lhs <= t1 + (b + C) * cbar - C * u0 at the
  // shared C; the family supremum is the empirical companion constant.
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  double cbar_sup = 0.0;
  for (std::size_t i = 0; i < v_family.size(); ++i) {
    const Row& row = terms[i];
    double cbar;
    if (!std::isfinite(c_required)) {
      cbar = kPosInf;
    } else {
      const double numerator = row.lhs_int - row.t1 + c_required * u0;
      cbar = (b + c_required > 0.0) ? std::max(0.0, numerator / (b + c_required))
                                    : (numerator <= 0.0 ? 0.0 : kPosInf);
    }
    cbar_sup = std::max(cbar_sup, cbar);
    rows.push_back({{"v", v_family[i].describe()},
                    {"lhs_integral", round_g15(row.lhs_int)},
                    {"t1", round_g15(row.t1)},
                    {"t2", round_g15(row.t2)},
                    {"c_min", round_g15(row.c_min)},
                    {"cbar", round_g15(cbar)}});
  }

  report.constants["c_min"] = c_required;
  report.constants["cbar_sup"] = cbar_sup;
  report.constants["u_z0"] = u0;
  report.constants["m_z0"] = m0;
  report.constants["t3"] = t3;
  report.constants["t4"] = t4;
  report.constants["b"] = b;
  report.extra["family"] = std::move(rows);
  report.lhs = u0;
  report.rhs = m0;
  report.verdict = feasible ? Verdict::Holds : Verdict::Fails;
  if (!feasible)
    report.notes.push_back("no finite C >= 0 satisfies the display on this family");
  return report;
}

ConditionReport estimate_C_prime(const MeasureEstimate& nu, const Field& m,
                                 const Domain& domain, double b,
                                 std::span<const TestFunction> v_family,
                                 double h, MeasureRoute route) {
  if (v_family.empty())
    fail(ErrorCode::Precondition, "estimate_C_prime needs at least one v");
  ConditionReport report;
  report.condition = "c-prime";
  report.grid_h = h;
  report.inputs.emplace_back("M", m.describe());
  report.inputs.emplace_back("domain", domain.describe());
  for (const TestFunction& v : v_family)
    if (v.b() > b + 1e-9 * (1.0 + b))
      fail(ErrorCode::Precondition, "family member " + v.describe() +
                                        " exceeds the class bound b (" +
                                        format_g15(v.b()) + " > " + format_g15(b) + ")");
  RieszOptions riesz_opt;
  riesz_opt.h = h;
  const MeasureEstimate nu_m = riesz_measure(m, domain, riesz_opt, route);
  const RegionFilter region = RegionFilter::between(domain);
  double best = 0.0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TestFunction& v : v_family) {
    auto v_eval = [&v](Complex z) { return v.eval(z); };
    const double lhs = integrate_measure(v_eval, nu, region);
    const double rhs = integrate_measure(v_eval, nu_m, region);
    best = std::max(best, lhs - rhs);
    rows.push_back({{"v", v.describe()},
                    {"nu_integral", round_g15(lhs)},
                    {"num_integral", round_g15(rhs)}});
  }
  report.constants["c_prime"] = best;
  report.lhs = best;
  report.rhs = b;
  report.extra["family"] = std::move(rows);
  report.verdict = std::isfinite(best) ? Verdict::Holds : Verdict::Fails;
  return report;
}

namespace {

// Five-point pointwise Laplacian with a fixed small step; the fields of the
// smooth corpus are C^4 near the closed annulus.
double fd_laplacian(const std::function<double(Complex)>& f, Complex z) {
  const double d = 6e-4 * (1.0 + std::abs(z));
  const double c = f(z);
  const double s = f(z + Complex{d, 0}) + f(z - Complex{d, 0}) +
                   f(z + Complex{0, d}) + f(z - Complex{0, d});
  return (s - 4.0 * c) / (d * d);
}

}  // namespace

ConditionReport green_identity_residual(const Field& m, const TestFunction& v,
                                        const Domain& domain, double h) {
  if (!v.flags().vanishes_on_boundary || !v.flags().normal_derivative_vanishes)
    fail(ErrorCode::Precondition,
         "identity needs v and its normal derivative to vanish on the outer boundary");
  if (!m.spec())
    fail(ErrorCode::Precondition, "identity needs a smooth function-backed M");
  if (!domain.inner())
    fail(ErrorCode::Precondition, "domain must carry an inner D0");
  auto inner_circle = domain.inner()->boundary_circle();
  if (!inner_circle)
    fail(ErrorCode::Domain, "inner boundary must be a circle");
  if (!domain.inner()->contains(domain.from_disk(Complex{0.0, 0.0})))
    fail(ErrorCode::Precondition, "D0 must cover the chart center");
  // The quadrature differentiates across the outer boundary, so v must be
  // smooth there; boundary powers with integer exponent are.
  if (v.kind() != TestFunction::Kind::BoundaryPower ||
      std::round(v.exponent()) != v.exponent())
    fail(ErrorCode::Precondition,
         "identity needs a boundary-power test function with integer exponent");

  auto m_eval = [&m](Complex z) { return m(z); };
  auto v_eval = [&v](Complex z) { return v.eval_smooth(z); };

  // Area integrals in chart coordinates over the exact annulus-like region:
  // theta uniform, Gauss-Legendre between the D0 crossing and the boundary.
  const int n_theta =
      std::clamp(static_cast<int>(std::lround(kTwoPi / h)), 256, 8192);
  const int n_r = std::clamp(static_cast<int>(std::lround(0.25 / h)), 24, 96);
  const GaussRule& rule = gauss_legendre(n_r);

  std::vector<double> parts_a, parts_b;
  parts_a.reserve(static_cast<std::size_t>(n_theta) * n_r);
  parts_b.reserve(static_cast<std::size_t>(n_theta) * n_r);
  for (int k = 0; k < n_theta; ++k) {
    const double theta = kTwoPi * k / n_theta;
    const Complex dir{std::cos(theta), std::sin(theta)};
    // Radial crossing of the D0 boundary in chart coordinates.
    double lo_r = 0.0, hi_r = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo_r + hi_r);
      if (domain.inner()->contains(domain.from_disk(mid * dir)))
        lo_r = mid;
      else
        hi_r = mid;
    }
    const double rho0 = 0.5 * (lo_r + hi_r);
    const double outer = 1.0 - 1e-9;
    for (int i = 0; i < n_r; ++i) {
      const double rho = rho0 + (outer - rho0) * 0.5 * (rule.nodes[i] + 1.0);
      const double w_r = (outer - rho0) * 0.5 * rule.weights[i];
      const Complex w = rho * dir;
      const Complex z = domain.from_disk(w);
      const double jac = domain.from_disk_jacobian(w);
      const double weight = w_r * rho * jac * (kTwoPi / n_theta) / kTwoPi;
      parts_a.push_back(weight * v.eval(z) * fd_laplacian(m_eval, z));
      parts_b.push_back(weight * m(z) * fd_laplacian(v_eval, z));
    }
  }
  const double integral_v_dnum = pairwise_sum(parts_a);
  const double integral_m_dnuv = pairwise_sum(parts_b);

  // Inner boundary term with the normal pointing out of the annulus (into
  // D0). ds = R0 dtheta on the circle.
  const int n_bd = 1024;
  const double t = 1e-5 * std::max(1.0, inner_circle->radius);
  std::vector<double> parts_c;
  parts_c.reserve(n_bd);
  for (int k = 0; k < n_bd; ++k) {
    const double a = kTwoPi * k / n_bd;
    const Complex dir{std::cos(a), std::sin(a)};
    const Complex p = inner_circle->center + inner_circle->radius * dir;
    const Complex n_in = -dir;  // out of the annulus
    auto dn = [&](const std::function<double(Complex)>& f) {
      return (f(p + t * n_in) - f(p - t * n_in)) / (2.0 * t);
    };
    const double term = v.eval_smooth(p) * dn(m_eval) - m(p) * dn(v_eval);
    parts_c.push_back(term * inner_circle->radius * (kTwoPi / n_bd) / kTwoPi);
  }
  const double boundary_term = pairwise_sum(parts_c);

  const double residual =
      std::abs(integral_v_dnum - integral_m_dnuv - boundary_term);

  ConditionReport report;
  report.condition = "identity";
  report.grid_h = h;
  report.grid_nodes = static_cast<long>(n_theta) * n_r;
  report.lhs = integral_v_dnum;
  report.rhs = integral_m_dnuv + boundary_term;
  report.constants["residual"] = residual;
  report.constants["boundary_term"] = boundary_term;
  report.inputs.emplace_back("M", m.describe());
  report.inputs.emplace_back("v", v.describe());
  report.inputs.emplace_back("domain", domain.describe());
  report.verdict = residual < 1e-3 ? Verdict::Holds : Verdict::Fails;
  report.tolerances["residual_target"] = 1e-3;
  return report;
}

ConditionReport check_L_bound(const Field& u0, const FunctionSpec& f, const Field& m,
                              Complex z, double r, double epsilon,
                              const Domain& domain, const LBoundOptions& options) {
  if (!(epsilon > 0.0)) fail(ErrorCode::Precondition, "epsilon must be positive");
  if (!domain.contains(z))
    fail(ErrorCode::Precondition, "z must lie inside the domain");
  const double dist = domain.boundary_distance(z);
  const double cap = std::min(1.0 + std::abs(z), dist);
  if (!(r > 0.0) || !(r < cap))
    fail(ErrorCode::Precondition,
         "admissibility violated: need 0 < r < min(1+|z|, dist(z, boundary)) = " +
             format_g15(cap));

  std::span<const ZeroAtom> known;
  if (m.logmod_of_holomorphic()) known = m.spec()->known_zeros();
  const double mean = circular_mean(m, z, r, options.nodes, known, &domain);
  const double lhs = u0(z) + f.log_modulus(z);
  const double rhs = mean + (1.0 + epsilon) * std::log((1.0 + std::abs(z)) / r);

  ConditionReport report;
  report.condition = "l-bound";
  report.lhs = lhs;
  report.rhs = rhs;
  report.constants["circular_mean"] = mean;
  report.constants["epsilon"] = epsilon;
  report.constants["r"] = r;
  report.tolerances["tol"] = options.tol;
  report.inputs.emplace_back("u0", u0.describe());
  report.inputs.emplace_back("f", f.source_text());
  report.inputs.emplace_back("M", m.describe());
  report.inputs.emplace_back("z", format_complex(z));
  report.inputs.emplace_back("domain", domain.describe());
  report.notes.push_back(
      "error term read as (1+epsilon)*log((1+|z|)/r); the exponent applies to the "
      "whole ratio");
  report.verdict = lhs <= rhs + options.tol ? Verdict::Holds : Verdict::Fails;
  return report;
}

}  // namespace blab
