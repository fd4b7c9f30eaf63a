#pragma once

#include <optional>
#include <vector>

#include "conditions/reports.hpp"
#include "conditions/test_function.hpp"
#include "potential/means.hpp"
#include "potential/riesz.hpp"
#include "zeros/locate.hpp"

namespace blab {

// Partial sums of v over the zero entries outside D0, in canonical order.
SumTrace blaschke_functional(const TestFunction& v, const ZeroSequence& z);

struct MajorantReport {
  bool holds = false;
  double worst_violation = 0.0;  // max of u - M over the region grid
  Complex worst_at{0.0, 0.0};
  long checked_nodes = 0;
  double tol = 0.0;
};

// Pointwise u <= M + tol on a grid over D minus D0.
MajorantReport verify_majorant(const Field& u, const Field& m, const Domain& domain,
                               double h, double tol = 1e-8);

struct ImplicationOptions {
  double h = 1.0 / 256.0;
  MeasureRoute route = MeasureRoute::Auto;
  LocateOptions locate;
  std::optional<double> trace_bound;
  bool skip_majorant_check = false;  // set when f is given only through zeros
};

// Integral side vs summed side: computes I = integral of v against the Riesz
// measure of M over D minus D0 and the partial sums of v over the zeros. The
// verdict fails (with a uniqueness note) when the trace diverges while I is
// finite under a verified majorant.
ConditionReport check_implication(const FunctionSpec* f, const ZeroSequence* zeros,
                                  const Field& m, const TestFunction& v,
                                  const Domain& domain,
                                  const ImplicationOptions& options = {});

struct InequalityOptions {
  double h = 1.0 / 256.0;
  MeasureRoute route_u = MeasureRoute::Auto;
  MeasureRoute route_m = MeasureRoute::Auto;
  LocateOptions locate;
  std::optional<Domain> dtilde;  // defaults to the concentric chart disk
};

// Evaluates every term of the two-weight inequality, reports the smallest
// admissible C >= 0 and the smallest companion constant for the compact form,
// taking the supremum over the supplied family.
ConditionReport evaluate_inequality_C(const Field& u, const Field& m,
                                      std::span<const TestFunction> v_family,
                                      Complex z0, double b, const Domain& domain,
                                      const InequalityOptions& options = {});

// Empirical constant: max over the family of the integral of v against nu
// minus the integral against the Riesz measure of M, clamped at 0.
ConditionReport estimate_C_prime(const MeasureEstimate& nu, const Field& m,
                                 const Domain& domain, double b,
                                 std::span<const TestFunction> v_family,
                                 double h = 1.0 / 256.0,
                                 MeasureRoute route = MeasureRoute::Auto);

// |integral of v dnu_M - integral of M dnu_v - boundary term on the inner
// circle|; the outer boundary drops out when v and its normal derivative
// vanish there (both flags are required). M must be smooth near the closed
// region.
ConditionReport green_identity_residual(const Field& m, const TestFunction& v,
                                        const Domain& domain, double h);

struct LBoundOptions {
  int nodes = 2048;
  double tol = 1e-9;
};

// u0(z) + log|f(z)| against the circular mean of M plus the scale-corrected
// logarithmic term, under the admissibility constraint on r.
ConditionReport check_L_bound(const Field& u0, const FunctionSpec& f, const Field& m,
                              Complex z, double r, double epsilon,
                              const Domain& domain, const LBoundOptions& options = {});

}  // namespace blab
