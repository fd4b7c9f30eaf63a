#include "blaschkelab/blaschkelab.h"

#include <cstring>
#include <memory>
#include <string>

#include "common.hpp"
#include "conditions/checks.hpp"
#include "conditions/test_function.hpp"
#include "expr/grid.hpp"
#include "expr/parser.hpp"
#include "potential/green.hpp"
#include "potential/means.hpp"
#include "potential/riesz.hpp"
#include "zeros/locate.hpp"
#include "zeros/winding.hpp"

using namespace blab;

struct blab_function {
  FunctionSpec spec;
};
struct blab_domain {
  Domain domain;
};
struct blab_grid {
  GridField grid;
};
struct blab_zeroseq {
  ZeroSequence zeros;
};
struct blab_measure {
  MeasureEstimate measure;
};
struct blab_testfn {
  TestFunction v;
};
struct blab_report {
  ConditionReport report;
};

namespace {

thread_local std::string t_last_error;

blab_status status_of(const Error& e) {
  t_last_error = e.what();
  switch (e.code()) {
    case ErrorCode::Parse: return BLAB_ERR_PARSE;
    case ErrorCode::Domain: return BLAB_ERR_DOMAIN;
    case ErrorCode::Eval: return BLAB_ERR_EVAL;
    case ErrorCode::Precondition: return BLAB_ERR_PRECONDITION;
    case ErrorCode::Validation: return BLAB_ERR_VALIDATION;
    case ErrorCode::Numeric: return BLAB_ERR_NUMERIC;
    case ErrorCode::Io: return BLAB_ERR_IO;
    case ErrorCode::InvalidArgument: return BLAB_ERR_INVALID_ARGUMENT;
  }
  return BLAB_ERR_NUMERIC;
}

template <typename Fn>
blab_status wrap(Fn&& fn) {
  try {
    fn();
    return BLAB_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return BLAB_ERR_NUMERIC;
  }
}

blab_status require(bool ok, const char* message) {
  if (ok) return BLAB_OK;
  t_last_error = message;
  return BLAB_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

MeasureRoute route_of(int route) {
  switch (route) {
    case 1: return MeasureRoute::Atomic;
    case 2: return MeasureRoute::Grid;
    default: return MeasureRoute::Auto;
  }
}

}  // namespace

extern "C" {

const char* blab_version(void) { return "0.1.0"; }

const char* blab_last_error(void) { return t_last_error.c_str(); }

void blab_string_free(char* s) { delete[] s; }

blab_status blab_set_threads(int n) {
  if (n < 1) return require(false, "thread cap must be >= 1");
  set_thread_cap(n);
  return BLAB_OK;
}

blab_status blab_parse_complex(const char* text, double* out_re, double* out_im) {
  if (auto s = require(text && out_re && out_im, "arguments must be non-null")) return s;
  return wrap([&] {
    const Complex z = parse_complex(text);
    *out_re = z.real();
    *out_im = z.imag();
  });
}

/* ---- functions ---------------------------------------------------- */

blab_status blab_function_parse(const char* text, blab_function** out) {
  if (auto s = require(text && out, "text and out must be non-null")) return s;
  return wrap([&] { *out = new blab_function{parse_function(text)}; });
}

blab_status blab_function_print(const blab_function* f, char** out) {
  if (auto s = require(f && out, "f and out must be non-null")) return s;
  return wrap([&] { *out = dup_string(f->spec.print()); });
}

blab_status blab_function_eval(const blab_function* f, double re, double im,
                               double* out_re, double* out_im) {
  if (auto s = require(f && out_re && out_im, "arguments must be non-null")) return s;
  return wrap([&] {
    const Complex w = f->spec.eval(Complex{re, im});
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      fail(ErrorCode::Eval, "evaluation is not finite (pole or domain violation)");
    *out_re = w.real();
    *out_im = w.imag();
  });
}

blab_status blab_function_log_modulus(const blab_function* f, double re, double im,
                                      double* out) {
  if (auto s = require(f && out, "arguments must be non-null")) return s;
  return wrap([&] {
    const double v = f->spec.log_modulus(Complex{re, im});
    if (v == kPosInf) fail(ErrorCode::Eval, "log-modulus is +inf (pole)");
    *out = v;
  });
}

blab_status blab_function_with_domain(const blab_function* f, const blab_domain* d,
                                      blab_function** out) {
  if (auto s = require(f && d && out, "arguments must be non-null")) return s;
  return wrap([&] {
    *out = new blab_function{
        f->spec.with_declared_domain(std::make_shared<Domain>(d->domain))};
  });
}

void blab_function_free(blab_function* f) { delete f; }

/* ---- domains ------------------------------------------------------ */

blab_status blab_domain_parse(const char* text, blab_domain** out) {
  if (auto s = require(text && out, "text and out must be non-null")) return s;
  return wrap([&] { *out = new blab_domain{Domain::parse(text)}; });
}

blab_status blab_domain_unit_disk(blab_domain** out) {
  if (auto s = require(out != nullptr, "out must be non-null")) return s;
  *out = new blab_domain{Domain::unit_disk()};
  return BLAB_OK;
}

blab_status blab_domain_disk(double center_re, double center_im, double radius,
                             blab_domain** out) {
  if (auto s = require(out != nullptr, "out must be non-null")) return s;
  return wrap([&] {
    *out = new blab_domain{Domain::disk(Complex{center_re, center_im}, radius)};
  });
}

blab_status blab_domain_with_inner(const blab_domain* d, const blab_domain* d0,
                                   blab_domain** out) {
  if (auto s = require(d && d0 && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = new blab_domain{d->domain.with_inner(d0->domain)}; });
}

blab_status blab_domain_contains(const blab_domain* d, double re, double im, int* out) {
  if (auto s = require(d && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = d->domain.contains(Complex{re, im}) ? 1 : 0; });
}

blab_status blab_domain_boundary_distance(const blab_domain* d, double re, double im,
                                          double* out) {
  if (auto s = require(d && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = d->domain.boundary_distance(Complex{re, im}); });
}

blab_status blab_domain_bounding_box(const blab_domain* d, double* lo_re, double* lo_im,
                                     double* hi_re, double* hi_im) {
  if (auto s = require(d && lo_re && lo_im && hi_re && hi_im,
                       "arguments must be non-null"))
    return s;
  return wrap([&] {
    Complex lo, hi;
    d->domain.bounding_box(&lo, &hi);
    *lo_re = lo.real();
    *lo_im = lo.imag();
    *hi_re = hi.real();
    *hi_im = hi.imag();
  });
}

void blab_domain_free(blab_domain* d) { delete d; }

/* ---- grids --------------------------------------------------------- */

blab_status blab_sample_grid(const blab_function* f, double lo_re, double lo_im,
                             double hi_re, double hi_im, double h, int sample_kind,
                             const blab_domain* mask, blab_grid** out) {
  if (auto s = require(f && out, "arguments must be non-null")) return s;
  return wrap([&] {
    SampleKind kind = sample_kind == 1   ? SampleKind::LogModulus
                      : sample_kind == 2 ? SampleKind::RealValue
                                         : SampleKind::Auto;
    *out = new blab_grid{sample_grid(f->spec, Complex{lo_re, lo_im},
                                     Complex{hi_re, hi_im}, h, kind,
                                     mask ? &mask->domain : nullptr)};
  });
}

blab_status blab_green_grid(const blab_domain* d, double pole_re, double pole_im,
                            double lo_re, double lo_im, double hi_re, double hi_im,
                            double h, blab_grid** out) {
  if (auto s = require(d && out, "arguments must be non-null")) return s;
  return wrap([&] {
    const Complex pole{pole_re, pole_im};
    if (!d->domain.contains(pole))
      fail(ErrorCode::Precondition, "green pole must lie inside the domain");
    *out = new blab_grid{sample_grid_field(
        [&](Complex z) {
          if (z == pole) return kPosInf;  // masked by the sampler
          return green_domain(d->domain, z, pole);
        },
        Complex{lo_re, lo_im}, Complex{hi_re, hi_im}, h, nullptr)};
  });
}

blab_status blab_grid_to_csv(const blab_grid* g, char** out) {
  if (auto s = require(g && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(grid_to_csv(g->grid)); });
}

blab_status blab_grid_meta_json(const blab_grid* g, char** out) {
  if (auto s = require(g && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(grid_meta_json(g->grid)); });
}

blab_status blab_grid_value_at(const blab_grid* g, double re, double im, double* out) {
  if (auto s = require(g && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = g->grid.value_at(Complex{re, im}); });
}

blab_status blab_riesz_measure_grid(const blab_grid* g, blab_measure** out) {
  if (auto s = require(g && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = new blab_measure{riesz_measure_grid(g->grid)}; });
}

void blab_grid_free(blab_grid* g) { delete g; }

/* ---- zeros ---------------------------------------------------------- */

blab_status blab_winding_number_circle(const blab_function* f, double center_re,
                                       double center_im, double radius, int nodes,
                                       double tol, int* out) {
  if (auto s = require(f && out, "arguments must be non-null")) return s;
  return wrap([&] {
    *out = winding_number(
        f->spec, Contour::circle(Complex{center_re, center_im}, radius, nodes), tol);
  });
}

blab_status blab_winding_number_rect(const blab_function* f, double lo_re,
                                     double lo_im, double hi_re, double hi_im,
                                     int nodes, double tol, int* out) {
  if (auto s = require(f && out, "arguments must be non-null")) return s;
  return wrap([&] {
    *out = winding_number(
        f->spec,
        Contour::rectangle(Complex{lo_re, lo_im}, Complex{hi_re, hi_im}, nodes), tol);
  });
}

blab_status blab_locate_zeros(const blab_function* f, const blab_domain* region,
                              double h_min, double refine_tol, blab_zeroseq** out) {
  if (auto s = require(f && region && out, "arguments must be non-null")) return s;
  return wrap([&] {
    LocateOptions opt;
    if (h_min > 0.0) opt.h_min = h_min;
    if (refine_tol > 0.0) opt.refine_tol = refine_tol;
    *out = new blab_zeroseq{locate_zeros(f->spec, region->domain, opt)};
  });
}

blab_status blab_zeroseq_from_json(const char* json, const blab_domain* region,
                                   blab_zeroseq** out) {
  if (auto s = require(json && region && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = new blab_zeroseq{zeroseq_from_json(json, region->domain)}; });
}

blab_status blab_zeroseq_to_json(const blab_zeroseq* z, char** out) {
  if (auto s = require(z && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(zeroseq_to_json(z->zeros)); });
}

blab_status blab_zeroseq_to_csv(const blab_zeroseq* z, char** out) {
  if (auto s = require(z && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(zeroseq_to_csv(z->zeros)); });
}

blab_status blab_zeroseq_count(const blab_zeroseq* z, size_t* out) {
  if (auto s = require(z && out, "arguments must be non-null")) return s;
  *out = z->zeros.entries.size();
  return BLAB_OK;
}

blab_status blab_zeroseq_entry(const blab_zeroseq* z, size_t index, double* re,
                               double* im, int* multiplicity, double* error) {
  if (auto s = require(z && re && im, "arguments must be non-null")) return s;
  if (index >= z->zeros.entries.size()) return require(false, "zero index out of range");
  const ZeroEntry& e = z->zeros.entries[index];
  *re = e.location.real();
  *im = e.location.imag();
  if (multiplicity) *multiplicity = e.multiplicity;
  if (error) *error = e.refinement_error;
  return BLAB_OK;
}

blab_status blab_zero_counting_measure(const blab_zeroseq* z, blab_measure** out) {
  if (auto s = require(z && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = new blab_measure{zero_counting_measure(z->zeros)}; });
}

void blab_zeroseq_free(blab_zeroseq* z) { delete z; }

/* ---- potential theory ------------------------------------------------ */

blab_status blab_green_eval(const blab_domain* d, double z_re, double z_im,
                            double pole_re, double pole_im, double* out) {
  if (auto s = require(d && out, "arguments must be non-null")) return s;
  return wrap([&] {
    *out = green_domain(d->domain, Complex{z_re, z_im}, Complex{pole_re, pole_im});
  });
}

blab_status blab_circular_mean(const blab_function* m, double z_re, double z_im,
                               double r, int nodes, double* out) {
  if (auto s = require(m && out, "arguments must be non-null")) return s;
  return wrap([&] {
    Field field(m->spec);
    std::span<const ZeroAtom> known;
    if (field.logmod_of_holomorphic()) known = m->spec.known_zeros();
    *out = circular_mean(field, Complex{z_re, z_im}, r, nodes, known);
  });
}

blab_status blab_disk_mean(const blab_function* m, double z_re, double z_im,
                           double r, double* out) {
  if (auto s = require(m && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = disk_mean(Field(m->spec), Complex{z_re, z_im}, r); });
}

blab_status blab_riesz_measure(const blab_function* m, const blab_domain* domain,
                               double h, int route, blab_measure** out) {
  if (auto s = require(m && domain && out, "arguments must be non-null")) return s;
  return wrap([&] {
    RieszOptions opt;
    if (h > 0.0) opt.h = h;
    *out = new blab_measure{
        riesz_measure(Field(m->spec), domain->domain, opt, route_of(route))};
  });
}

blab_status blab_hahn_jordan_split(const blab_measure* nu, blab_measure** positive,
                                   blab_measure** negative) {
  if (auto s = require(nu && positive && negative, "arguments must be non-null"))
    return s;
  return wrap([&] {
    ChargeSplit split = hahn_jordan_split(nu->measure);
    *positive = new blab_measure{std::move(split.positive)};
    *negative = new blab_measure{std::move(split.negative)};
  });
}

namespace {

RegionFilter filter_of(const blab_domain* filter) {
  if (!filter) return RegionFilter::all();
  return RegionFilter::between(filter->domain);
}

}  // namespace

blab_status blab_integrate_measure(const blab_function* v, const blab_measure* nu,
                                   const blab_domain* filter, double* out) {
  if (auto s = require(v && nu && out, "arguments must be non-null")) return s;
  return wrap([&] {
    *out = integrate_measure([&](Complex z) { return v->spec.field_value(z); },
                             nu->measure, filter_of(filter));
  });
}

blab_status blab_integrate_measure_testfn(const blab_testfn* v, const blab_measure* nu,
                                          const blab_domain* filter, double* out) {
  if (auto s = require(v && nu && out, "arguments must be non-null")) return s;
  return wrap([&] {
    *out = integrate_measure([&](Complex z) { return v->v.eval(z); }, nu->measure,
                             filter_of(filter));
  });
}

blab_status blab_log_potential_at(const blab_measure* nu, double z_re, double z_im,
                                  double r, double* out) {
  if (auto s = require(nu && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = log_potential_at(nu->measure, Complex{z_re, z_im}, r); });
}

blab_status blab_measure_total_mass(const blab_measure* nu, double* out) {
  if (auto s = require(nu && out, "arguments must be non-null")) return s;
  *out = nu->measure.total_mass();
  return BLAB_OK;
}

blab_status blab_measure_total_variation(const blab_measure* nu, double* out) {
  if (auto s = require(nu && out, "arguments must be non-null")) return s;
  *out = nu->measure.total_variation();
  return BLAB_OK;
}

blab_status blab_measure_to_json(const blab_measure* nu, char** out) {
  if (auto s = require(nu && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(measure_to_json(nu->measure)); });
}

blab_status blab_measure_from_json(const char* json, blab_measure** out) {
  if (auto s = require(json && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = new blab_measure{measure_from_json(json)}; });
}

blab_status blab_measure_to_csv(const blab_measure* nu, char** out) {
  if (auto s = require(nu && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(measure_to_csv(nu->measure)); });
}

void blab_measure_free(blab_measure* nu) { delete nu; }

/* ---- test functions and condition checks ----------------------------- */

blab_status blab_testfn_make(const char* kind_text, const blab_domain* domain,
                             double scale, int validate, blab_testfn** out) {
  if (auto s = require(kind_text && domain && out, "arguments must be non-null"))
    return s;
  return wrap([&] {
    if (validate)
      *out = new blab_testfn{make_test_function(kind_text, domain->domain, scale)};
    else
      *out = new blab_testfn{
          TestFunction::from_text(kind_text, domain->domain, scale)};
  });
}

blab_status blab_testfn_make_custom(const blab_function* spec,
                                    const blab_domain* domain, double scale,
                                    int validate, blab_testfn** out) {
  if (auto s = require(spec && domain && out, "arguments must be non-null")) return s;
  return wrap([&] {
    if (validate)
      *out = new blab_testfn{
          make_custom_test_function(domain->domain, spec->spec, scale)};
    else
      *out = new blab_testfn{TestFunction::custom(domain->domain, spec->spec, scale)};
  });
}

blab_status blab_testfn_eval(const blab_testfn* v, double re, double im, double* out) {
  if (auto s = require(v && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = v->v.eval(Complex{re, im}); });
}

blab_status blab_testfn_info_json(const blab_testfn* v, char** out) {
  if (auto s = require(v && out, "arguments must be non-null")) return s;
  return wrap([&] {
    nlohmann::ordered_json j;
    j["kind"] = v->v.describe();
    j["b"] = round_g15(v->v.b());
    j["scale"] = round_g15(v->v.scale());
    j["domain"] = v->v.domain().describe();
    j["vanishes_on_boundary"] = v->v.flags().vanishes_on_boundary;
    j["normal_derivative_vanishes"] = v->v.flags().normal_derivative_vanishes;
    *out = dup_string(j.dump(2) + "\n");
  });
}

blab_status blab_testfn_scaled(const blab_testfn* v, double factor, blab_testfn** out) {
  if (auto s = require(v && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = new blab_testfn{v->v.scaled(factor)}; });
}

blab_status blab_testfn_validate(const blab_testfn* v, double h, blab_report** out) {
  if (auto s = require(v && out, "arguments must be non-null")) return s;
  return wrap([&] {
    const double use_h = h > 0.0 ? h : v->v.domain().gap_width() / 48.0;
    ValidationReport rep = validate_test_function(v->v, use_h);
    *out = new blab_report{rep.to_report(v->v)};
  });
}

void blab_testfn_free(blab_testfn* v) { delete v; }

blab_status blab_check_o_condition(const blab_testfn* v, const double* epsilons,
                                   size_t count, blab_report** out) {
  if (auto s = require(v && epsilons && out && count > 0,
                       "arguments must be non-null and count > 0"))
    return s;
  return wrap([&] {
    *out = new blab_report{
        check_O_condition(v->v, std::span<const double>(epsilons, count))};
  });
}

blab_status blab_blaschke_functional(const blab_testfn* v, const blab_zeroseq* z,
                                     blab_report** out) {
  if (auto s = require(v && z && out, "arguments must be non-null")) return s;
  return wrap([&] {
    ConditionReport report;
    report.condition = "blaschke";
    SumTrace trace = blaschke_functional(v->v, z->zeros);
    report.lhs = trace.final_sum;
    report.rhs = trace.final_sum;
    report.inputs.emplace_back("v", v->v.describe());
    report.inputs.emplace_back("domain", v->v.domain().describe());
    report.extra["zero_count"] = z->zeros.total_multiplicity();
    report.verdict = Verdict::Holds;
    report.trace = std::move(trace);
    *out = new blab_report{std::move(report)};
  });
}

blab_status blab_verify_majorant(const blab_function* f, const blab_function* m,
                                 const blab_domain* domain, double h,
                                 blab_report** out) {
  if (auto s = require(f && m && domain && out, "arguments must be non-null")) return s;
  return wrap([&] {
    MajorantReport rep =
        verify_majorant(Field(f->spec), Field(m->spec), domain->domain,
                        h > 0.0 ? h : 1.0 / 256.0);
    ConditionReport report;
    report.condition = "majorant";
    report.verdict = rep.holds ? Verdict::Holds : Verdict::Fails;
    report.lhs = rep.worst_violation;
    report.rhs = rep.tol;
    report.grid_nodes = rep.checked_nodes;
    report.tolerances["tol"] = rep.tol;
    report.inputs.emplace_back("f", f->spec.source_text());
    report.inputs.emplace_back("M", m->spec.source_text());
    report.inputs.emplace_back("domain", domain->domain.describe());
    report.extra["worst_at"] = {{"re", round_g15(rep.worst_at.real())},
                                {"im", round_g15(rep.worst_at.imag())}};
    *out = new blab_report{std::move(report)};
  });
}

blab_status blab_check_implication(const blab_function* f, const blab_zeroseq* zeros,
                                   const blab_function* m, const blab_testfn* v,
                                   const blab_domain* domain, double h, int route,
                                   const double* trace_bound, blab_report** out) {
  if (auto s = require(m && v && domain && out && (f || zeros),
                       "need M, v, domain and either f or zeros"))
    return s;
  return wrap([&] {
    ImplicationOptions opt;
    if (h > 0.0) opt.h = h;
    opt.route = route_of(route);
    if (trace_bound) opt.trace_bound = *trace_bound;
    *out = new blab_report{check_implication(f ? &f->spec : nullptr,
                                             zeros ? &zeros->zeros : nullptr,
                                             Field(m->spec), v->v, domain->domain, opt)};
  });
}

blab_status blab_inequality_c(const blab_function* u, const blab_function* m,
                              const blab_testfn* v, double z0_re, double z0_im,
                              double b, const blab_domain* domain,
                              const blab_domain* dtilde, double h, blab_report** out) {
  if (auto s = require(u && m && v && domain && out, "arguments must be non-null"))
    return s;
  return wrap([&] {
    InequalityOptions opt;
    if (h > 0.0) opt.h = h;
    if (dtilde) opt.dtilde = dtilde->domain;
    const TestFunction family[1] = {v->v};
    *out = new blab_report{evaluate_inequality_C(
        Field(u->spec), Field(m->spec), std::span<const TestFunction>(family, 1),
        Complex{z0_re, z0_im}, b, domain->domain, opt)};
  });
}

blab_status blab_estimate_c_prime(const blab_measure* nu, const blab_function* m,
                                  const blab_domain* domain, double b,
                                  const blab_testfn* const* family, size_t count,
                                  double h, double* out_value, blab_report** out) {
  if (auto s = require(nu && m && domain && family && count > 0,
                       "arguments must be non-null and count > 0"))
    return s;
  return wrap([&] {
    std::vector<TestFunction> fam;
    fam.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!family[i]) fail(ErrorCode::InvalidArgument, "family entry is null");
      fam.push_back(family[i]->v);
    }
    ConditionReport report = estimate_C_prime(
        nu->measure, Field(m->spec), domain->domain, b,
        std::span<const TestFunction>(fam.data(), fam.size()), h > 0.0 ? h : 1.0 / 256.0);
    if (out_value) *out_value = report.constants.at("c_prime");
    if (out) *out = new blab_report{std::move(report)};
  });
}

blab_status blab_green_identity_residual(const blab_function* m, const blab_testfn* v,
                                         const blab_domain* domain, double h,
                                         double* out_residual, blab_report** out) {
  if (auto s = require(m && v && domain, "arguments must be non-null")) return s;
  return wrap([&] {
    ConditionReport report = green_identity_residual(
        Field(m->spec), v->v, domain->domain, h > 0.0 ? h : 1.0 / 256.0);
    if (out_residual) *out_residual = report.constants.at("residual");
    if (out) *out = new blab_report{std::move(report)};
  });
}

blab_status blab_check_l_bound(const blab_function* u0, const blab_function* f,
                               const blab_function* m, double z_re, double z_im,
                               double r, double epsilon, const blab_domain* domain,
                               blab_report** out) {
  if (auto s = require(u0 && f && m && domain && out, "arguments must be non-null"))
    return s;
  return wrap([&] {
    *out = new blab_report{check_L_bound(Field(u0->spec), f->spec, Field(m->spec),
                                         Complex{z_re, z_im}, r, epsilon,
                                         domain->domain)};
  });
}

/* ---- reports ---------------------------------------------------------- */

blab_status blab_report_to_json(const blab_report* r, char** out) {
  if (auto s = require(r && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(r->report.to_json()); });
}

blab_status blab_report_to_csv(const blab_report* r, char** out) {
  if (auto s = require(r && out, "arguments must be non-null")) return s;
  return wrap([&] { *out = dup_string(r->report.to_csv()); });
}

blab_status blab_report_verdict(const blab_report* r, blab_verdict* out) {
  if (auto s = require(r && out, "arguments must be non-null")) return s;
  switch (r->report.verdict) {
    case Verdict::Holds: *out = BLAB_VERDICT_HOLDS; break;
    case Verdict::Fails: *out = BLAB_VERDICT_FAILS; break;
    case Verdict::Inconclusive: *out = BLAB_VERDICT_INCONCLUSIVE; break;
  }
  return BLAB_OK;
}

void blab_report_free(blab_report* r) { delete r; }

} /* extern "C" */
