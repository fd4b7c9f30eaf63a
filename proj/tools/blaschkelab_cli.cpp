// Command-line front end over the blaschkelab C API: parses function and
// domain specifications from flags, runs the requested pipeline and writes
// JSON or CSV reports.
//
// Exit codes: 0 HOLDS/success, 1 FAILS, 2 INCONCLUSIVE, 3 usage/input error.

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blaschkelab/blaschkelab.h"
#include "json.hpp"

namespace {

struct StringDeleter {
  void operator()(char* s) const { blab_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using FunctionPtr = std::unique_ptr<blab_function, HandleDeleter<blab_function, blab_function_free>>;
using DomainPtr = std::unique_ptr<blab_domain, HandleDeleter<blab_domain, blab_domain_free>>;
using GridPtr = std::unique_ptr<blab_grid, HandleDeleter<blab_grid, blab_grid_free>>;
using ZeroseqPtr = std::unique_ptr<blab_zeroseq, HandleDeleter<blab_zeroseq, blab_zeroseq_free>>;
using MeasurePtr = std::unique_ptr<blab_measure, HandleDeleter<blab_measure, blab_measure_free>>;
using TestfnPtr = std::unique_ptr<blab_testfn, HandleDeleter<blab_testfn, blab_testfn_free>>;
using ReportPtr = std::unique_ptr<blab_report, HandleDeleter<blab_report, blab_report_free>>;

struct UsageError {
  int code;
  std::string message;
};

void check(blab_status status, const std::string& what) {
  if (status == BLAB_OK) return;
  throw UsageError{static_cast<int>(status),
                   what + ": " + std::string(blab_last_error())};
}

struct Opts {
  std::string command;
  std::string f, m = "0", u0 = "0", v = "loginv";
  std::string domain = "unitdisk", d0, dtilde, region;
  std::string zeros_file;
  std::string z0 = "0", rect;
  std::string out, format, config;
  double b = 0.0, h = 1.0 / 256.0, eps = 0.5, r = 0.0;
  double hmin = 1e-3, refine_tol = 1e-10, scale = 1.0;
  double bound = 0.0;
  bool have_bound = false;
  std::string route = "auto";
};

int route_code(const std::string& route) {
  if (route == "atomic") return 1;
  if (route == "grid") return 2;
  if (route == "auto") return 0;
  throw UsageError{static_cast<int>(BLAB_ERR_INVALID_ARGUMENT),
                   "unknown route '" + route + "' (auto|atomic|grid)"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError{static_cast<int>(BLAB_ERR_IO), "cannot read file '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_or(const Opts& opts, const char* fallback) {
  return opts.format.empty() ? fallback : opts.format;
}

void write_output(const Opts& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream out(opts.out, std::ios::binary);
  if (!out)
    throw UsageError{static_cast<int>(BLAB_ERR_IO),
                     "cannot write file '" + opts.out + "'"};
  out << content;
}

FunctionPtr parse_fn(const std::string& text, const std::string& flag) {
  if (text.empty())
    throw UsageError{static_cast<int>(BLAB_ERR_INVALID_ARGUMENT),
                     "missing required flag --" + flag};
  blab_function* f = nullptr;
  check(blab_function_parse(text.c_str(), &f), "--" + flag);
  return FunctionPtr(f);
}

DomainPtr parse_domain_with_inner(const Opts& opts, bool need_inner) {
  blab_domain* outer = nullptr;
  check(blab_domain_parse(opts.domain.c_str(), &outer), "--domain");
  DomainPtr outer_ptr(outer);
  std::string d0 = opts.d0;
  if (d0.empty()) {
    if (!need_inner) return outer_ptr;
    d0 = "0.5";  // the classical default D0
  }
  blab_domain* inner = nullptr;
  check(blab_domain_parse(d0.c_str(), &inner), "--d0");
  DomainPtr inner_ptr(inner);
  blab_domain* combined = nullptr;
  check(blab_domain_with_inner(outer_ptr.get(), inner_ptr.get(), &combined), "--d0");
  return DomainPtr(combined);
}

TestfnPtr parse_testfn(const Opts& opts, const blab_domain* domain, bool validate) {
  blab_testfn* v = nullptr;
  if (opts.v.rfind("custom:", 0) == 0) {
    const std::string text = read_file(opts.v.substr(7));
    FunctionPtr spec = parse_fn(text, "v");
    check(blab_testfn_make_custom(spec.get(), domain, opts.scale, validate ? 1 : 0, &v),
          "--v");
  } else {
    check(blab_testfn_make(opts.v.c_str(), domain, opts.scale, validate ? 1 : 0, &v),
          "--v");
  }
  return TestfnPtr(v);
}

ZeroseqPtr zeros_from_opts(const Opts& opts, const blab_domain* region) {
  if (!opts.zeros_file.empty()) {
    const std::string text = read_file(opts.zeros_file);
    blab_zeroseq* z = nullptr;
    check(blab_zeroseq_from_json(text.c_str(), region, &z), "--zeros");
    return ZeroseqPtr(z);
  }
  FunctionPtr f = parse_fn(opts.f, "f");
  blab_zeroseq* z = nullptr;
  check(blab_locate_zeros(f.get(), region, opts.hmin, opts.refine_tol, &z), "zeros");
  return ZeroseqPtr(z);
}

int finish_report(const Opts& opts, blab_report* report) {
  CStr text;
  char* raw = nullptr;
  if (format_or(opts, "json") == "csv")
    check(blab_report_to_csv(report, &raw), "report");
  else
    check(blab_report_to_json(report, &raw), "report");
  text.reset(raw);
  write_output(opts, text.get());
  blab_verdict verdict = BLAB_VERDICT_HOLDS;
  check(blab_report_verdict(report, &verdict), "report");
  return static_cast<int>(verdict);
}

int cmd_zeros(const Opts& opts) {
  blab_domain* region = nullptr;
  check(blab_domain_parse((opts.region.empty() ? opts.domain : opts.region).c_str(),
                          &region),
        "--region");
  DomainPtr region_ptr(region);
  ZeroseqPtr zeros = zeros_from_opts(opts, region_ptr.get());
  char* raw = nullptr;
  if (format_or(opts, "json") == "csv")
    check(blab_zeroseq_to_csv(zeros.get(), &raw), "zeros");
  else
    check(blab_zeroseq_to_json(zeros.get(), &raw), "zeros");
  CStr text(raw);
  write_output(opts, text.get());
  return 0;
}

int cmd_green(const Opts& opts) {
  blab_domain* domain = nullptr;
  check(blab_domain_parse(opts.domain.c_str(), &domain), "--domain");
  DomainPtr domain_ptr(domain);
  double z0_re = 0, z0_im = 0;
  check(blab_parse_complex(opts.z0.c_str(), &z0_re, &z0_im), "--z0");
  double lo_re, lo_im, hi_re, hi_im;
  if (!opts.rect.empty()) {
    std::vector<double> vals;
    std::stringstream ss(opts.rect);
    std::string part;
    while (std::getline(ss, part, ','))
      vals.push_back(std::strtod(part.c_str(), nullptr));
    if (vals.size() != 4)
      throw UsageError{static_cast<int>(BLAB_ERR_INVALID_ARGUMENT),
                       "--rect needs x0,y0,x1,y1"};
    lo_re = vals[0];
    lo_im = vals[1];
    hi_re = vals[2];
    hi_im = vals[3];
  } else {
    check(blab_domain_bounding_box(domain_ptr.get(), &lo_re, &lo_im, &hi_re, &hi_im),
          "--domain");
    const double pad = 0.05 * (hi_re - lo_re);
    lo_re -= pad;
    lo_im -= pad;
    hi_re += pad;
    hi_im += pad;
  }
  blab_grid* grid = nullptr;
  check(blab_green_grid(domain_ptr.get(), z0_re, z0_im, lo_re, lo_im, hi_re, hi_im,
                        opts.h, &grid),
        "green");
  GridPtr grid_ptr(grid);
  char* raw = nullptr;
  if (format_or(opts, "csv") == "json") {
    check(blab_grid_meta_json(grid_ptr.get(), &raw), "green");
    CStr text(raw);
    write_output(opts, text.get());
    return 0;
  }
  check(blab_grid_to_csv(grid_ptr.get(), &raw), "green");
  CStr text(raw);
  write_output(opts, text.get());
  if (!opts.out.empty()) {
    char* meta = nullptr;
    check(blab_grid_meta_json(grid_ptr.get(), &meta), "green");
    CStr meta_text(meta);
    std::ofstream side(opts.out + ".meta.json", std::ios::binary);
    side << meta_text.get();
  }
  return 0;
}

int cmd_riesz(const Opts& opts) {
  FunctionPtr m = parse_fn(opts.m, "M");
  blab_domain* domain = nullptr;
  check(blab_domain_parse(opts.domain.c_str(), &domain), "--domain");
  DomainPtr domain_ptr(domain);
  blab_measure* nu = nullptr;
  check(blab_riesz_measure(m.get(), domain_ptr.get(), opts.h, route_code(opts.route),
                           &nu),
        "riesz");
  MeasurePtr nu_ptr(nu);
  char* raw = nullptr;
  if (format_or(opts, "json") == "csv")
    check(blab_measure_to_csv(nu_ptr.get(), &raw), "riesz");
  else
    check(blab_measure_to_json(nu_ptr.get(), &raw), "riesz");
  CStr text(raw);
  write_output(opts, text.get());
  return 0;
}

int cmd_blaschke(const Opts& opts) {
  DomainPtr domain = parse_domain_with_inner(opts, true);
  TestfnPtr v = parse_testfn(opts, domain.get(), true);
  ZeroseqPtr zeros = zeros_from_opts(opts, domain.get());
  blab_report* report = nullptr;
  check(blab_blaschke_functional(v.get(), zeros.get(), &report), "blaschke");
  ReportPtr report_ptr(report);
  return finish_report(opts, report_ptr.get());
}

int cmd_implication(const Opts& opts) {
  DomainPtr domain = parse_domain_with_inner(opts, true);
  TestfnPtr v = parse_testfn(opts, domain.get(), true);
  FunctionPtr m = parse_fn(opts.m, "M");
  FunctionPtr f;
  ZeroseqPtr zeros;
  if (!opts.zeros_file.empty())
    zeros = zeros_from_opts(opts, domain.get());
  else
    f = parse_fn(opts.f, "f");
  blab_report* report = nullptr;
  const double bound = opts.bound;
  check(blab_check_implication(f.get(), zeros.get(), m.get(), v.get(), domain.get(),
                               opts.h, route_code(opts.route),
                               opts.have_bound ? &bound : nullptr, &report),
        "implication");
  ReportPtr report_ptr(report);
  return finish_report(opts, report_ptr.get());
}

int cmd_inequality_c(const Opts& opts) {
  DomainPtr domain = parse_domain_with_inner(opts, true);
  TestfnPtr v = parse_testfn(opts, domain.get(), true);
  FunctionPtr u = parse_fn(opts.f, "f");
  FunctionPtr m = parse_fn(opts.m, "M");
  double z0_re = 0, z0_im = 0;
  check(blab_parse_complex(opts.z0.c_str(), &z0_re, &z0_im), "--z0");
  DomainPtr dtilde;
  if (!opts.dtilde.empty()) {
    blab_domain* d = nullptr;
    check(blab_domain_parse(opts.dtilde.c_str(), &d), "--dtilde");
    dtilde.reset(d);
  }
  blab_report* report = nullptr;
  check(blab_inequality_c(u.get(), m.get(), v.get(), z0_re, z0_im, opts.b,
                          domain.get(), dtilde.get(), opts.h, &report),
        "inequality-c");
  ReportPtr report_ptr(report);
  return finish_report(opts, report_ptr.get());
}

int cmd_identity(const Opts& opts) {
  DomainPtr domain = parse_domain_with_inner(opts, true);
  TestfnPtr v = parse_testfn(opts, domain.get(), true);
  FunctionPtr m = parse_fn(opts.m, "M");
  blab_report* report = nullptr;
  check(blab_green_identity_residual(m.get(), v.get(), domain.get(), opts.h, nullptr,
                                     &report),
        "identity");
  ReportPtr report_ptr(report);
  return finish_report(opts, report_ptr.get());
}

int cmd_l_bound(const Opts& opts) {
  blab_domain* domain = nullptr;
  check(blab_domain_parse(opts.domain.c_str(), &domain), "--domain");
  DomainPtr domain_ptr(domain);
  FunctionPtr u0 = parse_fn(opts.u0, "u0");
  FunctionPtr f = parse_fn(opts.f, "f");
  FunctionPtr m = parse_fn(opts.m, "M");
  double z_re = 0, z_im = 0;
  check(blab_parse_complex(opts.z0.c_str(), &z_re, &z_im), "--z0");
  if (!(opts.r > 0.0))
    throw UsageError{static_cast<int>(BLAB_ERR_INVALID_ARGUMENT),
                     "--r must be positive"};
  blab_report* report = nullptr;
  check(blab_check_l_bound(u0.get(), f.get(), m.get(), z_re, z_im, opts.r, opts.eps,
                           domain_ptr.get(), &report),
        "l-bound");
  ReportPtr report_ptr(report);
  return finish_report(opts, report_ptr.get());
}

int cmd_validate_v(const Opts& opts) {
  DomainPtr domain = parse_domain_with_inner(opts, true);
  TestfnPtr v = parse_testfn(opts, domain.get(), false);
  blab_report* report = nullptr;
  check(blab_testfn_validate(v.get(), opts.h > 0 ? opts.h : 0.0, &report),
        "validate-v");
  ReportPtr report_ptr(report);
  return finish_report(opts, report_ptr.get());
}

void apply_config(Opts& opts) {
  if (opts.config.empty()) return;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(opts.config));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError{static_cast<int>(BLAB_ERR_PARSE),
                     std::string("--config: ") + e.what()};
  }
  auto str = [&](const char* key, std::string& slot) {
    if (j.contains(key)) slot = j.at(key).get<std::string>();
  };
  auto num = [&](const char* key, double& slot) {
    if (j.contains(key)) slot = j.at(key).get<double>();
  };
  str("f", opts.f);
  str("M", opts.m);
  str("u0", opts.u0);
  str("v", opts.v);
  str("domain", opts.domain);
  str("d0", opts.d0);
  str("dtilde", opts.dtilde);
  str("region", opts.region);
  str("zeros", opts.zeros_file);
  str("z0", opts.z0);
  str("rect", opts.rect);
  str("format", opts.format);
  str("route", opts.route);
  num("b", opts.b);
  num("h", opts.h);
  num("eps", opts.eps);
  num("r", opts.r);
  num("hmin", opts.hmin);
  num("refine_tol", opts.refine_tol);
  num("scale", opts.scale);
  if (j.contains("bound")) {
    opts.bound = j.at("bound").get<double>();
    opts.have_bound = true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blaschkelab: zeros, Green's functions and Blaschke-type condition checks"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");

  Opts opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--f", opts.f, "function specification");
    cmd->add_option("--M", opts.m, "majorant (real expression or log-modulus source)");
    cmd->add_option("--u0", opts.u0, "additive subharmonic term");
    cmd->add_option("--v", opts.v, "test function: loginv|greenpole:z0|power:q|custom:file");
    cmd->add_option("--domain", opts.domain, "unitdisk|disk:c,r|moebius:a,b,c,d");
    cmd->add_option("--d0", opts.d0, "inner sub-domain (radius or domain spec)");
    cmd->add_option("--dtilde", opts.dtilde, "intermediate domain spec");
    cmd->add_option("--region", opts.region, "zero search region (defaults to --domain)");
    cmd->add_option("--zeros", opts.zeros_file, "externally supplied zero list (json)");
    cmd->add_option("--z0", opts.z0, "complex point");
    cmd->add_option("--rect", opts.rect, "sampling rectangle x0,y0,x1,y1");
    cmd->add_option("--b", opts.b, "class bound on the inner boundary");
    cmd->add_option("--h", opts.h, "grid spacing");
    cmd->add_option("--eps", opts.eps, "epsilon parameter");
    cmd->add_option("--r", opts.r, "circle radius");
    cmd->add_option("--hmin", opts.hmin, "multiplicity collapse scale");
    cmd->add_option("--refine-tol", opts.refine_tol, "zero refinement tolerance");
    cmd->add_option("--scale", opts.scale, "test function scale factor");
    cmd->add_option("--route", opts.route, "measure route: auto|atomic|grid");
    cmd->add_option("--bound", opts.bound, "divergence bound for traces")
        ->each([&](const std::string&) { opts.have_bound = true; });
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    cmd->add_option("--format", opts.format, "json|csv");
    cmd->add_option("--config", opts.config, "json config overriding flags");
  };

  for (const char* name : {"zeros", "green", "riesz", "blaschke", "implication",
                           "inequality-c", "identity", "l-bound", "validate-v"})
    add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    nlohmann::ordered_json err;
    err["error"] = {{"code", 3}, {"status", "usage"}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 3;
  }

  opts.command = app.get_subcommands().front()->get_name();
  try {
    apply_config(opts);
    if (opts.command == "zeros") return cmd_zeros(opts);
    if (opts.command == "green") return cmd_green(opts);
    if (opts.command == "riesz") return cmd_riesz(opts);
    if (opts.command == "blaschke") return cmd_blaschke(opts);
    if (opts.command == "implication") return cmd_implication(opts);
    if (opts.command == "inequality-c") return cmd_inequality_c(opts);
    if (opts.command == "identity") return cmd_identity(opts);
    if (opts.command == "l-bound") return cmd_l_bound(opts);
    if (opts.command == "validate-v") return cmd_validate_v(opts);
    return 3;
  } catch (const UsageError& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"code", e.code}, {"status", "input"}, {"message", e.message}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 3;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = {{"code", 6}, {"status", "internal"}, {"message", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 3;
  }
}
