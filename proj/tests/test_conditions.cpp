#include <cmath>

#include "doctest.h"
#include "conditions/checks.hpp"
#include "conditions/test_function.hpp"
#include "expr/parser.hpp"
#include "potential/green.hpp"
#include "test_rng.hpp"

using namespace blab;

namespace {

const double kLog2 = std::log(2.0);

Domain classical_domain() {
  return Domain::unit_disk().with_inner(Domain::disk(Complex{0, 0}, 0.5));
}

ZeroSequence radial_zeros(const Domain& region, int n,
                          const std::function<double(int)>& radius_of) {
  std::vector<ZeroEntry> entries;
  entries.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const double rho = radius_of(k);
    if (!(rho >= 0.0) || rho >= 1.0) continue;
    // Spread angles so nothing collides; radii drive the sums.
    const double ang = 2.39996322972865332 * k;  // golden angle
    entries.push_back(ZeroEntry{rho * Complex{std::cos(ang), std::sin(ang)}, 1, 0.0});
  }
  return zero_sequence_from_entries(std::move(entries), region);
}

}  // namespace

TEST_CASE("log-inverse test function matches the classical data") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  CHECK(v.b() == doctest::Approx(kLog2));
  CHECK(v.flags().vanishes_on_boundary);
  CHECK_FALSE(v.flags().normal_derivative_vanishes);
  CHECK(v.eval(Complex{0.7, 0}) == doctest::Approx(-std::log(0.7)));
  CHECK(v.eval(Complex{1.2, 0}) == 0.0);
}

TEST_CASE("green pole at the origin evaluates like log-inverse") {
  const Domain d = classical_domain();
  TestFunction green = make_test_function("greenpole:0", d);
  TestFunction loginv = make_test_function("loginv", d);
  testrng::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Complex z{rng.uniform(-0.99, 0.99), rng.uniform(-0.99, 0.99)};
    if (std::abs(z) <= 0.5 || std::abs(z) >= 1.0) continue;
    CHECK(green.eval(z) == doctest::Approx(loginv.eval(z)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(make_test_function("greenpole:0.8", d), Error);  // pole outside D0
}

TEST_CASE("boundary power: bound, flags and core requirement") {
  const Domain d = Domain::unit_disk().with_inner(Domain::disk(Complex{0, 0}, 0.75));
  TestFunction v = make_test_function("power:2", d);
  CHECK(v.b() == doctest::Approx(0.19140625));
  CHECK(v.flags().vanishes_on_boundary);
  CHECK(v.flags().normal_derivative_vanishes);
  // D0 must cover the non-subharmonic core disk of radius 1/sqrt(q).
  const Domain too_small = classical_domain();
  CHECK_THROWS_AS(make_test_function("power:2", too_small), Error);
}

TEST_CASE("validation measures the boundary normal derivative") {
  const Domain d = classical_domain();
  TestFunction loginv = TestFunction::from_text("loginv", d);
  ValidationReport rep = validate_test_function(loginv, 0.5 / 64.0);
  CHECK(rep.class_member());
  CHECK(rep.normal_derivative_max == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_FALSE(rep.normal_derivative_zero);

  const Domain d75 = Domain::unit_disk().with_inner(Domain::disk(Complex{0, 0}, 0.75));
  TestFunction power = TestFunction::from_text("power:2", d75);
  ValidationReport rep2 = validate_test_function(power, 0.25 / 48.0);
  CHECK(rep2.class_member());
  CHECK(rep2.normal_derivative_zero);
}

TEST_CASE("negative custom test functions fail validation") {
  const Domain d = classical_domain();
  TestFunction bad = TestFunction::custom(d, parse_function("0-1"));
  ValidationReport rep = validate_test_function(bad, 0.5 / 64.0);
  CHECK_FALSE(rep.nonnegative);
  CHECK_FALSE(rep.class_member());
  CHECK_THROWS_AS(make_custom_test_function(d, parse_function("0-1")), Error);
}

TEST_CASE("collar search inverts the log-inverse level sets") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  const double eps[] = {1.0, 0.1, 0.01};
  ConditionReport rep = check_O_condition(v, eps);
  CHECK(rep.verdict == Verdict::Holds);
  const auto& collars = rep.extra.at("collars");
  REQUIRE(collars.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const double expected = std::exp(-eps[i]);
    CHECK(collars[i].at("chart_radius").get<double>() ==
          doctest::Approx(expected).epsilon(1e-8));
  }
  // Collars shrink toward the boundary as epsilon decreases.
  CHECK(collars[0].at("delta").get<double>() > collars[1].at("delta").get<double>());
  CHECK(collars[1].at("delta").get<double>() > collars[2].at("delta").get<double>());
}

TEST_CASE("constant test functions admit no collar") {
  const Domain d = classical_domain();
  TestFunction one = TestFunction::custom(d, parse_function("1"));
  const double eps[] = {0.5};
  ConditionReport rep = check_O_condition(one, eps);
  CHECK(rep.verdict == Verdict::Fails);
}

TEST_CASE("every validated builtin satisfies the vanishing condition") {
  const Domain d75 = Domain::unit_disk().with_inner(Domain::disk(Complex{0, 0}, 0.75));
  const double eps[] = {1.0, 0.25, 0.05};
  for (const char* kind : {"loginv", "greenpole:0.1i", "power:2", "power:3"}) {
    TestFunction v = make_test_function(kind, d75);
    ConditionReport rep = check_O_condition(v, eps);
    CHECK(rep.verdict == Verdict::Holds);
  }
}

TEST_CASE("blaschke functional on the classical two-zero example") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  ZeroSequence z = zero_sequence_from_entries(
      {ZeroEntry{Complex{0.9, 0}, 1, 0}, ZeroEntry{Complex{0.99, 0}, 1, 0}},
      Domain::unit_disk());
  SumTrace trace = blaschke_functional(v, z);
  CHECK(trace.final_sum == doctest::Approx(0.11541085151132773).epsilon(1e-9));
  REQUIRE(trace.partial_sums.size() == 2);
  CHECK(trace.partial_sums[0] <= trace.partial_sums[1]);
}

TEST_CASE("zeros inside D0 contribute nothing") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  ZeroSequence z = zero_sequence_from_entries(
      {ZeroEntry{Complex{0.1, 0}, 1, 0}, ZeroEntry{Complex{0.0, 0.3}, 2, 0}},
      Domain::unit_disk());
  SumTrace trace = blaschke_functional(v, z);
  CHECK(trace.final_sum == 0.0);
  CHECK(trace.skipped_inner == 2);
}

TEST_CASE("harmonic-series zeros give an unbounded trace") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  const int n = 10000;
  ZeroSequence z =
      radial_zeros(Domain::unit_disk(), n, [](int k) { return 1.0 - 1.0 / k; });
  SumTrace trace = blaschke_functional(v, z);
  // The partial sums telescope to log(n).
  CHECK(trace.final_sum == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-9));
  TraceAnalysis analysis = classify_trace(trace);
  CHECK(analysis.cls == TraceClass::Divergent);
  CHECK(analysis.slope > -1.05);
}

TEST_CASE("square-summable zeros give a convergent trace") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  ZeroSequence z = radial_zeros(Domain::unit_disk(), 10000,
                                [](int k) { return 1.0 - 1.0 / (static_cast<double>(k) * k); });
  SumTrace trace = blaschke_functional(v, z);
  CHECK(trace.final_sum < kPi * kPi / 6.0 * 1.05);
  TraceAnalysis analysis = classify_trace(trace);
  CHECK(analysis.cls == TraceClass::Convergent);
  CHECK(analysis.slope < -1.5);
}

TEST_CASE("majorant verification against zero") {
  const Domain d = classical_domain();
  FunctionSpec b = parse_function("blaschke(0.6; -0.55i)");
  MajorantReport ok = verify_majorant(Field(b), Field(parse_function("0")), d, 1.0 / 128.0);
  CHECK(ok.holds);

  MajorantReport bad =
      verify_majorant(Field::log_modulus_of(parse_function("2")),
                      Field(parse_function("0")), d, 1.0 / 128.0);
  CHECK_FALSE(bad.holds);
  CHECK(bad.worst_violation == doctest::Approx(kLog2));

  MajorantReport equal = verify_majorant(Field(b), Field(b), d, 1.0 / 128.0);
  CHECK(equal.holds);
}

TEST_CASE("implication: atomic measure makes the two sides coincide") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  std::vector<ZeroAtom> zeros;
  for (int k = 1; k <= 12; ++k)
    zeros.push_back(ZeroAtom{Complex{1.0 - std::pow(2.0, -k), 0.0}, 1});
  FunctionSpec b = FunctionSpec::blaschke(zeros);
  ImplicationOptions opt;
  opt.route = MeasureRoute::Atomic;
  ConditionReport rep = check_implication(&b, nullptr, Field(b), v, d, opt);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.lhs == doctest::Approx(rep.rhs).epsilon(1e-9));
}

TEST_CASE("implication with the zero majorant records the constant") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  std::vector<ZeroAtom> zeros;
  for (int k = 1; k <= 12; ++k)
    zeros.push_back(ZeroAtom{Complex{1.0 - std::pow(2.0, -k), 0.0}, 1});
  FunctionSpec b = FunctionSpec::blaschke(zeros);
  ImplicationOptions opt;
  opt.route = MeasureRoute::Atomic;
  ConditionReport rep = check_implication(&b, nullptr, Field(parse_function("0")), v, d, opt);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.lhs == 0.0);
  CHECK(rep.constants.at("c_prime") == doctest::Approx(rep.rhs));
}

TEST_CASE("implication flags the uniqueness contrapositive on divergent data") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  ZeroSequence z =
      radial_zeros(Domain::unit_disk(), 10000, [](int k) { return 1.0 - 1.0 / k; });
  ConditionReport rep =
      check_implication(nullptr, &z, Field(parse_function("0")), v, d);
  CHECK(rep.verdict == Verdict::Fails);
  bool flagged = false;
  for (const std::string& note : rep.notes)
    if (note.find("uniqueness") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("implication rejects a false majorant") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  FunctionSpec two = parse_function("2");
  CHECK_THROWS_AS(
      check_implication(&two, nullptr, Field(parse_function("0")), v, d), Error);
}

TEST_CASE("inequality: the equality case u = M needs no constant") {
  const Domain d = classical_domain();
  FunctionSpec b = parse_function("blaschke(0.7; -0.6i; (0.55+0.2i))");
  TestFunction v[] = {make_test_function("loginv", d)};
  ConditionReport rep =
      evaluate_inequality_C(Field(b), Field(b), v, Complex{0.05, 0.05}, kLog2, d);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.constants.at("c_min") == 0.0);
  CHECK(rep.constants.at("cbar_sup") == 0.0);

  // Determinism across repeated runs.
  ConditionReport rep2 =
      evaluate_inequality_C(Field(b), Field(b), v, Complex{0.05, 0.05}, kLog2, d);
  CHECK(rep.constants.at("c_min") == rep2.constants.at("c_min"));
  CHECK(rep.to_json() == rep2.to_json());
}

TEST_CASE("inequality: zero majorant reduces to the jensen ratio") {
  const Domain d = classical_domain();
  // Zeros outside D0 so the summed side sees all of them.
  FunctionSpec b = parse_function("blaschke(0.7; -0.65i; (0.5+0.45i))");
  TestFunction v[] = {make_test_function("greenpole:0", d)};
  ConditionReport rep = evaluate_inequality_C(Field(b), Field(parse_function("0")), v,
                                              Complex{0, 0}, kLog2, d);
  CHECK(rep.verdict == Verdict::Holds);
  double jensen = 0.0;
  for (const ZeroAtom& za : b.known_zeros())
    jensen += za.multiplicity * green_unit_disk(za.location, Complex{0, 0});
  const double u0 = b.log_modulus(Complex{0, 0});
  CHECK(rep.constants.at("c_min") == doctest::Approx(jensen / (-u0)).epsilon(1e-9));
}

TEST_CASE("inequality: quotient charge feeds the negative-part terms") {
  const Domain d = classical_domain();
  FunctionSpec m = parse_function("logabs(blaschke(0.7; -0.6i)/blaschke(0.62))");
  // u must stay below M: shift the same quotient down by a positive constant.
  FunctionSpec u = parse_function("logabs(blaschke(0.7; -0.6i)/blaschke(0.62))-0.5");
  TestFunction v[] = {make_test_function("loginv", d)};
  InequalityOptions opt;
  opt.route_u = MeasureRoute::Grid;  // the constant shift hides the atomic form
  ConditionReport rep =
      evaluate_inequality_C(Field(u), Field(m), v, Complex{0.1, 0}, kLog2, d, opt);
  CHECK(rep.verdict == Verdict::Holds);
  // t2 integrates v over the denominator zero at 0.62.
  const auto& row = rep.extra.at("family").at(0);
  CHECK(row.at("t2").get<double>() == doctest::Approx(-std::log(0.62)).epsilon(1e-6));
}

TEST_CASE("c-prime estimate: identity and homogeneity cases") {
  const Domain d = classical_domain();
  FunctionSpec b = parse_function("blaschke(0.75; -0.7i)");
  MeasureEstimate nu;
  for (const ZeroAtom& za : b.known_zeros())
    nu.atoms.push_back(MassAtom{za.location, static_cast<double>(za.multiplicity)});

  std::vector<TestFunction> family;
  family.push_back(make_test_function("loginv", d));
  family.push_back(make_test_function("greenpole:0.1", d, 0.75));

  // nu equal to the riesz measure of M gives zero.
  ConditionReport same = estimate_C_prime(nu, Field(b), d, kLog2, family);
  CHECK(same.constants.at("c_prime") == doctest::Approx(0.0).epsilon(1e-12));

  // M = 0: the estimate is the largest family sum over the zeros.
  ConditionReport rep =
      estimate_C_prime(nu, Field(parse_function("0")), d, kLog2, family);
  double expected = 0.0;
  for (const TestFunction& v : family) {
    double s = 0.0;
    for (const ZeroAtom& za : b.known_zeros()) s += v.eval(za.location);
    expected = std::max(expected, s);
  }
  CHECK(rep.constants.at("c_prime") == doctest::Approx(expected).epsilon(1e-12));

  // Zero measure against a nonnegative charge clamps at zero.
  MeasureEstimate none;
  ConditionReport zero = estimate_C_prime(none, Field(b), d, kLog2, family);
  CHECK(zero.constants.at("c_prime") == 0.0);

  // The class bound is enforced.
  std::vector<TestFunction> big;
  big.push_back(make_test_function("loginv", d, 10.0));
  CHECK_THROWS_AS(estimate_C_prime(nu, Field(b), d, kLog2, big), Error);
}

TEST_CASE("identity residual on the smooth corpus") {
  const Domain d = Domain::unit_disk().with_inner(Domain::disk(Complex{0, 0}, 0.75));
  TestFunction v = make_test_function("power:2", d);
  const double h = 1.0 / 256.0;
  for (const char* m_text : {"re(z)", "1", "abs(z)^4"}) {
    ConditionReport rep = green_identity_residual(Field(parse_function(m_text)), v, d, h);
    CHECK(rep.constants.at("residual") < 1e-3);
    CHECK(rep.verdict == Verdict::Holds);
  }
}

TEST_CASE("identity residual shrinks under refinement") {
  const Domain d = Domain::unit_disk().with_inner(Domain::disk(Complex{0, 0}, 0.75));
  TestFunction v = make_test_function("power:2", d);
  Field m(parse_function("abs(z)^4"));
  const double r1 = green_identity_residual(m, v, d, 1.0 / 256.0).constants.at("residual");
  const double r2 = green_identity_residual(m, v, d, 1.0 / 512.0).constants.at("residual");
  CHECK(r2 <= 0.5 * r1 + 1e-6);
}

TEST_CASE("identity rejects test functions without the boundary flags") {
  const Domain d = classical_domain();
  TestFunction loginv = make_test_function("loginv", d);
  CHECK_THROWS_AS(
      green_identity_residual(Field(parse_function("re(z)")), loginv, d, 1.0 / 128.0),
      Error);
}

TEST_CASE("l-bound trivial and sub-mean cases") {
  const Domain d = Domain::unit_disk();
  Field zero(parse_function("0"));
  FunctionSpec one = parse_function("1");
  ConditionReport trivial =
      check_L_bound(zero, one, zero, Complex{0.3, 0.2}, 0.25, 0.5, d);
  CHECK(trivial.verdict == Verdict::Holds);

  FunctionSpec b = parse_function("blaschke(0.6; -0.5i; (0.3+0.6i))");
  ConditionReport sub =
      check_L_bound(zero, b, Field(b), Complex{0.1, -0.2}, 0.3, 0.5, d);
  CHECK(sub.verdict == Verdict::Holds);
  CHECK(sub.lhs <= sub.constants.at("circular_mean") + 1e-12);

  // Admissibility violations are precondition errors.
  CHECK_THROWS_AS(check_L_bound(zero, one, zero, Complex{0.9, 0}, 0.2, 0.5, d), Error);
  CHECK_THROWS_AS(check_L_bound(zero, one, zero, Complex{0.3, 0}, 0.0, 0.5, d), Error);
}

TEST_CASE("functionals are positively homogeneous in v") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  ZeroSequence z = zero_sequence_from_entries(
      {ZeroEntry{Complex{0.9, 0}, 1, 0}, ZeroEntry{Complex{0.7, 0.2}, 2, 0}},
      Domain::unit_disk());
  MeasureEstimate nu = zero_counting_measure(z);
  const double base_sum = blaschke_functional(v, z).final_sum;
  const double base_int = integrate_measure([&](Complex w) { return v.eval(w); }, nu,
                                            RegionFilter::between(d));
  for (double a : {0.5, 2.0, 10.0}) {
    TestFunction va = v.scaled(a);
    CHECK(std::abs(blaschke_functional(va, z).final_sum - a * base_sum) <=
          1e-12 * std::abs(a * base_sum));
    const double scaled_int = integrate_measure(
        [&](Complex w) { return va.eval(w); }, nu, RegionFilter::between(d));
    CHECK(std::abs(scaled_int - a * base_int) <= 1e-12 * std::abs(a * base_int));
    CHECK(va.b() == doctest::Approx(a * v.b()).epsilon(1e-14));
  }
}

TEST_CASE("reports serialize deterministically with embedded inputs") {
  const Domain d = classical_domain();
  TestFunction v = make_test_function("loginv", d);
  ZeroSequence z = zero_sequence_from_entries({ZeroEntry{Complex{0.9, 0}, 1, 0}},
                                              Domain::unit_disk());
  SumTrace trace = blaschke_functional(v, z);
  ConditionReport rep;
  rep.condition = "blaschke";
  rep.trace = trace;
  rep.inputs.emplace_back("v", v.describe());
  const std::string json = rep.to_json();
  CHECK(json.find("\"condition\": \"blaschke\"") != std::string::npos);
  CHECK(json.find("loginv") != std::string::npos);
  const std::string csv = rep.to_csv();
  CHECK(csv.rfind("k,abs_zk,partial_sum\n", 0) == 0);
}

TEST_CASE("inequality over a family shares one constant") {
  const Domain d = classical_domain();
  FunctionSpec b = parse_function("blaschke(0.7; -0.65i; (0.5+0.45i))");
  std::vector<TestFunction> family;
  family.push_back(make_test_function("greenpole:0", d));
  family.push_back(make_test_function("loginv", d));
  family.push_back(make_test_function("greenpole:0.2", d, 0.5));
  ConditionReport rep = evaluate_inequality_C(Field(b), Field(parse_function("0")),
                                              family, Complex{0, 0}, kLog2, d);
  CHECK(rep.verdict == Verdict::Holds);
  // loginv and the origin green pole coincide, so both need the jensen ratio.
  CHECK(rep.constants.at("c_min") >= 1.0 - 1e-9);
  const auto& rows = rep.extra.at("family");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("c_min").get<double>() ==
        doctest::Approx(rows[1].at("c_min").get<double>()).epsilon(1e-9));
}

TEST_CASE("the pipeline works on a scaled disk domain") {
  const Domain d = Domain::disk(Complex{0, 0}, 2.0)
                       .with_inner(Domain::disk(Complex{0, 0}, 1.0));
  TestFunction v = make_test_function("loginv", d);
  CHECK(v.b() == doctest::Approx(kLog2));
  FunctionSpec f = parse_function("z^2-2.25");  // zeros at +-1.5
  ImplicationOptions opt;
  opt.route = MeasureRoute::Atomic;
  ConditionReport rep =
      check_implication(&f, nullptr, Field::log_modulus_of(f), v, d, opt);
  CHECK(rep.verdict == Verdict::Holds);
  // v at the zeros: -log(1.5 / 2) each.
  CHECK(rep.rhs == doctest::Approx(2.0 * std::log(2.0 / 1.5)).epsilon(1e-9));
  CHECK(rep.lhs == doctest::Approx(rep.rhs).epsilon(1e-9));

  const double eps[] = {0.5, 0.05};
  CHECK(check_O_condition(v, eps).verdict == Verdict::Holds);
}

TEST_CASE("test functions on an offset inner domain") {
  const Domain d =
      Domain::unit_disk().with_inner(Domain::disk(Complex{0.1, 0.05}, 0.45));
  TestFunction v = make_test_function("loginv", d);
  // b is a sampled sup with inflation: at least the true sup on the circle.
  double sup = 0.0;
  for (int k = 0; k < 720; ++k) {
    const double a = kTwoPi * k / 720;
    sup = std::max(sup, v.eval(Complex{0.1, 0.05} +
                               0.45 * Complex{std::cos(a), std::sin(a)}));
  }
  CHECK(v.b() >= sup);
  CHECK(v.b() <= sup * 1.02);
  const double eps[] = {0.5, 0.1};
  CHECK(check_O_condition(v, eps).verdict == Verdict::Holds);
}

TEST_CASE("trace classifier branches") {
  // Explicit bound exceeded.
  SumTrace t;
  for (int k = 1; k <= 10; ++k) {
    t.index.push_back(k);
    t.abs_zk.push_back(0.9);
    t.partial_sums.push_back(k * 1.0);
  }
  t.final_sum = 10.0;
  TraceAnalysis bound = classify_trace(t, 5.0);
  CHECK(bound.cls == TraceClass::Divergent);
  CHECK(bound.exceeded_bound);

  // Too short for the tail model without a bound.
  TraceAnalysis tiny = classify_trace(t);
  CHECK(tiny.cls == TraceClass::TooShort);

  // Long but with vanishing terms in the tail: nothing to fit.
  SumTrace flat;
  for (int k = 1; k <= 100; ++k) {
    flat.index.push_back(k);
    flat.abs_zk.push_back(0.9);
    flat.partial_sums.push_back(1.0);  // all terms after the first are zero
  }
  flat.final_sum = 1.0;
  CHECK(classify_trace(flat).cls == TraceClass::Inconclusive);
}

TEST_CASE("inequality rejects a base point outside the numeric dom set") {
  const Domain d = classical_domain();
  // A zero exactly at z0 puts an atom of the charge at the base point.
  FunctionSpec b = parse_function("blaschke(0.1; 0.7)");
  TestFunction v[] = {make_test_function("loginv", d)};
  CHECK_THROWS_AS(evaluate_inequality_C(Field(b), Field(b), v, Complex{0.1, 0.0},
                                        kLog2, d),
                  Error);
}
