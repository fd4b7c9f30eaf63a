#include "potential/measure.hpp"

#include <cmath>

#include "json.hpp"

namespace blab {

double MeasureEstimate::total_mass() const {
  std::vector<double> parts;
  parts.reserve(atoms.size() + cells.size());
  for (const MassAtom& a : atoms) parts.push_back(a.mass);
  for (const MassCell& c : cells) parts.push_back(c.mass);
  return pairwise_sum(parts);
}

double MeasureEstimate::total_variation() const {
  std::vector<double> parts;
  parts.reserve(atoms.size() + cells.size());
  for (const MassAtom& a : atoms) parts.push_back(std::abs(a.mass));
  for (const MassCell& c : cells) parts.push_back(std::abs(c.mass));
  return pairwise_sum(parts);
}

void MeasureEstimate::check_unsigned() const {
  if (is_signed) return;
  for (const MassAtom& a : atoms)
    if (a.mass < 0.0) fail(ErrorCode::Validation, "unsigned measure carries a negative atom");
  for (const MassCell& c : cells)
    if (c.mass < 0.0) fail(ErrorCode::Validation, "unsigned measure carries a negative cell");
}

ChargeSplit hahn_jordan_split(const MeasureEstimate& nu) {
  if (!std::isfinite(nu.total_variation()))
    fail(ErrorCode::Precondition, "signed measure has infinite total variation");
  ChargeSplit split;
  split.positive.is_signed = false;
  split.negative.is_signed = false;
  for (const MassAtom& a : nu.atoms) {
    if (a.mass > 0.0)
      split.positive.atoms.push_back(a);
    else if (a.mass < 0.0)
      split.negative.atoms.push_back(MassAtom{a.location, -a.mass});
  }
  for (const MassCell& c : nu.cells) {
    if (c.mass > 0.0)
      split.positive.cells.push_back(c);
    else if (c.mass < 0.0)
      split.negative.cells.push_back(MassCell{c.lo, c.hi, -c.mass});
  }
  return split;
}

double integrate_measure(const std::function<double(Complex)>& v,
                         const MeasureEstimate& nu, const RegionFilter& filter) {
  std::vector<double> parts;
  parts.reserve(nu.atoms.size() + nu.cells.size());
  auto account = [&](Complex where, double mass) {
    if (mass == 0.0) return;
    if (!filter.contains(where)) return;
    const double value = v(where);
    if (!std::isfinite(value))
      fail(ErrorCode::Eval, "integrand is infinite at a carrier with nonzero mass (" +
                                format_complex(where) + ")");
    parts.push_back(value * mass);
  };
  for (const MassAtom& a : nu.atoms) account(a.location, a.mass);
  for (const MassCell& c : nu.cells) account(c.center(), c.mass);
  return pairwise_sum(parts);
}

namespace {

// F(x, y) = integral over [0,x] x [0,y] of log sqrt(s^2 + t^2); odd in each
// argument, so corner differences give the integral over any rectangle.
double log_corner(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  const double r2 = x * x + y * y;
  return 0.5 * (x * y * (std::log(r2) - 3.0) + x * x * std::atan(y / x) +
                y * y * std::atan(x / y));
}

double log_kernel_over_rect(Complex lo, Complex hi, Complex z) {
  const double x0 = lo.real() - z.real(), x1 = hi.real() - z.real();
  const double y0 = lo.imag() - z.imag(), y1 = hi.imag() - z.imag();
  return log_corner(x1, y1) - log_corner(x0, y1) - log_corner(x1, y0) +
         log_corner(x0, y0);
}

}  // namespace

double log_potential_at(const MeasureEstimate& nu, Complex z, double r) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "log_potential_at needs r > 0");
  std::vector<double> parts;
  for (const MassAtom& a : nu.atoms) {
    const double mass = std::abs(a.mass);
    if (mass == 0.0) continue;
    const double d = std::abs(a.location - z);
    if (d >= r) continue;
    if (d == 0.0) return kNegInf;
    parts.push_back(mass * std::log(d));
  }
  for (const MassCell& c : nu.cells) {
    const double mass = std::abs(c.mass);
    if (mass == 0.0) continue;
    const Complex mid = c.center();
    const bool holds_z = z.real() >= c.lo.real() && z.real() <= c.hi.real() &&
                         z.imag() >= c.lo.imag() && z.imag() <= c.hi.imag();
    if (holds_z) {
      const double area = (c.hi.real() - c.lo.real()) * (c.hi.imag() - c.lo.imag());
      parts.push_back(mass / area * log_kernel_over_rect(c.lo, c.hi, z));
      continue;
    }
    if (std::abs(mid - z) >= r) continue;
    parts.push_back(mass * std::log(std::abs(mid - z)));
  }
  return pairwise_sum(parts);
}

std::string measure_to_json(const MeasureEstimate& nu) {
  nlohmann::ordered_json j;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const MassAtom& a : nu.atoms)
    j["atoms"].push_back({{"re", round_g15(a.location.real())},
                          {"im", round_g15(a.location.imag())},
                          {"mass", round_g15(a.mass)}});
  j["cells"] = nlohmann::ordered_json::array();
  for (const MassCell& c : nu.cells)
    j["cells"].push_back(
        {{"rect",
          {{"lo", {{"re", round_g15(c.lo.real())}, {"im", round_g15(c.lo.imag())}}},
           {"hi", {{"re", round_g15(c.hi.real())}, {"im", round_g15(c.hi.imag())}}}}},
         {"mass", round_g15(c.mass)}});
  j["signed"] = nu.is_signed;
  return j.dump(2) + "\n";
}

MeasureEstimate measure_from_json(const std::string& text) {
  MeasureEstimate nu;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("measure json: ") + e.what());
  }
  try {
    for (const auto& a : j.value("atoms", nlohmann::json::array()))
      nu.atoms.push_back(MassAtom{Complex{a.at("re").get<double>(), a.at("im").get<double>()},
                                  a.at("mass").get<double>()});
    for (const auto& c : j.value("cells", nlohmann::json::array())) {
      const auto& rect = c.at("rect");
      nu.cells.push_back(MassCell{
          Complex{rect.at("lo").at("re").get<double>(), rect.at("lo").at("im").get<double>()},
          Complex{rect.at("hi").at("re").get<double>(), rect.at("hi").at("im").get<double>()},
          c.at("mass").get<double>()});
    }
    nu.is_signed = j.value("signed", true);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("measure json: ") + e.what());
  }
  return nu;
}

std::string measure_to_csv(const MeasureEstimate& nu) {
  std::string out = "kind,re,im,mass\n";
  for (const MassAtom& a : nu.atoms)
    out += "atom," + format_g15(a.location.real()) + "," +
           format_g15(a.location.imag()) + "," + format_g15(a.mass) + "\n";
  for (const MassCell& c : nu.cells) {
    const Complex mid = c.center();
    out += "cell," + format_g15(mid.real()) + "," + format_g15(mid.imag()) + "," +
           format_g15(c.mass) + "\n";
  }
  return out;
}

}  // namespace blab
