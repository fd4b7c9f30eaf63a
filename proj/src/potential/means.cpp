#include "potential/means.hpp"

#include "geom/domain.hpp"

#include <cmath>
#include <vector>

namespace blab {

Field::Field(FunctionSpec spec)
    : spec_(std::make_shared<FunctionSpec>(std::move(spec))) {}

Field::Field(GridField grid) : grid_(std::make_shared<GridField>(std::move(grid))) {}

Field Field::log_modulus_of(FunctionSpec spec) {
  Field f(std::move(spec));
  f.force_logmod_ = true;
  return f;
}

double Field::operator()(Complex z) const {
  if (spec_) return force_logmod_ ? spec_->log_modulus(z) : spec_->field_value(z);
  return grid_->value_at(z);
}

bool Field::logmod_of_holomorphic() const {
  return spec_ && (force_logmod_ || !spec_->real_valued());
}

std::string Field::describe() const {
  if (spec_) return spec_->source_text();
  return "grid[" + std::to_string(grid_->nx) + "x" + std::to_string(grid_->ny) + "]";
}

double circular_mean(const Field& M, Complex z, double r, int nodes,
                     std::span<const ZeroAtom> known_zeros, const Domain* domain) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "circular_mean needs r > 0");
  if (nodes < 4) fail(ErrorCode::InvalidArgument, "circular_mean needs >= 4 nodes");
  if (!domain && M.spec()) domain = M.spec()->declared_domain();
  if (domain) {
    for (int k = 0; k < 32; ++k) {
      const double a = kTwoPi * k / 32;
      if (!domain->contains(z + r * Complex{std::cos(a), std::sin(a)}))
        fail(ErrorCode::Precondition, "circle exits the domain");
    }
  }

  // Zeros strictly inside the circle are deflated; their circular mean of the
  // log kernel is log r.
  std::vector<ZeroAtom> inside;
  double singular_part = 0.0;
  if (M.logmod_of_holomorphic()) {
    for (const ZeroAtom& za : known_zeros) {
      if (std::abs(za.location - z) < r) {
        inside.push_back(za);
        singular_part += za.multiplicity * std::log(r);
      }
    }
  }

  const FunctionSpec* spec = M.spec();
  std::vector<double> samples(static_cast<std::size_t>(nodes));
  bool any_finite = false;
  for (int k = 0; k < nodes; ++k) {
    const double a = kTwoPi * k / nodes;
    const Complex zeta = z + r * Complex{std::cos(a), std::sin(a)};
    double v;
    if (!inside.empty())
      v = spec->deflated_log_modulus(zeta, inside);
    else
      v = M(zeta);
    if (std::isfinite(v)) any_finite = true;
    samples[static_cast<std::size_t>(k)] = v;
  }
  if (!any_finite) fail(ErrorCode::Numeric, "all circle samples are -inf");
  return pairwise_sum(samples) / nodes + singular_part;
}

double disk_mean(const Field& M, Complex z, double r, int radial_nodes,
                 int angular_nodes, const Domain* domain) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "disk_mean needs r > 0");
  if (!domain && M.spec()) domain = M.spec()->declared_domain();
  if (domain) {
    for (int k = 0; k < 32; ++k) {
      const double a = kTwoPi * k / 32;
      if (!domain->contains(z + r * Complex{std::cos(a), std::sin(a)}))
        fail(ErrorCode::Precondition, "disk exits the domain");
    }
  }
  const GaussRule& rule = gauss_legendre(radial_nodes);
  std::vector<double> parts;
  parts.reserve(static_cast<std::size_t>(radial_nodes) * angular_nodes);
  for (int i = 0; i < radial_nodes; ++i) {
    const double rho = 0.5 * r * (rule.nodes[i] + 1.0);
    const double wr = 0.5 * r * rule.weights[i];
    for (int k = 0; k < angular_nodes; ++k) {
      const double a = kTwoPi * k / angular_nodes;
      const double v = M(z + rho * Complex{std::cos(a), std::sin(a)});
      parts.push_back(v * rho * wr * (kTwoPi / angular_nodes));
    }
  }
  return pairwise_sum(parts) / (kPi * r * r);
}

}  // namespace blab
