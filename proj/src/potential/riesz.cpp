#include "potential/riesz.hpp"

#include <algorithm>
#include <cmath>

#include "zeros/winding.hpp"

namespace blab {

MeasureEstimate riesz_measure_grid(const GridField& m, std::vector<Complex>* excluded,
                                   double cell_floor) {
  if (m.nx < 5 || m.ny < 5)
    fail(ErrorCode::Precondition, "grid too small for the Laplacian (< 3x3 interior)");
  MeasureEstimate nu;
  nu.is_signed = true;
  const double half = 0.5 * m.h;
  for (int iy = 1; iy + 1 < m.ny; ++iy) {
    for (int ix = 1; ix + 1 < m.nx; ++ix) {
      const int c = m.index(ix, iy);
      const int l = m.index(ix - 1, iy), r = m.index(ix + 1, iy);
      const int d = m.index(ix, iy - 1), u = m.index(ix, iy + 1);
      if (!m.mask[c] || !m.mask[l] || !m.mask[r] || !m.mask[d] || !m.mask[u]) continue;
      const double vc = m.values[c];
      const double sum4 = m.values[l] + m.values[r] + m.values[d] + m.values[u];
      if (!std::isfinite(vc) || !std::isfinite(sum4)) {
        if (excluded) excluded->push_back(m.node(ix, iy));
        continue;
      }
      const double mass = (sum4 - 4.0 * vc) / kTwoPi;
      if (std::abs(mass) <= cell_floor) continue;
      const Complex z = m.node(ix, iy);
      nu.cells.push_back(MassCell{z - Complex{half, half}, z + Complex{half, half}, mass});
    }
  }
  return nu;
}

namespace {

bool holomorphic_subtree(const Ast& ast, int idx) {
  const AstNode& n = ast.at(idx);
  switch (n.op) {
    case NodeOp::Constant:
    case NodeOp::Var:
    case NodeOp::Embedded:
      return true;
    case NodeOp::Add:
    case NodeOp::Sub:
    case NodeOp::Mul:
      return holomorphic_subtree(ast, n.lhs) && holomorphic_subtree(ast, n.rhs);
    case NodeOp::Pow:
    case NodeOp::Neg:
    case NodeOp::Exp:
      return holomorphic_subtree(ast, n.lhs);
    default:
      return false;
  }
}

FunctionSpec spec_of_subtree(const Ast& ast, int idx) {
  if (ast.at(idx).op == NodeOp::Embedded) return ast.embedded_at(ast.at(idx).embedded);
  Ast sub = ast.extract(idx);
  if (sub.is_monomial_sum())
    if (auto coeffs = sub.as_polynomial(); coeffs && coeffs->size() > 1)
      return FunctionSpec::polynomial(std::move(*coeffs));
  return FunctionSpec::expression(std::move(sub));
}

// Collects weight * log|factor| terms; nullopt when the tree is not a plain
// combination of log-moduli and constants.
bool collect_terms(const Ast& ast, int idx, double weight,
                   std::vector<LogModTerm>* out) {
  const AstNode& n = ast.at(idx);
  switch (n.op) {
    case NodeOp::Constant:
      return n.value.imag() == 0.0;  // constants are harmonic
    case NodeOp::Add:
      return collect_terms(ast, n.lhs, weight, out) &&
             collect_terms(ast, n.rhs, weight, out);
    case NodeOp::Sub:
      return collect_terms(ast, n.lhs, weight, out) &&
             collect_terms(ast, n.rhs, -weight, out);
    case NodeOp::Neg:
      return collect_terms(ast, n.lhs, -weight, out);
    case NodeOp::Mul: {
      const AstNode& a = ast.at(n.lhs);
      const AstNode& b = ast.at(n.rhs);
      if (a.op == NodeOp::Constant && a.value.imag() == 0.0)
        return collect_terms(ast, n.rhs, weight * a.value.real(), out);
      if (b.op == NodeOp::Constant && b.value.imag() == 0.0)
        return collect_terms(ast, n.lhs, weight * b.value.real(), out);
      return false;
    }
    case NodeOp::Div: {
      const AstNode& b = ast.at(n.rhs);
      if (b.op == NodeOp::Constant && b.value.imag() == 0.0 && b.value.real() != 0.0)
        return collect_terms(ast, n.lhs, weight / b.value.real(), out);
      return false;
    }
    case NodeOp::LogAbs: {
      // log|a*b| and log|a/b| split into separate factors.
      const AstNode& arg = ast.at(n.lhs);
      if (arg.op == NodeOp::Mul && holomorphic_subtree(ast, arg.lhs) &&
          holomorphic_subtree(ast, arg.rhs)) {
        out->push_back(LogModTerm{spec_of_subtree(ast, arg.lhs), weight});
        out->push_back(LogModTerm{spec_of_subtree(ast, arg.rhs), weight});
        return true;
      }
      if (arg.op == NodeOp::Div && holomorphic_subtree(ast, arg.lhs) &&
          holomorphic_subtree(ast, arg.rhs)) {
        out->push_back(LogModTerm{spec_of_subtree(ast, arg.lhs), weight});
        out->push_back(LogModTerm{spec_of_subtree(ast, arg.rhs), -weight});
        return true;
      }
      if (!holomorphic_subtree(ast, n.lhs)) return false;
      out->push_back(LogModTerm{spec_of_subtree(ast, n.lhs), weight});
      return true;
    }
    case NodeOp::Re:
    case NodeOp::Im:
      // Harmonic when the argument is holomorphic.
      return holomorphic_subtree(ast, n.lhs);
    default:
      return false;
  }
}

}  // namespace

std::optional<std::vector<LogModTerm>> decompose_log_modulus(const FunctionSpec& m) {
  std::vector<LogModTerm> terms;
  switch (m.kind()) {
    case FunctionSpec::Kind::BlaschkeProduct:
    case FunctionSpec::Kind::Polynomial:
      terms.push_back(LogModTerm{m, 1.0});
      return terms;
    case FunctionSpec::Kind::Expression:
      if (!m.real_valued()) {
        // A raw holomorphic expression used as a field means log|f|.
        terms.push_back(LogModTerm{m, 1.0});
        return terms;
      }
      if (collect_terms(m.ast(), m.ast().root(), 1.0, &terms)) return terms;
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

MeasureEstimate atomic_riesz(const Field& m, const Domain& domain,
                             const RieszOptions& options) {
  auto terms = decompose_log_modulus(*m.spec());
  if (!terms)
    fail(ErrorCode::Precondition,
         "field is not a recognizable combination of log-moduli; use the grid route");
  MeasureEstimate nu;
  nu.is_signed = true;
  for (const LogModTerm& term : *terms) {
    if (term.weight == 0.0) continue;
    std::vector<ZeroEntry> entries;
    if (term.factor.kind() == FunctionSpec::Kind::BlaschkeProduct) {
      for (const ZeroAtom& za : term.factor.known_zeros())
        if (domain.contains(za.location))
          entries.push_back(ZeroEntry{za.location, za.multiplicity, 0.0});
    } else {
      entries = locate_zeros(term.factor, domain, options.locate).entries;
    }
    for (const ZeroEntry& e : entries)
      nu.atoms.push_back(MassAtom{e.location, term.weight * e.multiplicity});
  }
  bool negative = false;
  for (const MassAtom& a : nu.atoms) negative = negative || a.mass < 0.0;
  nu.is_signed = negative;
  return nu;
}

MeasureEstimate grid_riesz(const Field& m, const Domain& domain,
                           const RieszOptions& options) {
  GridField grid;
  if (m.grid()) {
    grid = *m.grid();
  } else {
    Complex lo, hi;
    domain.bounding_box(&lo, &hi);
    const double margin = 2.0 * options.h;
    GridField sampled = sample_grid_field(
        [&](Complex z) {
          if (!domain.contains(z) || domain.boundary_distance(z) <= margin)
            fail(ErrorCode::Eval, "outside mask");
          return m(z);
        },
        lo, hi, options.h, nullptr);
    grid = std::move(sampled);
  }
  std::vector<Complex> excluded;
  MeasureEstimate nu = riesz_measure_grid(grid, &excluded, options.cell_floor);
  std::optional<std::vector<LogModTerm>> terms;
  if (!excluded.empty() && m.spec()) terms = decompose_log_modulus(*m.spec());
  if (!excluded.empty() && terms) {
    // Recover the mass that the skipped stencils around exact -inf nodes
    // would have carried: weighted winding counts minus what already leaked
    // into the kept cells nearby.
    std::vector<Complex> centers;
    for (Complex p : excluded) {
      bool merged = false;
      for (Complex q : centers)
        if (std::abs(p - q) < 6.0 * grid.h) merged = true;
      if (!merged) centers.push_back(p);
    }
    for (Complex center : centers) {
      const double radius = 4.0 * grid.h;
      double w = 0.0;
      bool counted = true;
      for (const LogModTerm& term : *terms) {
        bool term_done = false;
        for (int attempt = 0; attempt < 3 && !term_done; ++attempt) {
          try {
            w += term.weight *
                 winding_number(term.factor,
                                Contour::circle(center, radius * (1.0 + 0.31 * attempt),
                                                64),
                                1e-12);
            term_done = true;
          } catch (const Error&) {
          }
        }
        counted = counted && term_done;
      }
      if (!counted) continue;
      double kept = 0.0;
      for (const MassCell& c : nu.cells)
        if (std::abs(c.center() - center) < radius) kept += c.mass;
      nu.atoms.push_back(MassAtom{center, w - kept});
    }
  }
  return nu;
}

}  // namespace

double recover_field_value(const Field& m, const MeasureEstimate& nu, Complex z,
                           double r) {
  if (log_potential_at(nu, z, r) == kNegInf) return kPosInf;
  return disk_mean(m, z, r);
}

MeasureEstimate riesz_measure(const Field& m, const Domain& domain,
                              const RieszOptions& options, MeasureRoute route) {
  if (route == MeasureRoute::Atomic) return atomic_riesz(m, domain, options);
  if (route == MeasureRoute::Grid) return grid_riesz(m, domain, options);
  if (m.spec() && decompose_log_modulus(*m.spec()))
    return atomic_riesz(m, domain, options);
  return grid_riesz(m, domain, options);
}

}  // namespace blab
