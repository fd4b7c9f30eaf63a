#include "zeros/locate.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "zeros/winding.hpp"

namespace blab {

namespace {

struct Box {
  double x0, y0, x1, y1;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double side() const { return std::max(width(), height()); }
  double diag() const { return std::hypot(width(), height()); }
  Complex center() const { return Complex{0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  bool holds(Complex z, double slack = 0.0) const {
    return z.real() >= x0 - slack && z.real() <= x1 + slack &&
           z.imag() >= y0 - slack && z.imag() <= y1 + slack;
  }
};

bool box_outside_region(const Domain& region, const Box& b) {
  if (region.kind() == Domain::Kind::WholePlane) return false;
  auto circle = region.boundary_circle();
  if (circle) {
    const bool region_is_inside = region.contains(circle->center);
    const double cx = std::clamp(circle->center.real(), b.x0, b.x1);
    const double cy = std::clamp(circle->center.imag(), b.y0, b.y1);
    const double nearest = std::abs(Complex{cx, cy} - circle->center);
    if (region_is_inside) return nearest >= circle->radius;
    // Region is the circle exterior: the box misses it only when the box
    // sits entirely inside the closed disk.
    double farthest = 0.0;
    for (double x : {b.x0, b.x1})
      for (double y : {b.y0, b.y1})
        farthest = std::max(farthest, std::abs(Complex{x, y} - circle->center));
    return farthest <= circle->radius;
  }
  // Half plane: both sides are convex, so corner membership decides.
  for (double x : {b.x0, b.x1})
    for (double y : {b.y0, b.y1})
      if (region.contains(Complex{x, y})) return false;
  return true;
}

class Locator {
 public:
  Locator(const FunctionSpec& f, const Domain& region, const LocateOptions& opt)
      // The region was already validated against the declared domain; the
      // internal box contours may graze the bounding-square corners, so the
      // working copy drops the declaration.
      : f_(f.with_declared_domain(nullptr)),
        region_(region),
        opt_(opt),
        poles_(f.known_poles()) {
    // Blaschke products evaluate with full relative accuracy at any
    // magnitude, so only exact zeros invalidate a contour; the absolute
    // threshold would misfire near heavy zero clusters.
    contour_tol_ = f.kind() == FunctionSpec::Kind::BlaschkeProduct
                       ? 1e-250
                       : opt.contour_tol;
  }

  std::vector<ZeroEntry> run() {
    Complex lo, hi;
    region_.bounding_box(&lo, &hi);
    Box root{lo.real(), lo.imag(), hi.real(), hi.imag()};
    if (pole_free(root)) {
      process(root, root_winding(root), true);
    } else {
      process(root, 0, false);
    }
    return std::move(found_);
  }

 private:
  bool pole_free(const Box& b) const {
    // Only poles essentially inside the box poison the argument principle;
    // near-outside poles just cost contour nodes.
    for (Complex p : poles_)
      if (b.holds(p, 1e-9 * (1.0 + std::abs(p)))) return false;
    return true;
  }

  int winding_of(const Box& b) const {
    Contour c = Contour::rectangle(Complex{b.x0, b.y0}, Complex{b.x1, b.y1}, 64);
    return winding_number(f_, c, contour_tol_);
  }

  int root_winding(const Box& b) const {
    for (int k = 0; k <= 5; ++k) {
      Box attempt = b;
      const double pad = k * b.side() / 7.0;
      attempt.x0 -= pad;
      attempt.y0 -= pad;
      attempt.x1 += pad;
      attempt.y1 += pad;
      if (!pole_free(attempt)) continue;
      try {
        return winding_of(attempt);
      } catch (const Error&) {
        // zero on (or numerically too near) this contour; widen and retry
      }
    }
    fail(ErrorCode::Precondition,
         "zero on contour at every perturbation attempt (root box)");
  }

  void process(const Box& b, int w, bool trusted) {
    if (++boxes_ > opt_.max_boxes)
      fail(ErrorCode::Numeric, "subdivision budget exceeded");
    if (box_outside_region(region_, b)) return;
    if (trusted && w == 0) return;
    if (trusted && w == 1) {
      if (try_newton(b)) return;
      if (b.diag() <= opt_.refine_tol) {
        emit(b.center(), 1, b.diag());
        return;
      }
      subdivide(b);
      return;
    }
    if (trusted && w >= 2) {
      if (b.side() < opt_.h_min) {
        emit(b.center(), w, b.diag());
        return;
      }
      subdivide(b);
      return;
    }
    // Untrusted boxes (containing a pole) and defensive cases: split blindly
    // down to the refinement scale so zeros separate from nearby poles.
    if (!trusted) {
      if (b.side() < std::max(opt_.refine_tol, 1e-13)) return;
      subdivide(b);
      return;
    }
    if (b.side() < opt_.h_min) return;
    subdivide(b);
  }

  void subdivide(const Box& b) {
    static constexpr double kOffsets[5] = {0.0, 1.0, -1.0, 2.0, -2.0};
    for (double off : kOffsets) {
      const double sx = b.x0 + b.width() * (0.5 + off / 7.0);
      const double sy = b.y0 + b.height() * (0.5 + off / 7.0);
      Box kids[4] = {
          Box{b.x0, b.y0, sx, sy},
          Box{sx, b.y0, b.x1, sy},
          Box{b.x0, sy, sx, b.y1},
          Box{sx, sy, b.x1, b.y1},
      };
      int winding[4];
      bool trusted[4];
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) {
        trusted[i] = pole_free(kids[i]);
        winding[i] = 0;
        if (!trusted[i]) continue;
        if (box_outside_region(region_, kids[i])) {
          // Skip the contour entirely; the child is dropped later anyway.
          winding[i] = 0;
          continue;
        }
        try {
          winding[i] = winding_of(kids[i]);
        } catch (const Error&) {
          ok = false;  // a zero sits on this split line; jitter it
        }
      }
      if (!ok) continue;
      for (int i = 0; i < 4; ++i)
        if (!box_outside_region(region_, kids[i]) || !trusted[i])
          process(kids[i], winding[i], trusted[i]);
      return;
    }
    fail(ErrorCode::Precondition,
         "zero on contour at every perturbation attempt near " +
             format_complex(b.center()));
  }

  bool try_newton(const Box& b) {
    Complex z = b.center();
    const int max_iters = 80;
    for (int iter = 0; iter < max_iters; ++iter) {
      const double step_scale = 1e-7 * (1.0 + std::abs(z));
      const Complex fz = f_.eval(z);
      const Complex d =
          (f_.eval(z + step_scale) - f_.eval(z - step_scale)) / (2.0 * step_scale);
      if (!std::isfinite(std::abs(fz)) || std::abs(d) == 0.0) return false;
      Complex step = fz / d;
      double t = 1.0;
      while (t > 1.0 / 32.0 && std::abs(f_.eval(z - t * step)) > std::abs(fz))
        t *= 0.5;
      z -= t * step;
      if (!b.holds(z, 3.0 * b.side())) return false;  // escaped the basin
      if (std::abs(t * step) <= 0.5 * opt_.refine_tol) {
        // Accept only results inside this box; the quadtree partition then
        // guarantees each zero is emitted exactly once.
        if (!b.holds(z, 1e-12 * (1.0 + std::abs(z)))) return false;
        emit(z, 1, std::abs(t * step));
        return true;
      }
    }
    return false;
  }

  void emit(Complex z, int multiplicity, double err) {
    if (!region_.contains(z)) return;
    found_.push_back(ZeroEntry{z, multiplicity, err});
  }

  const FunctionSpec f_;
  const Domain& region_;
  const LocateOptions& opt_;
  double contour_tol_ = 1e-12;
  std::vector<Complex> poles_;
  std::vector<ZeroEntry> found_;
  int boxes_ = 0;
};

}  // namespace

int ZeroSequence::total_multiplicity() const {
  int n = 0;
  for (const ZeroEntry& e : entries) n += e.multiplicity;
  return n;
}

void ZeroSequence::sort_canonical() {
  std::sort(entries.begin(), entries.end(), [this](const ZeroEntry& a, const ZeroEntry& b) {
    const double da = region.boundary_distance(a.location);
    const double db = region.boundary_distance(b.location);
    if (da != db) return da > db;
    if (a.location.real() != b.location.real())
      return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
}

namespace {

// A zero sitting exactly on a split line is seen as half its winding by both
// adjacent boxes; the refined duplicates land within the refinement
// resolution of each other and are merged back into one entry.
void merge_clusters(std::vector<ZeroEntry>& entries, double refine_tol) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size();) {
      const double sep = std::abs(entries[i].location - entries[j].location);
      const double tol =
          std::max({4.0 * refine_tol,
                    2.0 * (entries[i].refinement_error + entries[j].refinement_error),
                    1e-12});
      if (sep <= tol) {
        const int mi = entries[i].multiplicity, mj = entries[j].multiplicity;
        const Complex merged =
            (static_cast<double>(mi) * entries[i].location +
             static_cast<double>(mj) * entries[j].location) /
            static_cast<double>(mi + mj);
        entries[i].refinement_error =
            std::max(entries[i].refinement_error + std::abs(entries[i].location - merged),
                     entries[j].refinement_error + std::abs(entries[j].location - merged));
        entries[i].location = merged;
        entries[i].multiplicity = mi + mj;
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }
  }
}

}  // namespace

ZeroSequence locate_zeros(const FunctionSpec& f, const Domain& region,
                          const LocateOptions& options) {
  if (!(options.h_min > 0.0))
    fail(ErrorCode::InvalidArgument, "locate_zeros needs h_min > 0");
  if (const Domain* declared = f.declared_domain()) {
    auto circle = region.boundary_circle();
    if (circle && declared->kind() != Domain::Kind::WholePlane) {
      for (int k = 0; k < 64; ++k) {
        const double a = kTwoPi * k / 64;
        const Complex p =
            circle->center + circle->radius * Complex{std::cos(a), std::sin(a)};
        if (declared->chart_abs(p) > 1.0 + 1e-9)
          fail(ErrorCode::Precondition,
               "search region exits the function's declared domain");
      }
    }
  }
  ZeroSequence out;
  out.region = region;
  Locator locator(f, region, options);
  out.entries = locator.run();
  merge_clusters(out.entries, options.refine_tol);
  out.sort_canonical();
  return out;
}

MeasureEstimate zero_counting_measure(const ZeroSequence& z) {
  MeasureEstimate nu;
  nu.is_signed = false;
  nu.atoms.reserve(z.entries.size());
  for (const ZeroEntry& e : z.entries)
    nu.atoms.push_back(MassAtom{e.location, static_cast<double>(e.multiplicity)});
  return nu;
}

ZeroSequence zero_sequence_from_entries(std::vector<ZeroEntry> entries,
                                        const Domain& region) {
  for (const ZeroEntry& e : entries) {
    if (e.multiplicity < 1)
      fail(ErrorCode::InvalidArgument, "zero multiplicity must be positive");
    if (!region.contains(e.location))
      fail(ErrorCode::InvalidArgument, "zero " + format_complex(e.location) +
                                           " is not strictly inside the region");
  }
  ZeroSequence out;
  out.entries = std::move(entries);
  out.region = region;
  out.sort_canonical();
  return out;
}

std::string zeroseq_to_json(const ZeroSequence& z) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const ZeroEntry& e : z.entries)
    j.push_back({{"re", round_g15(e.location.real())},
                 {"im", round_g15(e.location.imag())},
                 {"mult", e.multiplicity},
                 {"err", round_g15(e.refinement_error)}});
  return j.dump(2) + "\n";
}

ZeroSequence zeroseq_from_json(const std::string& text, const Domain& region) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("zero list json: ") + e.what());
  }
  if (!j.is_array()) fail(ErrorCode::Parse, "zero list json must be an array");
  std::vector<ZeroEntry> entries;
  try {
    for (const auto& item : j)
      entries.push_back(ZeroEntry{
          Complex{item.at("re").get<double>(), item.at("im").get<double>()},
          item.value("mult", 1), item.value("err", 0.0)});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("zero list json: ") + e.what());
  }
  return zero_sequence_from_entries(std::move(entries), region);
}

std::string zeroseq_to_csv(const ZeroSequence& z) {
  std::string out = "re,im,mult,err\n";
  for (const ZeroEntry& e : z.entries)
    out += format_g15(e.location.real()) + "," + format_g15(e.location.imag()) +
           "," + std::to_string(e.multiplicity) + "," +
           format_g15(e.refinement_error) + "\n";
  return out;
}

}  // namespace blab
