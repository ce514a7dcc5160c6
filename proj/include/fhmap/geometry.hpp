#ifndef FHMAP_GEOMETRY_HPP
#define FHMAP_GEOMETRY_HPP

#include "fhmap/harmap.hpp"
#include "fhmap/numeric.hpp"
#include "fhmap/series.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fhmap {

/// Raised when a functional is evaluated where it is undefined (f(z) = 0 or
/// d/dtheta f = 0).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDegenerateTol = 1e-12;
inline constexpr double kGeometryTol = 1e-9;

// --- growth ---------------------------------------------------------------

template <typename Scalar>
std::pair<Scalar, Scalar> growth_bounds(Scalar lambda, Scalar r) {
  if (!(r >= 0) || !(r < 1)) throw std::invalid_argument("growth_bounds: r must lie in [0, 1)");
  if (!(lambda > 0) || lambda > 1) throw std::invalid_argument("growth_bounds: lambda must lie in (0, 1]");
  const Scalar bend = lambda * r * r / 2;
  return {r - bend, r + bend};
}

template <typename Scalar>
struct GrowthCheck {
  bool ok = true;
  Scalar worst_slack = std::numeric_limits<Scalar>::infinity();
  std::complex<Scalar> worst_point{0};
};

/// Checks r - lambda r^2/2 <= |f(z)| <= r + lambda r^2/2 at every grid point.
/// Grid radii equal to 1 are evaluated with the closed-disk envelope.
template <typename Scalar>
GrowthCheck<Scalar> check_growth(const HarmonicPolyMap<Scalar>& f, Scalar lambda, const DiskGrid<Scalar>& grid,
                                 Scalar tol = Scalar(kGeometryTol)) {
  GrowthCheck<Scalar> out;
  grid.for_each([&](std::complex<Scalar> z) {
    const Scalar r = std::abs(z);
    const Scalar bend = lambda * r * r / 2;
    const Scalar modulus = std::abs(eval_map(f, z));
    const Scalar slack = std::min(modulus - (r - bend), (r + bend) - modulus);
    if (slack < out.worst_slack) {
      out.worst_slack = slack;
      out.worst_point = z;
    }
  });
  out.ok = out.worst_slack >= -tol;
  return out;
}

// --- area -----------------------------------------------------------------

/// pi * sum_n n(|a_n|^2 - |b_n|^2), the image area counted with multiplicity.
template <typename Scalar>
Scalar area_exact(const HarmonicPolyMap<Scalar>& f) {
  std::vector<Scalar> terms;
  terms.reserve(static_cast<std::size_t>(f.degree()));
  for (int n = 1; n <= f.degree(); ++n) terms.push_back(Scalar(n) * (std::norm(f.a(n)) - std::norm(f.b(n))));
  return std::numbers::pi_v<Scalar> * pairwise_sum(terms);
}

/// Integral of the Jacobian over the disk: Gauss-Legendre on r in [0, 1]
/// (integrand J * r), trapezoid on theta. Terms are accumulated radius-major
/// with pairwise summation.
template <typename Scalar>
Scalar area_quadrature(const HarmonicPolyMap<Scalar>& f, int radial_nodes, int angular_nodes) {
  if (radial_nodes < 16 || angular_nodes < 16) throw std::invalid_argument("area_quadrature: need at least 16 nodes");
  const auto rule = gauss_legendre<Scalar>(radial_nodes, Scalar(0), Scalar(1));
  const Scalar dtheta = kTwoPi<Scalar> / Scalar(angular_nodes);
  std::vector<Scalar> terms;
  terms.reserve(static_cast<std::size_t>(radial_nodes) * angular_nodes);
  for (int i = 0; i < radial_nodes; ++i) {
    const Scalar r = rule.nodes[i];
    const Scalar w = rule.weights[i] * r * dtheta;
    for (int j = 0; j < angular_nodes; ++j) terms.push_back(w * jacobian(f, std::polar(r, dtheta * Scalar(j))));
  }
  return pairwise_sum(terms);
}

template <typename Scalar>
struct GridMargin {
  Scalar margin = std::numeric_limits<Scalar>::infinity();
  std::complex<Scalar> point{0};
};

/// min over the grid of (1 + |z|)^2 - J_f(z).
template <typename Scalar>
GridMargin<Scalar> jacobian_bound_margin(const HarmonicPolyMap<Scalar>& f, const DiskGrid<Scalar>& grid) {
  GridMargin<Scalar> out;
  grid.for_each([&](std::complex<Scalar> z) {
    const Scalar bound = (1 + std::abs(z)) * (1 + std::abs(z));
    const Scalar m = bound - jacobian(f, z);
    if (m < out.margin) out = {m, z};
  });
  return out;
}

// --- boundary -------------------------------------------------------------

template <typename Scalar = double>
struct BoundaryTrace {
  std::vector<std::complex<Scalar>> points;  // M samples plus the first repeated at the end
  Scalar length = 0;
  int winding_about_origin = 0;
};

/// Images of M equispaced points of |z| = 1, the closed polyline length and
/// the winding number about 0 from summed argument increments.
template <typename Scalar>
BoundaryTrace<Scalar> boundary_trace(const HarmonicPolyMap<Scalar>& f, int samples) {
  if (samples < 64) throw std::invalid_argument("boundary_trace: need at least 64 samples");
  BoundaryTrace<Scalar> trace;
  trace.points.reserve(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k < samples; ++k) {
    trace.points.push_back(eval_map(f, std::polar(Scalar(1), kTwoPi<Scalar> * Scalar(k) / Scalar(samples))));
  }
  trace.points.push_back(trace.points.front());

  std::vector<Scalar> segments;
  std::vector<Scalar> turns;
  segments.reserve(static_cast<std::size_t>(samples));
  turns.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const auto& p = trace.points[k];
    const auto& q = trace.points[k + 1];
    segments.push_back(std::abs(q - p));
    if (std::abs(p) < Scalar(kDegenerateTol)) throw DegenerateInput("boundary_trace: curve passes through the origin");
    turns.push_back(std::arg(q / p));
  }
  trace.length = pairwise_sum(segments);
  trace.winding_about_origin = static_cast<int>(std::lround(pairwise_sum(turns) / kTwoPi<Scalar>));
  return trace;
}

// --- starlikeness and convexity -------------------------------------------

enum class FunctionalKind { starlike, convex };

/// Re[(z h' - conj(z g')) / f] = d/dtheta arg f(r e^{i theta}); empty when
/// |f(z)| is below the degeneracy threshold.
template <typename Scalar>
std::optional<Scalar> try_starlike_functional(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  const auto w = eval_map(f, z);
  if (std::abs(w) < Scalar(kDegenerateTol)) return std::nullopt;
  const auto num = z * eval(f.dh(), z) - std::conj(z * eval(f.dg(), z));
  return (num / w).real();
}

/// d/dtheta arg(d/dtheta f) through the closed form
/// Re[(z h' + z^2 h'' + conj(z g' + z^2 g'')) / (z h' - conj(z g'))].
template <typename Scalar>
std::optional<Scalar> try_convex_functional(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  const auto zh = z * eval(f.dh(), z);
  const auto zg = z * eval(f.dg(), z);
  const auto den = zh - std::conj(zg);
  if (std::abs(den) < Scalar(kDegenerateTol)) return std::nullopt;
  const auto z2 = z * z;
  const auto num = zh + z2 * eval(f.d2h(), z) + std::conj(zg + z2 * eval(f.d2g(), z));
  return (num / den).real();
}

template <typename Scalar>
std::optional<Scalar> try_functional(const HarmonicPolyMap<Scalar>& f, FunctionalKind kind, std::complex<Scalar> z) {
  return kind == FunctionalKind::starlike ? try_starlike_functional(f, z) : try_convex_functional(f, z);
}

template <typename Scalar>
Scalar starlike_functional(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  if (z == std::complex<Scalar>(0)) throw std::invalid_argument("starlike_functional: z must be nonzero");
  const auto v = try_starlike_functional(f, z);
  if (!v) throw DegenerateInput("starlike_functional: f(z) vanishes");
  return *v;
}

template <typename Scalar>
Scalar convex_functional(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  if (z == std::complex<Scalar>(0)) throw std::invalid_argument("convex_functional: z must be nonzero");
  const auto v = try_convex_functional(f, z);
  if (!v) throw DegenerateInput("convex_functional: d/dtheta f vanishes");
  return *v;
}

template <typename Scalar = double>
struct OrderEstimate {
  Scalar value = std::numeric_limits<Scalar>::infinity();
  std::complex<Scalar> argmin_point{0};
  std::vector<std::complex<Scalar>> degenerate_points;

  /// The order as reported: negative infima clamp to 0.
  Scalar reported() const { return value < 0 ? Scalar(0) : value; }
};

/// Grid infimum of the chosen functional; degenerate points are skipped and
/// listed.
template <typename Scalar>
OrderEstimate<Scalar> order_estimate(const HarmonicPolyMap<Scalar>& f, FunctionalKind kind,
                                     const DiskGrid<Scalar>& grid) {
  OrderEstimate<Scalar> out;
  grid.for_each([&](std::complex<Scalar> z) {
    const auto v = try_functional(f, kind, z);
    if (!v) {
      out.degenerate_points.push_back(z);
      return;
    }
    if (*v < out.value) {
      out.value = *v;
      out.argmin_point = z;
    }
  });
  return out;
}

/// Minimum of the functional over a circle; empty if every point is degenerate.
template <typename Scalar>
std::optional<Scalar> circle_min(const HarmonicPolyMap<Scalar>& f, FunctionalKind kind, Scalar r, int angles) {
  std::optional<Scalar> best;
  for (int k = 0; k < angles; ++k) {
    const auto v = try_functional(f, kind, std::polar(r, kTwoPi<Scalar> * Scalar(k) / Scalar(angles)));
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

template <typename Scalar = double>
struct RadiusBracket {
  Scalar lo = 0;
  Scalar hi = 0;
  Scalar tol = 0;
  std::vector<Scalar> failing_radii;  // every scanned circle carrying a nonpositive value
  bool whole_disk = false;            // no failure up to r_max

  bool contains(Scalar r) const { return lo <= r && r <= hi; }
};

struct RadiusScan {
  double r_max = 0.999;
  int angles = 720;
  double step = 0.01;
};

/// Brackets the first radius where the functional stops being positive on the
/// sampled circle: outward scan in steps of `scan.step`, then bisection between
/// the last passing and the first failing circle. Positivity is not assumed
/// monotone in r; all failing scan circles are recorded.
template <typename Scalar>
RadiusBracket<Scalar> radius_bracket(const HarmonicPolyMap<Scalar>& f, FunctionalKind kind, Scalar tol,
                                     RadiusScan scan = {}) {
  if (!(tol >= Scalar(1e-4))) throw std::invalid_argument("radius_bracket: tol must be at least 1e-4");
  const Scalar r_max = Scalar(scan.r_max);
  std::vector<Scalar> radii;
  for (int k = 1; Scalar(k) * Scalar(scan.step) < r_max; ++k) radii.push_back(Scalar(k) * Scalar(scan.step));
  radii.push_back(r_max);

  RadiusBracket<Scalar> out;
  out.tol = tol;
  bool any_defined = false;
  std::optional<std::size_t> first_fail;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const auto m = circle_min(f, kind, radii[i], scan.angles);
    if (!m) continue;
    any_defined = true;
    if (*m <= 0) {
      out.failing_radii.push_back(radii[i]);
      if (!first_fail) first_fail = i;
    }
  }
  if (!any_defined) throw DegenerateInput("radius_bracket: functional degenerate on every sampled circle");
  if (!first_fail) {
    out.lo = out.hi = r_max;
    out.whole_disk = true;
    return out;
  }
  Scalar lo = *first_fail == 0 ? Scalar(0) : radii[*first_fail - 1];
  Scalar hi = radii[*first_fail];
  while (hi - lo > tol) {
    const Scalar mid = (lo + hi) / 2;
    const auto m = circle_min(f, kind, mid, scan.angles);
    if (m && *m <= 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.lo = lo;
  out.hi = hi;
  return out;
}

}  // namespace fhmap

#endif  // FHMAP_GEOMETRY_HPP
