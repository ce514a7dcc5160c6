// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "fhmap/classes.hpp"
#include "fhmap/geometry.hpp"
#include "fhmap/products.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

using namespace fhmap;
using C = std::complex<double>;
using Series = AnalyticSeries<double>;
using Map = HarmonicPolyMap<double>;
using Grid = DiskGrid<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240601;
constexpr int kDegree = 12;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Map coanalytic(double c) { return Map(Series{1.0, 0.0}, Series{0.0, c}); }
Map analytic(double c) { return Map::analytic(Series{1.0, c}); }

const Grid& grid() {
  static const Grid g = Grid::standard();
  return g;
}

Grid grid_within(double limit) {
  std::vector<double> radii;
  for (double r : grid().radii()) {
    if (r < limit) radii.push_back(r);
  }
  radii.push_back(limit);
  return Grid(radii, grid().angles());
}

bool member(const Map& f, double lambda) { return is_member_numeric(f, ClassSpec(lambda)).verdict == Verdict::member; }

double grid_min(const Map& f, FunctionalKind kind, const Grid& g = grid()) { return order_estimate(f, kind, g).value; }

struct Drawn {
  Map map;
  double lambda;
};

// Even indices from the coefficient generator, odd from the boundary one.
Drawn draw(std::uint64_t stream, int i, std::optional<double> lambda = {}) {
  SeededRng rng(mix_seed(kSeed, stream, i));
  const double lam = lambda.value_or(rng.uniform_left_open());
  const auto seed = mix_seed(kSeed, stream + 1, i);
  const auto map = i % 2 == 0 ? random_member_coeff(ClassSpec(lam), kDegree, seed)
                              : random_member_boundary(ClassSpec(lam), kDegree, seed);
  return {map, lam};
}

// --- finite-difference oracles (eval_map only) -----------------------------

C fd_theta(const Map& f, double r, double t, double step) {
  return (eval_map(f, std::polar(r, t + step)) - eval_map(f, std::polar(r, t - step))) / (2 * step);
}

double fd_convex(const Map& f, C z) {
  const double step = 1e-4;
  const C ahead = fd_theta(f, std::abs(z), std::arg(z) + step, 1e-6);
  const C behind = fd_theta(f, std::abs(z), std::arg(z) - step, 1e-6);
  return std::arg(ahead / behind) / (2 * step);
}

// --- criteria ----------------------------------------------------------------

Outcome area_extremes() {
  const double hi = area_exact(analytic(0.5));
  const double lo = area_exact(coanalytic(0.5));
  const double qhi = area_quadrature(analytic(0.5), 32, 64);
  const double qlo = area_quadrature(coanalytic(0.5), 32, 64);
  const bool ok = std::abs(hi - 1.5 * kPi) <= 1e-12 && std::abs(lo - 0.5 * kPi) <= 1e-12 &&
                  std::abs(qhi - hi) <= 1e-6 * hi && std::abs(qlo - lo) <= 1e-6 * lo;
  return {ok, fmt("exact %.15f, %.15f; quadrature rel err %.2e", hi, lo,
                  std::max(std::abs(qhi - hi) / hi, std::abs(qlo - lo) / lo))};
}

Outcome convexity_radius() {
  const auto b = radius_bracket(coanalytic(0.5), FunctionalKind::convex, 1e-3);
  return {b.contains(0.5), fmt("bracket [%.6f, %.6f]", b.lo, b.hi)};
}

Outcome starlike_orders() {
  bool ok = true;
  std::string detail;
  for (double lambda : {0.5, 1.0}) {
    const double est = order_estimate(coanalytic(lambda / 2), FunctionalKind::starlike, grid()).reported();
    const double expect = 2 * (1 - lambda) / (2 + lambda);
    ok = ok && std::abs(est - expect) <= 0.02;
    detail += fmt("lambda %.1f: %.4f vs %.4f; ", lambda, est, expect);
  }
  const double star = grid_min(coanalytic(0.125), FunctionalKind::starlike);
  const double cvx = grid_min(coanalytic(0.125), FunctionalKind::convex);
  ok = ok && std::abs(star - 2.0 / 3) <= 0.02 && std::abs(cvx - 0.4) <= 0.02;
  detail += fmt("z + conj(z)^2/8: %.4f, %.4f", star, cvx);
  return {ok, detail};
}

Outcome convolution_algebra() {
  bool ok = true;
  for (double lambda : {0.25, 0.5, 0.8, 1.0}) {
    const auto p = convolve(coanalytic(lambda / 2), coanalytic(lambda / 2));
    ok = ok && p == coanalytic(lambda * lambda / 4) && member(p, lambda * lambda / 2);
  }
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const auto f = draw(41, 2 * i, 1.0).map;
    const auto F = draw(41, 2 * i + 1, 1.0).map;
    worst = std::min(worst, grid_min(convolve(f, F), FunctionalKind::convex));
  }
  ok = ok && worst > -1e-6;
  return {ok, fmt("min convex functional over 100 convolutions %.4e", worst)};
}

Outcome growth_and_jacobian() {
  int growth_bad = 0;
  int jac_bad = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const auto d = draw(51, i);
    const auto g = check_growth(d.map, d.lambda, grid(), 1e-9);
    const auto j = jacobian_bound_margin(d.map, grid());
    growth_bad += !g.ok;
    jac_bad += j.margin < -1e-9;
    worst = std::min({worst, g.worst_slack, j.margin});
  }
  return {growth_bad == 0 && jac_bad == 0,
          fmt("1000 members: growth violations %.0f, jacobian violations %.0f, worst margin %.3e", growth_bad, jac_bad,
              worst)};
}

Outcome coefficient_inequalities() {
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = draw(61, i);
    double energy = 0.0;
    bool each = true;
    for (int n = 2; n <= d.map.degree(); ++n) {
      energy += double(n) * n * (std::norm(d.map.a(n)) + std::norm(d.map.b(n)));
      each = each && std::abs(d.map.a(n)) <= d.lambda / n + 1e-9 && std::abs(d.map.b(n)) <= d.lambda / n + 1e-9;
    }
    bad += !(energy <= d.lambda * d.lambda + 1e-9 && each);
  }
  return {bad == 0, fmt("1000 members, %.0f violations", bad)};
}

Outcome boundary_geometry() {
  int length_bad = 0;
  int winding_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const auto d = draw(71, i);
    const auto t = boundary_trace(d.map, 4096);
    length_bad += t.length > kTwoPi<double> * (1 + d.lambda) + 1e-6;
    winding_bad += t.winding_about_origin != 1;
  }
  const double ext = boundary_trace(coanalytic(0.5), 4096).length;
  return {length_bad == 0 && winding_bad == 0 && std::abs(ext - 8.0) <= 1e-3,
          fmt("length violations %.0f, winding violations %.0f, extremal length %.8f", length_bad, winding_bad, ext)};
}

Outcome slice_equivalence() {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto d = draw(81, i);
    worst = std::max(worst, std::abs(slice_sweep(d.map).value - refined_sup_defect(d.map).sup));
  }
  return {worst <= 1e-6, fmt("max |sweep - sup| over 200 members %.3e", worst)};
}

Outcome starlike_radius_evidence() {
  const auto inner = grid_within(0.974);
  double inner_min = std::numeric_limits<double>::infinity();
  double full_min = inner_min;
  for (int i = 0; i < 200; ++i) {
    inner_min = std::min(inner_min, grid_min(draw(91, i, 1.0).map, FunctionalKind::starlike, inner));
    full_min = std::min(full_min, grid_min(draw(92, i, 2 / std::sqrt(5.0)).map, FunctionalKind::starlike));
  }
  return {inner_min > 0 && full_min > -1e-6,
          fmt("lambda 1 on |z| <= 0.974: min %.4e; lambda 2/sqrt5 on grid: min %.4e", inner_min, full_min)};
}

Outcome closure_operators() {
  int bad = 0;
  int total = 0;
  const auto half_plane = named_series(SeriesKind::half_plane, 64);
  const auto log_convex = named_series(SeriesKind::log_convex, 64);
  bool identity = true;
  for (int i = 0; i < 100; ++i) {
    SeededRng rng(mix_seed(kSeed, 101, i));
    const double lambda = rng.uniform_left_open();
    // convex combination of five members
    std::vector<Map> maps;
    std::vector<double> w;
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) {
      maps.push_back(draw(102, 5 * i + k, lambda).map);
      w.push_back(rng.uniform_left_open());
      sum += w.back();
    }
    for (auto& x : w) x /= sum;
    bad += !member(convex_combination(w, maps), lambda);
    // shear product with a convex phi
    const C alpha = std::polar(std::sqrt(rng.uniform()), kTwoPi<double> * rng.uniform());
    bad += !member(shear_product(i % 2 ? half_plane : log_convex, alpha, maps[0]), lambda);
    // tilde product with a convex phi and with phi in the analytic class
    const auto f = draw(103, i, 1.0).map;
    bad += !member(tilde_product(log_convex, f), 1.0);
    bad += !member(tilde_product(Series{1.0, 0.25}, f), 1.0);
    total += 4;
    identity = identity && tilde_product(half_plane, maps[1]) == maps[1];
  }
  return {bad == 0 && identity, fmt("%.0f closure failures out of %.0f; tilde identity ", bad, total) +
                                    (identity ? "exact" : "BROKEN")};
}

Outcome neighborhood_inclusion() {
  const auto e = Map::identity(kDegree);
  int bad = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 500; ++i) {
    SeededRng rng(mix_seed(kSeed, 111, i));
    CoeffVector<double> a = CoeffVector<double>::Zero(kDegree);
    CoeffVector<double> b = CoeffVector<double>::Zero(kDegree);
    double dist = 0.0;
    for (int n = 2; n <= kDegree; ++n) {
      a[n - 1] = std::polar(rng.uniform(), kTwoPi<double> * rng.uniform());
      b[n - 1] = std::polar(rng.uniform(), kTwoPi<double> * rng.uniform());
      dist += n * (std::abs(a[n - 1]) + std::abs(b[n - 1]));
    }
    const double scale = rng.uniform_left_open() / dist;
    a *= scale;
    b *= scale;
    a[0] = 1.0;
    const Map F{Series(std::move(a)), Series(std::move(b))};
    const double m = grid_min(F, FunctionalKind::starlike);
    worst = std::min(worst, m);
    bad += !(nbhd_distance(e, F).value <= 1.0 + 1e-12 && member(F, 1.0) && m >= -1e-6);
  }
  return {bad == 0, fmt("500 neighbours: %.0f failures, min starlike functional %.4e", bad, worst)};
}

Outcome oracle_checks() {
  SeededRng rng(mix_seed(kSeed, 121));
  double worst_convex = 0.0;
  double worst_theta = 0.0;
  int points = 0;
  for (int i = 0; points < 200; ++i) {
    const auto f = draw(122, i).map;
    const C z = std::polar(0.05 + 0.9 * rng.uniform(), kTwoPi<double> * rng.uniform());
    const C dtheta = theta_derivative(f, z);
    const C fd = fd_theta(f, std::abs(z), std::arg(z), 1e-5);
    worst_theta = std::max(worst_theta, std::abs(dtheta - fd) / std::abs(fd));
    const double cv = convex_functional(f, z);
    const double fcv = fd_convex(f, z);
    worst_convex = std::max(worst_convex, std::abs(cv - fcv) / std::max(std::abs(fcv), 1.0));
    ++points;
  }
  return {worst_convex <= 1e-5 && worst_theta <= 1e-5,
          fmt("200 points: max rel err convex %.2e, theta derivative %.2e", worst_convex, worst_theta)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"area extremes", area_extremes},
      {"convexity radius sharpness", convexity_radius},
      {"starlikeness orders", starlike_orders},
      {"convolution algebra", convolution_algebra},
      {"growth and jacobian bounds", growth_and_jacobian},
      {"coefficient inequalities", coefficient_inequalities},
      {"boundary geometry", boundary_geometry},
      {"slice equivalence", slice_equivalence},
      {"starlikeness radius evidence", starlike_radius_evidence},
      {"closure operators", closure_operators},
      {"neighborhood inclusion", neighborhood_inclusion},
      {"oracle checks", oracle_checks},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-30s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
