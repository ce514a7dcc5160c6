#include "fhmap/verify.hpp"

#include "fhmap/classes.hpp"
#include "fhmap/geometry.hpp"
#include "fhmap/products.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fhmap {

namespace {

using Map = HarmonicPolyMap<double>;
using Grid = DiskGrid<double>;
using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
constexpr double kOrderSlack = 0.02;
constexpr double kFunctionalSlack = 1e-6;

class Recorder {
 public:
  Recorder(std::string id, std::string anchor, double tol) : tol_(tol), start_(Clock::now()) {
    entry_.id = std::move(id);
    entry_.anchor = std::move(anchor);
    entry_.worst_margin = std::numeric_limits<double>::infinity();
  }

  // Violation when margin < -tol.
  void margin(double m) { add(m >= -tol_, m); }
  // Violation when !ok; m is reported as-is.
  void check(bool ok, double m) { add(ok, m); }

  PropertyEntry finish() {
    entry_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return entry_;
  }

 private:
  void add(bool ok, double m) {
    ++entry_.samples;
    entry_.worst_margin = std::min(entry_.worst_margin, m);
    if (!ok) ++entry_.violations;
  }

  double tol_;
  Clock::time_point start_;
  PropertyEntry entry_;
};

enum class Generator { alternate, coeff, boundary };

struct Drawn {
  Map map;
  double lambda;
  double tau;
};

class Context {
 public:
  explicit Context(const VerifyConfig& config)
      : config_(config), grid_(Grid::standard(config.r_max, config.grid_angles)) {}

  const VerifyConfig& config() const { return config_; }
  const Grid& grid() const { return grid_; }
  int samples() const { return config_.samples; }

  // Grid circles up to `limit`, plus the circle |z| = limit itself.
  Grid grid_within(double limit) const {
    std::vector<double> radii;
    for (double r : grid_.radii()) {
      if (r < limit) radii.push_back(r);
    }
    radii.push_back(limit);
    return Grid(radii, config_.grid_angles);
  }

  SeededRng rng(std::uint64_t stream, int index) const { return SeededRng(mix_seed(config_.seed, stream, index)); }

  Drawn member(std::uint64_t stream, int index, std::optional<double> lambda = {},
               Generator gen = Generator::alternate) const {
    auto r = rng(stream, index);
    const double lam = lambda.value_or(r.uniform_left_open());
    const bool use_coeff = gen == Generator::coeff || (gen == Generator::alternate && index % 2 == 0);
    const auto seed = mix_seed(config_.seed, stream ^ 0x5eedULL, index);
    const auto sample = use_coeff ? sample_member_coeff(ClassSpec(lam), config_.degree, seed)
                                  : sample_member_boundary(ClassSpec(lam), config_.degree, seed);
    return {sample.map, lam, sample.tau};
  }

 private:
  VerifyConfig config_;
  Grid grid_;
};

double membership_margin(const Map& f, double lambda) { return is_member_numeric(f, ClassSpec(lambda)).margin; }

bool is_member(const Map& f, double lambda) {
  return is_member_numeric(f, ClassSpec(lambda)).verdict == Verdict::member;
}

// Smallest functional value on the grid; +inf if the grid is all degenerate.
double grid_min(const Map& f, FunctionalKind kind, const Grid& grid) { return order_estimate(f, kind, grid).value; }

Map coanalytic_extremal(double c) { return Map(AnalyticSeries<double>{1.0, 0.0}, AnalyticSeries<double>{0.0, c}); }

// --- suites -----------------------------------------------------------------

void coefficients(const Context& ctx, std::vector<PropertyEntry>& out) {
  const double tol = ctx.config().tol;
  const int n = ctx.samples();
  {
    Recorder rec("coefficients.sufficient_condition", "sum n(|a_n|+|b_n|) <= lambda gives class membership", tol);
    for (int i = 0; i < n; ++i) {
      const auto d = ctx.member(101, i, std::nullopt, Generator::coeff);
      const auto report = is_member_numeric(d.map, ClassSpec(d.lambda));
      rec.check(report.verdict == Verdict::member && coeff_sufficient(d.map, d.lambda), report.margin);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("coefficients.necessary_conditions", "members satisfy every necessary coefficient inequality", tol);
    for (int i = 0; i < n; ++i) {
      const auto d = ctx.member(102, i, std::nullopt, Generator::boundary);
      const auto violations = coeff_necessary_checks(d.map, ClassSpec(d.lambda), tol);
      const auto report = is_member_numeric(d.map, ClassSpec(d.lambda));
      rec.check(report.verdict == Verdict::member && violations.empty(), report.margin);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("coefficients.energy", "sum n^2(|a_n|^2+|b_n|^2) <= lambda^2", tol);
    for (int i = 0; i < n; ++i) {
      const auto d = ctx.member(103, i);
      double energy = 0.0;
      for (int k = 2; k <= d.map.degree(); ++k) energy += double(k) * k * (std::norm(d.map.a(k)) + std::norm(d.map.b(k)));
      rec.margin(d.lambda * d.lambda - energy);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("coefficients.modulus", "|a_n| <= lambda/n and |b_n| <= lambda/n", tol);
    for (int i = 0; i < n; ++i) {
      const auto d = ctx.member(104, i);
      double worst = std::numeric_limits<double>::infinity();
      for (int k = 2; k <= d.map.degree(); ++k) {
        worst = std::min({worst, d.lambda / k - std::abs(d.map.a(k)), d.lambda / k - std::abs(d.map.b(k))});
      }
      rec.margin(worst);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("coefficients.contrapositive", "inflated extremals fail both the necessary checks and membership",
                 tol);
    for (int i = 0; i < n; ++i) {
      auto r = ctx.rng(105, i);
      const double lambda = r.uniform_left_open();
      const int m = r.uniform_int(2, std::max(2, ctx.config().degree));
      const auto side = r.bernoulli(0.5) ? Side::analytic : Side::coanalytic;
      const auto e = extremal(m, lambda, side, ctx.config().degree);
      CoeffVector<double> h = e.h().coeffs() * 1.01;
      h[0] = 1.0;
      const Map f(AnalyticSeries<double>(std::move(h)), AnalyticSeries<double>(CoeffVector<double>(e.g().coeffs() * 1.01)));
      const bool flagged = !coeff_necessary_checks(f, ClassSpec(lambda), tol).empty();
      const auto report = is_member_numeric(f, ClassSpec(lambda));
      rec.check(flagged && report.verdict == Verdict::non_member, -report.margin);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("coefficients.slices", "max over |eps| = 1 of sup|F_eps' - 1| equals the boundary defect supremum",
                 1e-6);
    for (int i = 0; i < n; ++i) {
      const auto d = ctx.member(106, i);
      const double sweep = slice_sweep(d.map).value;
      const double sup = refined_sup_defect(d.map).sup;
      rec.margin(-std::abs(sweep - sup));
    }
    out.push_back(rec.finish());
  }
}

void growth(const Context& ctx, std::vector<PropertyEntry>& out) {
  const double tol = ctx.config().tol;
  {
    Recorder rec("growth.bounds", "r - lambda r^2/2 <= |f(z)| <= r + lambda r^2/2", tol);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(201, i);
      rec.margin(check_growth(d.map, d.lambda, ctx.grid(), tol).worst_slack);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("growth.sharpness", "z + lambda conj(z)^2/2 attains the growth bounds", tol);
    for (int i = 0; i < ctx.samples(); ++i) {
      const double lambda = ctx.rng(202, i).uniform_left_open();
      const auto g = check_growth(coanalytic_extremal(lambda / 2), lambda, ctx.grid(), tol);
      // Attained: the worst slack is zero up to rounding.
      rec.check(g.ok && std::abs(g.worst_slack) <= tol, g.worst_slack);
    }
    out.push_back(rec.finish());
  }
}

void area(const Context& ctx, std::vector<PropertyEntry>& out) {
  const double tol = ctx.config().tol;
  {
    Recorder rec("area.extremes", "area is 3pi/2 for z + z^2/2 and pi/2 for z + conj(z)^2/2", 0.0);
    const double upper = area_exact(Map::analytic(AnalyticSeries<double>{1.0, 0.5}));
    const double lower = area_exact(coanalytic_extremal(0.5));
    rec.margin(1e-12 - std::abs(upper - 1.5 * kPi));
    rec.margin(1e-12 - std::abs(lower - 0.5 * kPi));
    out.push_back(rec.finish());
  }
  {
    Recorder rec("area.upper_bound", "area <= pi(1 + lambda^2/2)", tol);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(301, i);
      rec.margin(kPi * (1 + d.lambda * d.lambda / 2) - area_exact(d.map));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("area.quadrature", "coefficient area matches the Jacobian integral (relative 1e-6)", 0.0);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(302, i);
      const double exact = area_exact(d.map);
      const double quad = area_quadrature(d.map, 32, 4 * ctx.config().degree + 16);
      rec.margin(1e-6 - std::abs(quad - exact) / std::abs(exact));
    }
    out.push_back(rec.finish());
  }
}

void jacobian_suite(const Context& ctx, std::vector<PropertyEntry>& out) {
  const double tol = ctx.config().tol;
  {
    Recorder rec("jacobian.upper_bound", "J_f(z) <= (1 + |z|)^2", tol);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(401, i);
      rec.margin(jacobian_bound_margin(d.map, ctx.grid()).margin);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("jacobian.sense_preserving", "J_f(z) > 0 on the grid", 0.0);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(402, i);
      double worst = std::numeric_limits<double>::infinity();
      ctx.grid().for_each([&](C z) { worst = std::min(worst, jacobian(d.map, z)); });
      rec.check(worst > 0, worst);
    }
    out.push_back(rec.finish());
  }
}

void boundary(const Context& ctx, std::vector<PropertyEntry>& out) {
  const double tol = ctx.config().tol;
  {
    Recorder rec("boundary.length", "boundary length <= 2pi(1 + lambda)", 1e-6);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(501, i);
      rec.margin(kTwoPi<double> * (1 + d.lambda) - boundary_trace(d.map, 2048).length);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("boundary.winding", "boundary image winds once about the origin", tol);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(502, i);
      const int w = boundary_trace(d.map, 2048).winding_about_origin;
      rec.check(w == 1, double(-std::abs(w - 1)));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("boundary.extremal_length", "boundary of z + conj(z)^2/2 has length 8 (M = 4096, 1e-3)", 0.0);
    rec.margin(1e-3 - std::abs(boundary_trace(coanalytic_extremal(0.5), 4096).length - 8.0));
    out.push_back(rec.finish());
  }
}

void orders(const Context& ctx, std::vector<PropertyEntry>& out) {
  const auto& grid = ctx.grid();
  {
    Recorder rec("orders.extremal", "z + lambda conj(z)^2/2 is starlike of order 2(1-lambda)/(2+lambda); "
                                    "z + conj(z)^2/8 has orders 2/3 and 2/5", 0.0);
    for (double lambda : {0.5, 1.0}) {
      const double est = order_estimate(coanalytic_extremal(lambda / 2), FunctionalKind::starlike, grid).reported();
      rec.margin(kOrderSlack - std::abs(est - 2 * (1 - lambda) / (2 + lambda)));
    }
    const auto eighth = coanalytic_extremal(0.125);
    rec.margin(kOrderSlack - std::abs(order_estimate(eighth, FunctionalKind::starlike, grid).value - 2.0 / 3));
    rec.margin(kOrderSlack - std::abs(order_estimate(eighth, FunctionalKind::convex, grid).value - 0.4));
    out.push_back(rec.finish());
  }
  {
    Recorder rec("orders.convex_radius", "z + conj(z)^2/2 is convex exactly up to |z| = 1/2", 0.0);
    RadiusScan scan{ctx.config().r_max, ctx.config().grid_angles, 0.01};
    const auto b = radius_bracket(coanalytic_extremal(0.5), FunctionalKind::convex, 1e-3, scan);
    rec.check(b.contains(0.5), std::min(0.5 - b.lo, b.hi - 0.5));
    out.push_back(rec.finish());
  }
  {
    Recorder rec("orders.starlike_lower_bound", "sum n(|a_n|+|b_n|) = t gives starlike order >= 2(1-t)/(2+t)",
                 kOrderSlack);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(601, i, std::nullopt, Generator::coeff);
      const double t = d.tau * d.lambda;
      rec.margin(grid_min(d.map, FunctionalKind::starlike, grid) - 2 * (1 - t) / (2 + t));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("orders.starlike_disk_0974", "members with lambda = 1 are starlike on |z| <= 0.974", 0.0);
    const auto inner = ctx.grid_within(0.974);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(602, i, 1.0);
      const double m = grid_min(d.map, FunctionalKind::starlike, inner);
      rec.check(m > 0, m);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("orders.starlike_2_sqrt5", "members with lambda = 2/sqrt(5) are starlike on the whole grid",
                 kFunctionalSlack);
    for (int i = 0; i < ctx.samples(); ++i) {
      const auto d = ctx.member(603, i, 2 / std::sqrt(5.0));
      rec.margin(grid_min(d.map, FunctionalKind::starlike, grid));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("orders.second_moment", "sum n^2(|a_n|+|b_n|) <= lambda gives membership at lambda/2 and "
                                         "convex order >= 2(1-lambda)/(2+lambda)", kOrderSlack);
    for (int i = 0; i < ctx.samples(); ++i) {
      const double lambda = ctx.rng(604, i).uniform_left_open();
      const auto s = sample_member_coeff(ClassSpec(lambda), ctx.config().degree, mix_seed(ctx.config().seed, 604, i),
                                         {std::nullopt, 2});
      const double m = grid_min(s.map, FunctionalKind::convex, grid) - 2 * (1 - lambda) / (2 + lambda);
      rec.check(is_member(s.map, lambda / 2) && m >= -kOrderSlack, m);
    }
    out.push_back(rec.finish());
  }
}

void products(const Context& ctx, std::vector<PropertyEntry>& out) {
  const auto& grid = ctx.grid();
  const int n = ctx.samples();
  {
    Recorder rec("products.convolution", "f * F lies in the class at lambda^2/2 with starlike order "
                                         "2(2-lambda^2)/(4+lambda^2) and convex order 2(1-lambda^2)/(2+lambda^2)",
                 kOrderSlack);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(701, 2 * i);
      const auto F = ctx.member(701, 2 * i + 1, f.lambda);
      const auto p = convolve(f.map, F.map);
      const double l2 = f.lambda * f.lambda;
      const double star = grid_min(p, FunctionalKind::starlike, grid) - 2 * (2 - l2) / (4 + l2);
      const double cvx = grid_min(p, FunctionalKind::convex, grid) - 2 * (1 - l2) / (2 + l2);
      const double m = std::min(star, cvx);
      rec.check(is_member(p, l2 / 2) && m >= -kOrderSlack, m);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.convolution_convex", "for lambda = 1, f * F is convex on the grid", kFunctionalSlack);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(702, 2 * i, 1.0);
      const auto F = ctx.member(702, 2 * i + 1, 1.0);
      rec.margin(grid_min(convolve(f.map, F.map), FunctionalKind::convex, grid));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.integral_convolution", "integral convolution lies in the class at lambda^2/4 with starlike "
                                                  "order 2(4-lambda^2)/(8+lambda^2) and convex order "
                                                  "2(2-lambda^2)/(4+lambda^2)", kOrderSlack);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(703, 2 * i);
      const auto F = ctx.member(703, 2 * i + 1, f.lambda);
      const auto p = integral_convolve(f.map, F.map);
      const double l2 = f.lambda * f.lambda;
      const double star = grid_min(p, FunctionalKind::starlike, grid) - 2 * (4 - l2) / (8 + l2);
      const double cvx = grid_min(p, FunctionalKind::convex, grid) - 2 * (2 - l2) / (4 + l2);
      const double m = std::min(star, cvx);
      rec.check(is_member(p, l2 / 4) && m >= -kOrderSlack, m);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.shear", "(alpha conj(phi) + phi) * f stays in the class for convex phi, |alpha| <= 1", 0.0);
    const auto half_plane = named_series(SeriesKind::half_plane, 64);
    const auto log_convex = named_series(SeriesKind::log_convex, 64);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(704, i);
      auto r = ctx.rng(705, i);
      const C alpha = std::polar(std::sqrt(r.uniform()), kTwoPi<double> * r.uniform());
      const auto& phi = i % 2 == 0 ? half_plane : log_convex;
      const auto p = shear_product(phi, alpha, f.map);
      rec.check(is_member(p, f.lambda), membership_margin(p, f.lambda));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.tilde", "tilde products with convex phi: class members, convex on |z| <= 0.49, "
                                   "starlike on |z| <= 0.974", 0.0);
    const auto half_plane = named_series(SeriesKind::half_plane, 64);
    const auto log_convex = named_series(SeriesKind::log_convex, 64);
    const auto convex_disk = ctx.grid_within(0.49);
    const auto starlike_disk = ctx.grid_within(0.974);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(706, i, 1.0);
      const auto p = tilde_product(i % 2 == 0 ? log_convex : half_plane, f.map);
      const double m = std::min(grid_min(p, FunctionalKind::convex, convex_disk),
                                grid_min(p, FunctionalKind::starlike, starlike_disk));
      rec.check(is_member(p, 1.0) && m > 0, m);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.tilde_starlike", "tilde products of lambda = 2/sqrt(5) members with convex phi are "
                                            "starlike on the grid", kFunctionalSlack);
    const auto log_convex = named_series(SeriesKind::log_convex, 64);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(707, i, 2 / std::sqrt(5.0));
      rec.margin(grid_min(tilde_product(log_convex, f.map), FunctionalKind::starlike, grid));
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.tilde_identity", "z/(1-z) tilde f = f", 0.0);
    const auto half_plane = named_series(SeriesKind::half_plane, 64);
    for (int i = 0; i < n; ++i) {
      const auto f = ctx.member(708, i);
      rec.check(tilde_product(half_plane, f.map) == f.map, 0.0);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("products.convex_combination", "convex combinations of members are members", 0.0);
    for (int i = 0; i < n; ++i) {
      auto r = ctx.rng(709, i);
      const double lambda = r.uniform_left_open();
      std::vector<double> w(5);
      for (auto& x : w) x = r.uniform_left_open();
      double total = 0.0;
      for (double x : w) total += x;
      for (auto& x : w) x /= total;
      std::vector<Map> maps;
      for (int k = 0; k < 5; ++k) maps.push_back(ctx.member(710, 5 * i + k, lambda).map);
      const auto mix = convex_combination(w, maps);
      rec.check(is_member(mix, lambda), membership_margin(mix, lambda));
    }
    out.push_back(rec.finish());
  }
}

void neighborhoods(const Context& ctx, std::vector<PropertyEntry>& out) {
  Recorder rec("neighborhoods.identity", "maps within distance 1 of e(z) = z are starlike class members",
               kFunctionalSlack);
  const auto e = Map::identity(ctx.config().degree);
  for (int i = 0; i < ctx.samples(); ++i) {
    auto r = ctx.rng(801, i);
    // Random direction, rescaled onto a random radius <= 1 of the neighbourhood.
    CoeffVector<double> a = CoeffVector<double>::Zero(ctx.config().degree);
    CoeffVector<double> b = CoeffVector<double>::Zero(ctx.config().degree);
    for (int k = 1; k < ctx.config().degree; ++k) {
      a[k] = std::polar(r.uniform(), kTwoPi<double> * r.uniform());
      b[k] = std::polar(r.uniform(), kTwoPi<double> * r.uniform());
    }
    double dist = 0.0;
    for (int k = 2; k <= ctx.config().degree; ++k) dist += k * (std::abs(a[k - 1]) + std::abs(b[k - 1]));
    const double scale = r.uniform_left_open() / dist;
    a *= scale;
    b *= scale;
    a[0] = 1.0;
    const Map F{AnalyticSeries<double>(std::move(a)), AnalyticSeries<double>(std::move(b))};
    const double m = grid_min(F, FunctionalKind::starlike, ctx.grid());
    rec.check(nbhd_distance(e, F).value <= 1.0 + 1e-12 && is_member(F, 1.0) && m >= -kFunctionalSlack, m);
  }
  out.push_back(rec.finish());
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::coefficients, Suite::growth, Suite::area, Suite::jacobian, Suite::boundary, Suite::orders,
                  Suite::products, Suite::neighborhoods, Suite::all}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::coefficients: return "coefficients";
    case Suite::growth: return "growth";
    case Suite::area: return "area";
    case Suite::jacobian: return "jacobian";
    case Suite::boundary: return "boundary";
    case Suite::orders: return "orders";
    case Suite::products: return "products";
    case Suite::neighborhoods: return "neighborhoods";
    case Suite::all: return "all";
  }
  return "";
}

VerifyReport run_verify(Suite suite, const VerifyConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("verify: sample count must be at least 1");
  if (config.degree < 2) throw std::invalid_argument("verify: degree must be at least 2");
  const Context ctx(config);
  VerifyReport report;
  report.seed = config.seed;
  const std::vector<std::pair<Suite, std::function<void(const Context&, std::vector<PropertyEntry>&)>>> table{
      {Suite::coefficients, coefficients}, {Suite::growth, growth},     {Suite::area, area},
      {Suite::jacobian, jacobian_suite},   {Suite::boundary, boundary}, {Suite::orders, orders},
      {Suite::products, products},         {Suite::neighborhoods, neighborhoods},
  };
  for (const auto& [s, run] : table) {
    if (suite == Suite::all || suite == s) run(ctx, report.entries);
  }
  for (const auto& e : report.entries) {
    if (e.violations > 0) report.pass = false;
  }
  return report;
}

}  // namespace fhmap
