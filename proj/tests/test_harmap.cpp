#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fhmap/classes.hpp"
#include "fhmap/harmap.hpp"

#include <complex>

using namespace fhmap;
using C = std::complex<double>;
using Series = AnalyticSeries<double>;
using Map = HarmonicPolyMap<double>;

namespace {

constexpr double kTol = 1e-12;
const C kI(0, 1);

// z + conj(z)^2 / 2
Map coanalytic_extremal() { return Map(Series{1.0, 0.0}, Series{0.0, 0.5}); }
// z + z^2 / 2
Map analytic_extremal() { return Map::analytic(Series{1.0, 0.5}); }

// Central difference of f(r e^{i theta}) in theta; test-only oracle.
C fd_theta(const Map& f, C z, double step = 1e-5) {
  const double r = std::abs(z);
  const double t = std::arg(z);
  return (eval_map(f, std::polar(r, t + step)) - eval_map(f, std::polar(r, t - step))) / (2 * step);
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(Map(Series{0.5, 0.1}, Series{0.0}), std::invalid_argument);
  const Map f(Series{1.0}, Series{0.0, 0.0, 0.25});
  CHECK(f.degree() == 3);
  CHECK(f.h().degree() == 3);
  CHECK(f.sense_preserving_at_origin());
  CHECK_FALSE(Map(Series{1.0}, Series{1.0}).sense_preserving_at_origin());
}

TEST_CASE("eval_map") {
  const auto f = coanalytic_extremal();
  CHECK(std::abs(eval_map(f, C(1)) - C(1.5)) < kTol);
  CHECK(std::abs(eval_map(f, kI) - C(-0.5, 1)) < kTol);
  CHECK(eval_map(f, C(0)) == C(0));
}

TEST_CASE("jacobian") {
  const auto f = coanalytic_extremal();
  CHECK(std::abs(jacobian(f, C(0)) - 1.0) < kTol);
  CHECK(std::abs(jacobian(f, C(1))) < kTol);
  const auto F = analytic_extremal();
  for (double r : {0.0, 0.3, 0.9}) CHECK(std::abs(jacobian(F, C(r)) - (1 + r) * (1 + r)) < kTol);
}

TEST_CASE("epsilon_slice") {
  const auto f = coanalytic_extremal();
  CHECK(epsilon_slice(f, C(1)) == Series({1.0, 0.5}));
  CHECK(epsilon_slice(f, C(-1)) == Series({1.0, -0.5}));
  const auto F = analytic_extremal();
  CHECK(epsilon_slice(F, std::polar(1.0, 0.7)) == F.h());
  CHECK_THROWS_AS(epsilon_slice(f, C(0.5)), std::invalid_argument);
}

TEST_CASE("theta_derivative") {
  CHECK(std::abs(theta_derivative(Map::identity(), C(1)) - kI) < kTol);

  // Cusp of the extremal boundary curve: closed form and finite-difference oracle agree on 0.
  const auto f = coanalytic_extremal();
  CHECK(std::abs(theta_derivative(f, C(1))) < kTol);
  CHECK(std::abs(fd_theta(f, C(1))) < 1e-9);

  const auto F = analytic_extremal();
  for (double r : {0.2, 0.7}) CHECK(std::abs(theta_derivative(F, C(r)) - kI * (r + r * r)) < kTol);
  CHECK_THROWS_AS(theta_derivative(f, C(0)), std::invalid_argument);
}

TEST_CASE("theta_derivative matches finite differences at random points") {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_member_coeff(ClassSpec(1.0), 12, mix_seed(11, 1, trial));
    const double r = 0.05 + 0.94 * rng.uniform();
    const C z = std::polar(r, kTwoPi<double> * rng.uniform());
    const C exact = theta_derivative(f, z);
    const C oracle = fd_theta(f, z);
    CHECK(std::abs(exact - oracle) <= 1e-6 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("jacobian invariant under unit rotation of g") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_member_boundary(ClassSpec(1.0), 8, mix_seed(3, 4, trial));
    const C eps = std::polar(1.0, 0.37 * trial);
    const Map rotated(f.h(), Series(eps * f.g().coeffs()));
    const C z = std::polar(0.8, 0.11 * trial);
    CHECK(jacobian(rotated, z) == doctest::Approx(jacobian(f, z)).epsilon(1e-14));
  }
}

TEST_CASE("slice derivative bounded by defect pointwise") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_member_boundary(ClassSpec(1.0), 10, mix_seed(5, 6, trial));
    double slice_max = 0;
    double defect_max = 0;
    for (int e = 0; e < 64; ++e) {
      const auto dslice = derivative(epsilon_slice(f, std::polar(1.0, kTwoPi<double> * e / 64)));
      for (int k = 0; k < 64; ++k) {
        const C z = std::polar(1.0, kTwoPi<double> * k / 64);
        slice_max = std::max(slice_max, std::abs(eval(dslice, z) - 1.0));
        defect_max = std::max(defect_max, defect(f, z));
      }
    }
    CHECK(slice_max <= defect_max + 1e-12);
  }
}

TEST_CASE("DiskGrid") {
  const auto grid = DiskGrid<double>::standard();
  CHECK(grid.radii().size() == 11);
  CHECK(grid.r_max() == 0.999);
  CHECK(grid.angles() == 720);
  CHECK(grid.size() == 11 * 720);
  const auto trimmed = DiskGrid<double>::standard(0.95, 16);
  CHECK(trimmed.radii().back() == 0.95);
  CHECK(trimmed.radii().size() == 10);
  CHECK_THROWS_AS(DiskGrid<double>({0.5, 0.4}, 16), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid<double>({0.5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(DiskGrid<double>({1.2}, 16), std::invalid_argument);
  std::size_t visited = 0;
  trimmed.for_each([&](C) { ++visited; });
  CHECK(visited == trimmed.size());
}
