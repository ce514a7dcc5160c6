#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fhmap/numeric.hpp"
#include "fhmap/series.hpp"

#include <complex>

using namespace fhmap;
using C = std::complex<double>;
using Series = AnalyticSeries<double>;

namespace {

constexpr double kTol = 1e-12;

bool coeffs_equal(const Series& s, std::initializer_list<C> expected) {
  if (s.degree() != static_cast<int>(expected.size())) return false;
  int n = 1;
  for (const C& e : expected) {
    if (std::abs(s.coeff(n++) - e) > kTol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("eval") {
  const Series s{1.0, 0.5};
  CHECK(std::abs(eval(s, C(0.5)) - C(0.625)) < kTol);
  // i + i^2/2
  CHECK(std::abs(eval(s, C(0, 1)) - C(-0.5, 1)) < kTol);
  const C z(0.3, -0.7);
  CHECK(std::abs(eval(Series{1.0}, z) - z) < kTol);
  CHECK(eval(s, C(0)) == C(0));
}

TEST_CASE("derivative") {
  const auto d = derivative(Series{1.0, 0.5});
  CHECK(d.size() == 2);
  CHECK(std::abs(d.coeff(0) - C(1)) < kTol);
  CHECK(std::abs(d.coeff(1) - C(1)) < kTol);
  CHECK(std::abs(eval(d, C(0.25)) - C(1.25)) < kTol);

  const auto one = derivative(Series{1.0});
  CHECK(one.size() == 1);
  CHECK(one.constant_term() == C(1));
  CHECK(one.is_constant());

  const auto d3 = derivative(Series{1.0, 0.0, 1.0 / 3.0});
  CHECK(std::abs(d3.coeff(0) - C(1)) < kTol);
  CHECK(std::abs(d3.coeff(1)) < kTol);
  CHECK(std::abs(d3.coeff(2) - C(1)) < kTol);

  const auto second = derivative(d3);
  CHECK(second.size() == 2);
  CHECK(std::abs(second.coeff(1) - C(2)) < kTol);
}

TEST_CASE("hadamard") {
  CHECK(coeffs_equal(hadamard(Series{1.0, 0.5}, Series{1.0, 0.5}), {1.0, 0.25}));
  const Series s{1.0, C(0.2, 0.1), C(-0.3, 0.05)};
  CHECK(coeffs_equal(hadamard(s, Series{1.0}), {1.0}));
  CHECK(hadamard(s, named_series(SeriesKind::half_plane, 3)) == s);
}

TEST_CASE("integral_hadamard") {
  CHECK(coeffs_equal(integral_hadamard(Series{1.0, 0.5}, Series{1.0, 0.5}), {1.0, 0.125}));
  const Series s{1.0, C(0.2, 0.1), C(-0.3, 0.06)};
  CHECK(coeffs_equal(integral_hadamard(s, named_series(SeriesKind::half_plane, 3)),
                     {1.0, C(0.1, 0.05), C(-0.1, 0.02)}));
  CHECK(coeffs_equal(integral_hadamard(Series{1.0}, Series{1.0}), {1.0}));
}

TEST_CASE("linear_combine") {
  CHECK(coeffs_equal(linear_combine<double>({{1.0, Series{1.0, 0.5}}, {1.0, Series{0.0, 0.5}}}), {1.0, 1.0}));
  CHECK(coeffs_equal(linear_combine<double>({{0.5, Series{1.0, 0.5}}, {0.5, Series{1.0, -0.5}}}), {1.0, 0.0}));
  CHECK(coeffs_equal(linear_combine<double>({{2.0, Series{1.0}}}), {2.0}));
  // Degree is the largest among inputs.
  CHECK(linear_combine<double>({{1.0, Series{1.0}}, {1.0, Series{0.0, 0.0, 1.0}}}).degree() == 3);
  CHECK_THROWS_AS(linear_combine(std::span<const WeightedSeries<double>>{}), std::invalid_argument);
}

TEST_CASE("named_series") {
  CHECK(coeffs_equal(named_series(SeriesKind::half_plane, 3), {1.0, 1.0, 1.0}));
  CHECK(coeffs_equal(named_series(SeriesKind::koebe, 3), {1.0, 2.0, 3.0}));
  CHECK(coeffs_equal(named_series(SeriesKind::log_convex, 3), {1.0, 0.5, 1.0 / 3.0}));
  CHECK(coeffs_equal(monomial_series<double>(2, 0.5, 2), {1.0, 0.5}));
  CHECK(named_series(SeriesKind::half_plane).degree() == kDefaultDegree);
  CHECK_THROWS_AS(monomial_series<double>(3, 0.5, 2), std::invalid_argument);
}

TEST_CASE("construction rejects bad input") {
  CoeffVector<double> bad(2);
  bad << C(1), C(std::numeric_limits<double>::quiet_NaN(), 0);
  CHECK_THROWS_AS(Series{bad}, std::invalid_argument);
  CHECK_THROWS_AS(Series(CoeffVector<double>(0)), std::invalid_argument);
}

TEST_CASE("resized keeps the low coefficients") {
  const Series s{1.0, 2.0, 3.0};
  CHECK(coeffs_equal(s.resized(2), {1.0, 2.0}));
  CHECK(coeffs_equal(s.resized(4), {1.0, 2.0, 3.0, 0.0}));
}

TEST_CASE("long double instantiation") {
  const AnalyticSeries<long double> s{1.0L, 0.5L};
  CHECK(std::abs(eval(s, std::complex<long double>(0.5L)) - 0.625L) < 1e-18L);
  CHECK(hadamard(s, s).coeff(2) == std::complex<long double>(0.25L));
}

TEST_CASE("properties over seeded random series") {
  SeededRng rng(2024);
  auto random_series = [&](int degree) {
    CoeffVector<double> c(degree);
    for (int k = 0; k < degree; ++k) c[k] = C(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
    return Series(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform_int(1, 24);
    const auto s = random_series(n);
    const auto t = random_series(n);
    const auto u = random_series(n);

    CHECK(eval(s, C(0)) == C(0));

    const auto st = hadamard(s, t);
    const auto ts = hadamard(t, s);
    CHECK((st.coeffs() - ts.coeffs()).cwiseAbs().maxCoeff() <= kTol);
    const auto left = hadamard(hadamard(s, t), u);
    const auto right = hadamard(s, hadamard(t, u));
    CHECK((left.coeffs() - right.coeffs()).cwiseAbs().maxCoeff() <= kTol);
    CHECK((hadamard(s, named_series(SeriesKind::half_plane, n)).coeffs() - s.coeffs()).cwiseAbs().maxCoeff() <= kTol);

    // Linearity of the derivative.
    const C w1(2 * rng.uniform() - 1, rng.uniform());
    const C w2(rng.uniform(), 2 * rng.uniform() - 1);
    const auto lhs = derivative(linear_combine<double>({{w1, s}, {w2, t}}));
    const auto ds = derivative(s);
    const auto dt = derivative(t);
    CHECK((lhs.coeffs() - (w1 * ds.coeffs() + w2 * dt.coeffs())).cwiseAbs().maxCoeff() <= kTol);

    // n * (integral product)_n = (product)_n.
    const auto ih = integral_hadamard(s, t);
    const auto dih = derivative(ih);
    for (int k = 1; k <= n; ++k) CHECK(std::abs(dih.coeff(k - 1) - st.coeff(k)) <= kTol);
  }
}
