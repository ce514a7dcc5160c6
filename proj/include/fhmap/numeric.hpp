#ifndef FHMAP_NUMERIC_HPP
#define FHMAP_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fhmap {

template <typename Scalar>
inline constexpr Scalar kTwoPi = Scalar(2) * std::numbers::pi_v<Scalar>;

/// Pairwise (cascade) summation. The reduction tree depends only on the input
/// length, so results are bit-reproducible for a given ordering of terms.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
  constexpr std::size_t kLeaf = 8;
  if (xs.size() <= kLeaf) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& xs) {
  return pairwise_sum(std::span<const T>(xs));
}

/// Golden-section search for a maximum of a unimodal function on [lo, hi].
/// Returns (argmax, max).
template <typename Scalar, typename Fn>
std::pair<Scalar, Scalar> golden_section_max(Fn&& fn, Scalar lo, Scalar hi, Scalar tol) {
  const Scalar inv_phi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  Scalar x1 = hi - inv_phi * (hi - lo);
  Scalar x2 = lo + inv_phi * (hi - lo);
  Scalar f1 = fn(x1);
  Scalar f2 = fn(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    }
  }
  return f1 < f2 ? std::pair{x2, f2} : std::pair{x1, f1};
}

template <typename Scalar>
struct CircleMax {
  Scalar value;
  Scalar theta;
};

/// Maximum of a real function of the angle over [0, 2pi): equispaced coarse
/// scan, then golden-section refinement inside the two neighbouring cells of
/// the best few local maxima of the scan.
template <typename Scalar, typename Fn>
CircleMax<Scalar> refined_circle_max(Fn&& fn, int coarse_count, Scalar tol, int candidates = 4) {
  if (coarse_count < 3) throw std::invalid_argument("refined_circle_max: need at least 3 samples");
  const Scalar step = kTwoPi<Scalar> / Scalar(coarse_count);
  std::vector<Scalar> values(static_cast<std::size_t>(coarse_count));
  for (int k = 0; k < coarse_count; ++k) values[k] = fn(step * Scalar(k));

  std::vector<int> peaks;
  for (int k = 0; k < coarse_count; ++k) {
    const Scalar prev = values[(k + coarse_count - 1) % coarse_count];
    const Scalar next = values[(k + 1) % coarse_count];
    if (values[k] >= prev && values[k] >= next) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int i, int j) { return values[i] > values[j]; });
  if (static_cast<int>(peaks.size()) > candidates) peaks.resize(static_cast<std::size_t>(candidates));

  CircleMax<Scalar> best{values[0], Scalar(0)};
  for (int k = 1; k < coarse_count; ++k) {
    if (values[k] > best.value) best = {values[k], step * Scalar(k)};
  }
  for (int k : peaks) {
    const Scalar centre = step * Scalar(k);
    auto [theta, value] = golden_section_max<Scalar>(fn, centre - step, centre + step, tol);
    if (value > best.value) {
      theta = std::fmod(theta, kTwoPi<Scalar>);
      if (theta < 0) theta += kTwoPi<Scalar>;
      best = {value, theta};
    }
  }
  return best;
}

template <typename Scalar>
struct QuadratureRule {
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b]. Roots of P_n by Newton
/// iteration from the Chebyshev-like initial guess.
template <typename Scalar>
QuadratureRule<Scalar> gauss_legendre(int n, Scalar a, Scalar b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  QuadratureRule<Scalar> rule{std::vector<Scalar>(n), std::vector<Scalar>(n)};
  const Scalar mid = (a + b) / 2;
  const Scalar half = (b - a) / 2;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    Scalar x = std::cos(std::numbers::pi_v<Scalar> * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
    Scalar dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Scalar p0 = 1;
      Scalar p1 = 0;
      for (int j = 0; j < n; ++j) {
        const Scalar p2 = p1;
        p1 = p0;
        p0 = (Scalar(2 * j + 1) * x * p1 - Scalar(j) * p2) / Scalar(j + 1);
      }
      dp = Scalar(n) * (x * p0 - p1) / (x * x - 1);
      const Scalar dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) <= 4 * eps) break;
    }
    const Scalar w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

/// Seeded generator used by every random constructor in the library.
///
/// Engine: std::mt19937_64 seeded with the 64-bit seed (fully specified by the
/// standard). Uniforms take the top 53 bits: u = (x >> 11) * 2^-53 in [0, 1).
/// Nothing here goes through std::*_distribution, whose algorithms are
/// implementation-defined, so streams are identical across toolchains.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double uniform_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_left_open() { return 1.0 - uniform(); }

  /// Integer uniform on [lo, hi] by floor(u * span); bias is below 2^-40 for
  /// the small spans used here.
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    return lo + std::min(span - 1, static_cast<int>(uniform() * span));
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Derives independent sub-seeds from (seed, stream, index) with the
/// SplitMix64 finaliser.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ stream) ^ index);
}

}  // namespace fhmap

#endif  // FHMAP_NUMERIC_HPP
