#ifndef FHMAP_PRODUCTS_HPP
#define FHMAP_PRODUCTS_HPP

#include "fhmap/harmap.hpp"
#include "fhmap/series.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace fhmap {

/// Harmonic convolution h*H + conj(g*G). Degree is the smaller of the two.
template <typename Scalar>
HarmonicPolyMap<Scalar> convolve(const HarmonicPolyMap<Scalar>& f, const HarmonicPolyMap<Scalar>& F) {
  return HarmonicPolyMap<Scalar>(hadamard(f.h(), F.h()), hadamard(f.g(), F.g()));
}

/// Coefficients a_n A_n / n and b_n B_n / n.
template <typename Scalar>
HarmonicPolyMap<Scalar> integral_convolve(const HarmonicPolyMap<Scalar>& f, const HarmonicPolyMap<Scalar>& F) {
  return HarmonicPolyMap<Scalar>(integral_hadamard(f.h(), F.h()), integral_hadamard(f.g(), F.g()));
}

/// h*phi + conj(g*phi) for a normalized analytic phi (phi_1 = 1).
template <typename Scalar>
HarmonicPolyMap<Scalar> tilde_product(const AnalyticSeries<Scalar>& phi, const HarmonicPolyMap<Scalar>& f) {
  if (std::abs(phi.coeff(1) - std::complex<Scalar>(1)) > Scalar(kCoeffTol)) {
    throw std::invalid_argument("tilde_product: phi must satisfy phi'(0) = 1");
  }
  return HarmonicPolyMap<Scalar>(hadamard(phi, f.h()), hadamard(phi, f.g()));
}

/// (alpha conj(phi) + phi) * f = phi*h + conj(conj(alpha) (phi*g)), |alpha| <= 1.
template <typename Scalar>
HarmonicPolyMap<Scalar> shear_product(const AnalyticSeries<Scalar>& phi, std::complex<Scalar> alpha,
                                      const HarmonicPolyMap<Scalar>& f) {
  if (std::abs(alpha) > Scalar(1) + Scalar(kCoeffTol)) throw std::invalid_argument("shear_product: |alpha| must be <= 1");
  if (std::abs(phi.coeff(1) - std::complex<Scalar>(1)) > Scalar(kCoeffTol)) {
    throw std::invalid_argument("shear_product: phi must satisfy phi'(0) = 1");
  }
  const auto g = hadamard(phi, f.g());
  return HarmonicPolyMap<Scalar>(hadamard(phi, f.h()), AnalyticSeries<Scalar>(std::conj(alpha) * g.coeffs()));
}

/// Coefficient-wise weighted sum of the parts. Weights must be nonnegative and
/// sum to 1 within 1e-12; a_1 is set to exactly 1 afterwards.
template <typename Scalar>
HarmonicPolyMap<Scalar> convex_combination(std::span<const Scalar> weights,
                                           std::span<const HarmonicPolyMap<Scalar>> maps) {
  if (weights.empty() || weights.size() != maps.size()) {
    throw std::invalid_argument("convex_combination: need one weight per map");
  }
  Scalar total = 0;
  for (Scalar w : weights) {
    if (!(w >= 0)) throw std::invalid_argument("convex_combination: negative weight");
    total += w;
  }
  if (std::abs(total - Scalar(1)) > Scalar(kCoeffTol)) throw std::invalid_argument("convex_combination: weights must sum to 1");

  int degree = 0;
  for (const auto& m : maps) degree = std::max(degree, m.degree());
  CoeffVector<Scalar> h = CoeffVector<Scalar>::Zero(degree);
  CoeffVector<Scalar> g = CoeffVector<Scalar>::Zero(degree);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    h.head(maps[i].degree()) += weights[i] * maps[i].h().coeffs();
    g.head(maps[i].degree()) += weights[i] * maps[i].g().coeffs();
  }
  h[0] = Scalar(1);
  return HarmonicPolyMap<Scalar>(AnalyticSeries<Scalar>(std::move(h)), AnalyticSeries<Scalar>(std::move(g)));
}

template <typename Scalar>
HarmonicPolyMap<Scalar> convex_combination(const std::vector<Scalar>& weights,
                                           const std::vector<HarmonicPolyMap<Scalar>>& maps) {
  return convex_combination(std::span<const Scalar>(weights), std::span<const HarmonicPolyMap<Scalar>>(maps));
}

}  // namespace fhmap

#endif  // FHMAP_PRODUCTS_HPP
