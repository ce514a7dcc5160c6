#ifndef FHMAP_HARMAP_HPP
#define FHMAP_HARMAP_HPP

#include "fhmap/numeric.hpp"
#include "fhmap/series.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fhmap {

/// Planar harmonic polynomial map f = h + conj(g) with h = z + a_2 z^2 + ...
/// and g = b_1 z + b_2 z^2 + .... Both parts are stored at a common degree.
template <typename Scalar = double>
class HarmonicPolyMap {
 public:
  using Complex = std::complex<Scalar>;
  using Series = AnalyticSeries<Scalar>;

  HarmonicPolyMap(Series h, Series g) {
    const int degree = std::max(h.degree(), g.degree());
    h_ = h.degree() == degree ? std::move(h) : h.resized(degree);
    g_ = g.degree() == degree ? std::move(g) : g.resized(degree);
    if (std::abs(h_.coeff(1) - Complex(1)) > Scalar(kCoeffTol)) {
      throw std::invalid_argument("HarmonicPolyMap: analytic part must have a_1 = 1");
    }
    dh_ = derivative(h_);
    dg_ = derivative(g_);
    d2h_ = derivative(dh_);
    d2g_ = derivative(dg_);
  }

  /// f(z) = z, stored at the requested degree.
  static HarmonicPolyMap identity(int degree = 1) {
    return HarmonicPolyMap(monomial_series<Scalar>(1, Complex(0), degree), Series::zero(degree));
  }

  /// Analytic map (g = 0).
  static HarmonicPolyMap analytic(Series h) {
    const int degree = h.degree();
    return HarmonicPolyMap(std::move(h), Series::zero(degree));
  }

  int degree() const { return h_.degree(); }
  const Series& h() const { return h_; }
  const Series& g() const { return g_; }
  Complex a(int n) const { return h_.coeff(n); }
  Complex b(int n) const { return g_.coeff(n); }

  const DerivativeSeries<Scalar>& dh() const { return dh_; }
  const DerivativeSeries<Scalar>& dg() const { return dg_; }
  const DerivativeSeries<Scalar>& d2h() const { return d2h_; }
  const DerivativeSeries<Scalar>& d2g() const { return d2g_; }

  /// |g'(0)| < 1: the origin-level sense-preservation surrogate.
  bool sense_preserving_at_origin() const { return std::abs(b(1)) < Scalar(1); }

  friend bool operator==(const HarmonicPolyMap& x, const HarmonicPolyMap& y) {
    return x.h_ == y.h_ && x.g_ == y.g_;
  }

 private:
  Series h_;
  Series g_;
  DerivativeSeries<Scalar> dh_;
  DerivativeSeries<Scalar> dg_;
  DerivativeSeries<Scalar> d2h_;
  DerivativeSeries<Scalar> d2g_;
};

/// Sampling domain: concentric circles with equispaced angles.
template <typename Scalar = double>
class DiskGrid {
 public:
  DiskGrid(std::vector<Scalar> radii, int angles) : radii_(std::move(radii)), angles_(angles) {
    if (radii_.empty()) throw std::invalid_argument("DiskGrid: no radii");
    if (angles_ < 8) throw std::invalid_argument("DiskGrid: need at least 8 angles");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      if (!(radii_[i] > 0) || radii_[i] > 1) throw std::invalid_argument("DiskGrid: radius outside (0, 1]");
      if (i > 0 && !(radii_[i] > radii_[i - 1])) throw std::invalid_argument("DiskGrid: radii not increasing");
    }
  }

  /// {0.1, ..., 0.9, 0.99, 0.999} truncated below r_max, with r_max as the
  /// outermost circle.
  static DiskGrid standard(Scalar r_max = Scalar(0.999), int angles = 720) {
    const Scalar base[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999};
    std::vector<Scalar> radii;
    for (Scalar r : base) {
      if (r < r_max) radii.push_back(r);
    }
    radii.push_back(r_max);
    return DiskGrid(std::move(radii), angles);
  }

  const std::vector<Scalar>& radii() const { return radii_; }
  int angles() const { return angles_; }
  Scalar r_max() const { return radii_.back(); }
  std::size_t size() const { return radii_.size() * static_cast<std::size_t>(angles_); }

  Scalar angle(int k) const { return kTwoPi<Scalar> * Scalar(k) / Scalar(angles_); }

  /// Visits every grid point, circle by circle, in increasing angle.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (Scalar r : radii_) {
      for (int k = 0; k < angles_; ++k) fn(std::polar(r, angle(k)));
    }
  }

 private:
  std::vector<Scalar> radii_;
  int angles_;
};

template <typename Scalar>
std::complex<Scalar> eval_map(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  return eval(f.h(), z) + std::conj(eval(f.g(), z));
}

template <typename Scalar>
Scalar jacobian(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  return std::norm(eval(f.dh(), z)) - std::norm(eval(f.dg(), z));
}

/// F_eps = h + eps g for a unit eps.
template <typename Scalar>
AnalyticSeries<Scalar> epsilon_slice(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> eps) {
  if (std::abs(std::abs(eps) - Scalar(1)) > Scalar(kCoeffTol)) {
    throw std::invalid_argument("epsilon_slice: |eps| must be 1");
  }
  return AnalyticSeries<Scalar>(f.h().coeffs() + eps * f.g().coeffs());
}

/// d/dtheta f(r e^{i theta}) = i (z h'(z) - conj(z g'(z))).
template <typename Scalar>
std::complex<Scalar> theta_derivative(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  if (z == std::complex<Scalar>(0)) throw std::invalid_argument("theta_derivative: z must be nonzero");
  const std::complex<Scalar> i(0, 1);
  return i * (z * eval(f.dh(), z) - std::conj(z * eval(f.dg(), z)));
}

}  // namespace fhmap

#endif  // FHMAP_HARMAP_HPP
