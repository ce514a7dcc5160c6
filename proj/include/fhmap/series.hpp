#ifndef FHMAP_SERIES_HPP
#define FHMAP_SERIES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fhmap {

template <typename Scalar>
using CoeffVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

inline constexpr int kDefaultDegree = 64;
inline constexpr double kCoeffTol = 1e-12;

namespace detail {

template <typename Scalar>
bool all_finite(const CoeffVector<Scalar>& c) {
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i].real()) || !std::isfinite(c[i].imag())) return false;
  }
  return true;
}

}  // namespace detail

/// Truncated power series c_1 z + c_2 z^2 + ... + c_N z^N. The constant term
/// is zero by construction. Storage is 0-based: coeffs()[k] multiplies z^(k+1).
template <typename Scalar = double>
class AnalyticSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = CoeffVector<Scalar>;

  AnalyticSeries() : c_(Vector::Zero(1)) {}

  explicit AnalyticSeries(Vector coeffs) : c_(std::move(coeffs)) {
    if (c_.size() < 1) throw std::invalid_argument("AnalyticSeries: degree must be at least 1");
    if (!detail::all_finite(c_)) throw std::invalid_argument("AnalyticSeries: non-finite coefficient");
  }

  AnalyticSeries(std::initializer_list<Complex> coeffs)
      : AnalyticSeries(Vector(Eigen::Map<const Vector>(coeffs.begin(), static_cast<Eigen::Index>(coeffs.size())))) {}

  static AnalyticSeries zero(int degree) { return AnalyticSeries(Vector::Zero(degree)); }

  int degree() const { return static_cast<int>(c_.size()); }

  /// 1-based coefficient access; zero beyond the stored degree.
  Complex coeff(int n) const { return (n >= 1 && n <= degree()) ? c_[n - 1] : Complex(0); }

  const Vector& coeffs() const { return c_; }

  /// Same series truncated to (or zero-padded up to) the given degree.
  AnalyticSeries resized(int degree) const {
    Vector out = Vector::Zero(degree);
    const int keep = std::min(degree, this->degree());
    out.head(keep) = c_.head(keep);
    return AnalyticSeries(std::move(out));
  }

  friend bool operator==(const AnalyticSeries& x, const AnalyticSeries& y) {
    return x.c_.size() == y.c_.size() && x.c_ == y.c_;
  }

 private:
  Vector c_;
};

/// Coefficients of a derivative d_0 + d_1 z + ... + d_{N-1} z^{N-1}. Kept
/// apart from AnalyticSeries because the constant term is generally nonzero.
template <typename Scalar = double>
class DerivativeSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = CoeffVector<Scalar>;

  DerivativeSeries() : d_(Vector::Zero(1)) {}
  explicit DerivativeSeries(Vector coeffs) : d_(std::move(coeffs)) {
    if (d_.size() < 1) d_ = Vector::Zero(1);
  }

  /// Coefficient of z^k.
  Complex coeff(int k) const { return (k >= 0 && k < size()) ? d_[k] : Complex(0); }
  Complex constant_term() const { return d_[0]; }
  int size() const { return static_cast<int>(d_.size()); }
  const Vector& coeffs() const { return d_; }

  /// True when every non-constant coefficient vanishes (within tol).
  bool is_constant(Scalar tol = Scalar(0)) const {
    for (Eigen::Index k = 1; k < d_.size(); ++k) {
      if (std::abs(d_[k]) > tol) return false;
    }
    return true;
  }

 private:
  Vector d_;
};

/// Horner evaluation of sum c_n z^n.
template <typename Scalar>
std::complex<Scalar> eval(const AnalyticSeries<Scalar>& s, std::complex<Scalar> z) {
  const auto& c = s.coeffs();
  std::complex<Scalar> acc(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * z + c[k];
  return acc * z;
}

template <typename Scalar>
std::complex<Scalar> eval(const DerivativeSeries<Scalar>& d, std::complex<Scalar> z) {
  const auto& c = d.coeffs();
  std::complex<Scalar> acc(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * z + c[k];
  return acc;
}

template <typename Scalar>
DerivativeSeries<Scalar> derivative(const AnalyticSeries<Scalar>& s) {
  const auto& c = s.coeffs();
  CoeffVector<Scalar> d(c.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) d[k] = Scalar(k + 1) * c[k];
  return DerivativeSeries<Scalar>(std::move(d));
}

template <typename Scalar>
DerivativeSeries<Scalar> derivative(const DerivativeSeries<Scalar>& s) {
  const auto& c = s.coeffs();
  if (c.size() <= 1) return DerivativeSeries<Scalar>();
  CoeffVector<Scalar> d(c.size() - 1);
  for (Eigen::Index k = 1; k < c.size(); ++k) d[k - 1] = Scalar(k) * c[k];
  return DerivativeSeries<Scalar>(std::move(d));
}

/// Coefficient-wise product; the result has the smaller of the two degrees.
template <typename Scalar>
AnalyticSeries<Scalar> hadamard(const AnalyticSeries<Scalar>& s, const AnalyticSeries<Scalar>& t) {
  const Eigen::Index n = std::min(s.coeffs().size(), t.coeffs().size());
  return AnalyticSeries<Scalar>(s.coeffs().head(n).cwiseProduct(t.coeffs().head(n)));
}

/// Coefficient n is s_n t_n / n.
template <typename Scalar>
AnalyticSeries<Scalar> integral_hadamard(const AnalyticSeries<Scalar>& s, const AnalyticSeries<Scalar>& t) {
  const Eigen::Index n = std::min(s.coeffs().size(), t.coeffs().size());
  CoeffVector<Scalar> c = s.coeffs().head(n).cwiseProduct(t.coeffs().head(n));
  for (Eigen::Index k = 0; k < n; ++k) c[k] /= Scalar(k + 1);
  return AnalyticSeries<Scalar>(std::move(c));
}

template <typename Scalar>
struct WeightedSeries {
  std::complex<Scalar> weight;
  AnalyticSeries<Scalar> series;
};

/// Sum of weight * series; shorter inputs are zero-extended to the largest degree.
template <typename Scalar>
AnalyticSeries<Scalar> linear_combine(std::span<const WeightedSeries<Scalar>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combine: at least one term required");
  int degree = 0;
  for (const auto& t : terms) degree = std::max(degree, t.series.degree());
  CoeffVector<Scalar> c = CoeffVector<Scalar>::Zero(degree);
  for (const auto& t : terms) c.head(t.series.degree()) += t.weight * t.series.coeffs();
  return AnalyticSeries<Scalar>(std::move(c));
}

template <typename Scalar>
AnalyticSeries<Scalar> linear_combine(std::initializer_list<WeightedSeries<Scalar>> terms) {
  return linear_combine(std::span<const WeightedSeries<Scalar>>(terms.begin(), terms.size()));
}

enum class SeriesKind {
  half_plane,  // z/(1-z): coefficients 1
  koebe,       // z/(1-z)^2: coefficients n
  log_convex,  // -log(1-z): coefficients 1/n
};

template <typename Scalar = double>
AnalyticSeries<Scalar> named_series(SeriesKind kind, int degree = kDefaultDegree) {
  if (degree < 1) throw std::invalid_argument("named_series: degree must be at least 1");
  CoeffVector<Scalar> c(degree);
  for (int n = 1; n <= degree; ++n) {
    switch (kind) {
      case SeriesKind::half_plane: c[n - 1] = Scalar(1); break;
      case SeriesKind::koebe: c[n - 1] = Scalar(n); break;
      case SeriesKind::log_convex: c[n - 1] = Scalar(1) / Scalar(n); break;
    }
  }
  return AnalyticSeries<Scalar>(std::move(c));
}

/// z + c z^m truncated at the given degree (m = 1 folds into the linear term).
template <typename Scalar = double>
AnalyticSeries<Scalar> monomial_series(int m, std::complex<Scalar> c, int degree) {
  if (degree < 1) throw std::invalid_argument("monomial_series: degree must be at least 1");
  if (m < 1 || m > degree) {
    throw std::invalid_argument("monomial_series: exponent " + std::to_string(m) + " outside [1, " +
                                std::to_string(degree) + "]");
  }
  CoeffVector<Scalar> coeffs = CoeffVector<Scalar>::Zero(degree);
  coeffs[0] = Scalar(1);
  coeffs[m - 1] += c;
  return AnalyticSeries<Scalar>(std::move(coeffs));
}

template <typename Scalar = double>
AnalyticSeries<Scalar> monomial_series(int m, std::complex<Scalar> c) {
  return monomial_series<Scalar>(m, c, m);
}

}  // namespace fhmap

#endif  // FHMAP_SERIES_HPP
