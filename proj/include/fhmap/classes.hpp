#ifndef FHMAP_CLASSES_HPP
#define FHMAP_CLASSES_HPP

#include "fhmap/harmap.hpp"
#include "fhmap/numeric.hpp"
#include "fhmap/series.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fhmap {

/// Parameters of the class |h' - 1| < lambda - |g'| on the unit disk.
/// `pinned` additionally requires g'(0) = b_1 = 0. Only lambda = 1 may be
/// unpinned.
struct ClassSpec {
  double lambda = 1.0;
  bool pinned = true;

  ClassSpec() = default;
  ClassSpec(double lambda_, bool pinned_) : lambda(lambda_), pinned(pinned_) {
    if (!(lambda > 0.0) || lambda > 1.0) throw std::invalid_argument("ClassSpec: lambda must lie in (0, 1]");
    if (lambda < 1.0 && !pinned) throw std::invalid_argument("ClassSpec: lambda < 1 requires the pinned subclass");
  }
  explicit ClassSpec(double lambda_) : ClassSpec(lambda_, true) {}
};

enum class Verdict { member, non_member, boundary_case };
enum class MembershipMethod { numeric_sup, coeff_sufficient, coeff_necessary_violation };

/// What to do when the boundary supremum sits inside the tolerance band
/// around lambda.
enum class BoundaryPolicy {
  resolve,  // apply the maximum-principle rule
  report,   // leave the verdict as boundary_case
};

inline constexpr int kMembershipScan = 2048;
inline constexpr double kMembershipRefineTol = 1e-10;
inline constexpr double kVerdictBand = 1e-9;
inline constexpr double kCheckTol = 1e-9;

struct MembershipReport {
  Verdict verdict = Verdict::non_member;
  double defect_sup = 0.0;
  double margin = 0.0;  // lambda - defect_sup
  std::complex<double> witness{1.0, 0.0};
  MembershipMethod method = MembershipMethod::numeric_sup;
  bool on_boundary = false;  // supremum within the verdict band of lambda
};

template <typename Scalar>
struct DefectSup {
  Scalar sup;
  std::complex<Scalar> witness;
};

/// D(z) = |h'(z) - 1| + |g'(z)|.
template <typename Scalar>
Scalar defect(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> z) {
  return std::abs(eval(f.dh(), z) - Scalar(1)) + std::abs(eval(f.dg(), z));
}

/// Maximum of the defect over `angle_count` equispaced points of |z| = 1.
/// The defect is subharmonic, so the disk supremum lives on the circle.
template <typename Scalar>
DefectSup<Scalar> sup_defect(const HarmonicPolyMap<Scalar>& f, int angle_count) {
  if (angle_count < 1) throw std::invalid_argument("sup_defect: angle_count must be positive");
  DefectSup<Scalar> best{Scalar(-1), std::complex<Scalar>(1)};
  for (int k = 0; k < angle_count; ++k) {
    const auto z = std::polar(Scalar(1), kTwoPi<Scalar> * Scalar(k) / Scalar(angle_count));
    const Scalar d = defect(f, z);
    if (d > best.sup) best = {d, z};
  }
  return best;
}

/// Coarse scan followed by golden-section refinement of the boundary maximum.
template <typename Scalar>
DefectSup<Scalar> refined_sup_defect(const HarmonicPolyMap<Scalar>& f, int coarse = kMembershipScan,
                                     Scalar tol = Scalar(kMembershipRefineTol)) {
  auto d = [&](Scalar theta) { return defect(f, std::polar(Scalar(1), theta)); };
  const auto best = refined_circle_max<Scalar>(d, coarse, tol);
  return {best.value, std::polar(Scalar(1), best.theta)};
}

/// The defect is constant exactly when h' = 1 and g' is constant.
template <typename Scalar>
bool defect_is_constant(const HarmonicPolyMap<Scalar>& f) {
  return f.dh().is_constant(Scalar(0)) && f.dg().is_constant(Scalar(0));
}

template <typename Scalar>
MembershipReport is_member_numeric(const HarmonicPolyMap<Scalar>& f, const ClassSpec& spec,
                                   BoundaryPolicy policy = BoundaryPolicy::resolve) {
  MembershipReport report;
  if (spec.pinned && std::abs(f.b(1)) > Scalar(kCoeffTol)) {
    report.verdict = Verdict::non_member;
    report.method = MembershipMethod::coeff_necessary_violation;
    report.defect_sup = static_cast<double>(std::abs(f.b(1)));
    report.margin = spec.lambda - report.defect_sup;
    report.witness = {0.0, 0.0};
    return report;
  }
  const auto sup = refined_sup_defect(f);
  report.defect_sup = static_cast<double>(sup.sup);
  report.margin = spec.lambda - report.defect_sup;
  report.witness = {static_cast<double>(sup.witness.real()), static_cast<double>(sup.witness.imag())};
  report.method = MembershipMethod::numeric_sup;
  if (report.defect_sup < spec.lambda - kVerdictBand) {
    report.verdict = Verdict::member;
  } else if (report.defect_sup > spec.lambda + kVerdictBand) {
    report.verdict = Verdict::non_member;
  } else {
    report.on_boundary = true;
    if (policy == BoundaryPolicy::report) {
      report.verdict = Verdict::boundary_case;
    } else {
      // A non-constant subharmonic defect reaches its boundary maximum only on
      // |z| = 1, so the strict inequality holds on the open disk.
      report.verdict = defect_is_constant(f) ? Verdict::non_member : Verdict::member;
    }
  }
  return report;
}

/// Sum over n >= 2 of n^power (|a_n| + |b_n|).
template <typename Scalar>
Scalar weighted_coeff_sum(const HarmonicPolyMap<Scalar>& f, int power = 1) {
  Scalar sum = 0;
  for (int n = 2; n <= f.degree(); ++n) {
    sum += std::pow(Scalar(n), Scalar(power)) * (std::abs(f.a(n)) + std::abs(f.b(n)));
  }
  return sum;
}

/// Sufficient coefficient condition sum n(|a_n| + |b_n|) <= lambda - |b_1|.
/// For lambda < 1 the condition is only known with b_1 = 0.
template <typename Scalar>
bool coeff_sufficient(const HarmonicPolyMap<Scalar>& f, double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0) throw std::invalid_argument("coeff_sufficient: lambda must lie in (0, 1]");
  const double b1 = static_cast<double>(std::abs(f.b(1)));
  if (lambda < 1.0 && b1 > kCoeffTol) return false;
  return static_cast<double>(weighted_coeff_sum(f, 1)) <= lambda - b1 + kCoeffTol;
}

struct NecessaryViolation {
  std::string constraint;
  int n = 0;  // coefficient index, 0 for whole-series constraints
  double value = 0.0;
  double bound = 0.0;
};

/// Coefficient inequalities every class member satisfies. Any entry in the
/// returned list certifies non-membership.
template <typename Scalar>
std::vector<NecessaryViolation> coeff_necessary_checks(const HarmonicPolyMap<Scalar>& f, const ClassSpec& spec,
                                                       double tol = kCheckTol) {
  std::vector<NecessaryViolation> out;
  const double lambda = spec.lambda;
  const double b1 = static_cast<double>(std::abs(f.b(1)));
  if (spec.pinned && b1 > kCoeffTol) out.push_back({"b1 = 0 (pinned)", 1, b1, 0.0});

  double energy = 0.0;
  for (int n = 2; n <= f.degree(); ++n) {
    energy += double(n) * n * static_cast<double>(std::norm(f.a(n)) + std::norm(f.b(n)));
  }
  const double energy_bound = lambda * lambda - b1 * b1;
  if (energy > energy_bound + tol) out.push_back({"sum n^2(|a_n|^2+|b_n|^2) <= lambda^2 - |b_1|^2", 0, energy, energy_bound});

  const bool classical = lambda == 1.0 && b1 <= kCoeffTol;
  for (int n = 2; n <= f.degree(); ++n) {
    const double an = static_cast<double>(std::abs(f.a(n)));
    const double bn = static_cast<double>(std::abs(f.b(n)));
    const double bound = lambda / n;
    if (an > bound + tol) out.push_back({"|a_n| <= lambda/n", n, an, bound});
    if (bn > bound + tol) out.push_back({"|b_n| <= lambda/n", n, bn, bound});
    if (classical) {
      if (an + bn > 1.0 / n + tol) out.push_back({"|a_n|+|b_n| <= 1/n", n, an + bn, 1.0 / n});
      if (std::abs(an - bn) > 1.0 / n + tol) out.push_back({"||a_n|-|b_n|| <= 1/n", n, std::abs(an - bn), 1.0 / n});
    }
  }
  return out;
}

enum class Side { analytic, coanalytic };

/// z + (lambda/m) z^m or z + (lambda/m) conj(z)^m at the given degree.
template <typename Scalar = double>
HarmonicPolyMap<Scalar> extremal(int m, Scalar lambda, Side side, int degree = 0) {
  if (m < 2) throw std::invalid_argument("extremal: m must be at least 2");
  if (degree == 0) degree = m;
  if (m > degree) throw std::invalid_argument("extremal: m exceeds degree");
  const std::complex<Scalar> c(lambda / Scalar(m));
  if (side == Side::analytic) return HarmonicPolyMap<Scalar>::analytic(monomial_series<Scalar>(m, c, degree));
  CoeffVector<Scalar> g = CoeffVector<Scalar>::Zero(degree);
  g[m - 1] = c;
  return HarmonicPolyMap<Scalar>(monomial_series<Scalar>(1, std::complex<Scalar>(0), degree),
                                 AnalyticSeries<Scalar>(std::move(g)));
}

/// Distance of the coefficient-weighted l1 neighbourhoods:
/// sum_{n>=2} n(|a_n - A_n| + |b_n - B_n|) + |b_1 - B_1|.
struct NeighborhoodDistance {
  double value = 0.0;
};

template <typename Scalar>
NeighborhoodDistance nbhd_distance(const HarmonicPolyMap<Scalar>& f, const HarmonicPolyMap<Scalar>& F) {
  const int degree = std::max(f.degree(), F.degree());
  double d = static_cast<double>(std::abs(f.b(1) - F.b(1)));
  for (int n = 2; n <= degree; ++n) {
    d += n * static_cast<double>(std::abs(f.a(n) - F.a(n)) + std::abs(f.b(n) - F.b(n)));
  }
  return {d};
}

// --- random members -------------------------------------------------------

struct CoeffSamplerOptions {
  std::optional<double> tau;  // scale factor in (0, 1]; drawn when absent
  int weight_power = 1;       // 1: sum n(|a_n|+|b_n|), 2: sum n^2(|a_n|+|b_n|)
};

struct BoundarySamplerOptions {
  std::optional<double> tau;  // in (0, 1); drawn when absent
};

struct MemberSample {
  HarmonicPolyMap<double> map;
  double tau;
};

namespace detail {

inline std::complex<double> unit_disk_point(SeededRng& rng) {
  const double r = std::sqrt(rng.uniform());
  return std::polar(r, kTwoPi<double> * rng.uniform());
}

// Draws a coefficient vector whose entries 0..count-1 are uniform in the unit
// disk, zeroed independently with probability 0.3.
inline CoeffVector<double> sparse_disk_coeffs(SeededRng& rng, int count) {
  CoeffVector<double> c = CoeffVector<double>::Zero(count);
  for (int k = 0; k < count; ++k) {
    const bool keep = !rng.bernoulli(0.3);
    const auto z = unit_disk_point(rng);
    if (keep) c[k] = z;
  }
  return c;
}

}  // namespace detail

/// Random member via the sufficient coefficient condition.
///
/// Algorithm (seeded SeededRng): effective degree d uniform in [2, degree];
/// a_n, b_n for 2 <= n <= d uniform in the unit disk, each zeroed with
/// probability 0.3 (a_2 = 1 if everything vanished); when unpinned b_1 is
/// uniform in the disk of radius 0.9. The higher coefficients are rescaled so
/// that sum n^p(|a_n| + |b_n|) = tau (lambda - |b_1|), tau uniform in (0, 1].
inline MemberSample sample_member_coeff(const ClassSpec& spec, int degree, std::uint64_t seed,
                                        CoeffSamplerOptions options = {}) {
  if (degree < 2) throw std::invalid_argument("random_member_coeff: degree must be at least 2");
  SeededRng rng(seed);
  const int d = rng.uniform_int(2, degree);
  CoeffVector<double> a = CoeffVector<double>::Zero(degree);
  CoeffVector<double> b = CoeffVector<double>::Zero(degree);
  a.segment(1, d - 1) = detail::sparse_disk_coeffs(rng, d - 1);
  b.segment(1, d - 1) = detail::sparse_disk_coeffs(rng, d - 1);
  const auto b1 = 0.9 * detail::unit_disk_point(rng);
  const double drawn_tau = rng.uniform_left_open();
  const double tau = options.tau.value_or(drawn_tau);
  if (!(tau > 0.0) || tau > 1.0) throw std::invalid_argument("random_member_coeff: tau must lie in (0, 1]");
  if (!spec.pinned) b[0] = b1;

  double weighted = 0.0;
  for (int n = 2; n <= degree; ++n) {
    weighted += std::pow(double(n), options.weight_power) * (std::abs(a[n - 1]) + std::abs(b[n - 1]));
  }
  if (weighted == 0.0) {
    a[1] = 1.0;
    weighted = std::pow(2.0, options.weight_power);
  }
  const double budget = tau * (spec.lambda - std::abs(b[0]));
  const double scale = budget / weighted;
  a.segment(1, degree - 1) *= scale;
  b.segment(1, degree - 1) *= scale;
  a[0] = 1.0;
  return {HarmonicPolyMap<double>(AnalyticSeries<double>(std::move(a)), AnalyticSeries<double>(std::move(b))), tau};
}

inline HarmonicPolyMap<double> random_member_coeff(const ClassSpec& spec, int degree, std::uint64_t seed) {
  return sample_member_coeff(spec, degree, seed).map;
}

/// Random member built from its derivatives.
///
/// Algorithm: effective degree d uniform in [2, degree]; p(z) = sum_{k=1}^{d-1}
/// p_k z^k and q(z) = sum_{k=k0}^{d-1} q_k z^k (k0 = 1 when pinned, else 0),
/// coefficients drawn as in sample_member_coeff (p_1 forced to 1 if p vanished).
/// With M the refined boundary maximum of |p| + |q| and tau uniform in (0, 1),
/// h' = 1 + tau lambda p / M and g' = tau lambda q / M, integrated term-wise.
/// The defect supremum is tau lambda.
inline MemberSample sample_member_boundary(const ClassSpec& spec, int degree, std::uint64_t seed,
                                           BoundarySamplerOptions options = {}) {
  if (degree < 2) throw std::invalid_argument("random_member_boundary: degree must be at least 2");
  SeededRng rng(seed);
  const int d = rng.uniform_int(2, degree);
  // Derivative coefficients: index k multiplies z^k.
  CoeffVector<double> p = CoeffVector<double>::Zero(d);
  CoeffVector<double> q = CoeffVector<double>::Zero(d);
  p.segment(1, d - 1) = detail::sparse_disk_coeffs(rng, d - 1);
  q.segment(1, d - 1) = detail::sparse_disk_coeffs(rng, d - 1);
  const auto q0 = detail::unit_disk_point(rng);
  const double drawn_tau = rng.uniform_open();
  const double tau = options.tau.value_or(drawn_tau);
  if (!(tau > 0.0) || !(tau < 1.0)) throw std::invalid_argument("random_member_boundary: tau must lie in (0, 1)");
  if (!spec.pinned) q[0] = q0;
  if (p.norm() == 0.0 && q.norm() == 0.0) p[1] = 1.0;

  const DerivativeSeries<double> ps(p);
  const DerivativeSeries<double> qs(q);
  auto envelope = [&](double theta) {
    const auto z = std::polar(1.0, theta);
    return std::abs(eval(ps, z)) + std::abs(eval(qs, z));
  };
  const double m = refined_circle_max<double>(envelope, kMembershipScan, kMembershipRefineTol).value;
  const double scale = tau * spec.lambda / m;

  CoeffVector<double> a = CoeffVector<double>::Zero(degree);
  CoeffVector<double> b = CoeffVector<double>::Zero(degree);
  a[0] = 1.0;
  for (int k = 1; k < d; ++k) a[k] = scale * p[k] / double(k + 1);
  for (int k = 0; k < d; ++k) b[k] = scale * q[k] / double(k + 1);
  return {HarmonicPolyMap<double>(AnalyticSeries<double>(std::move(a)), AnalyticSeries<double>(std::move(b))), tau};
}

inline HarmonicPolyMap<double> random_member_boundary(const ClassSpec& spec, int degree, std::uint64_t seed) {
  return sample_member_boundary(spec, degree, seed).map;
}

// --- slices ---------------------------------------------------------------

template <typename Scalar>
struct SliceSweep {
  Scalar value;                  // max over eps of the boundary sup of |F_eps' - 1|
  std::complex<Scalar> eps;      // maximizing unit eps
  std::complex<Scalar> witness;  // maximizing boundary point for that eps
};

inline constexpr int kDefaultEpsilonCount = 64;

/// Boundary supremum of |F_eps'(z) - 1| for the slice F_eps = h + eps g.
template <typename Scalar>
DefectSup<Scalar> slice_boundary_sup(const HarmonicPolyMap<Scalar>& f, std::complex<Scalar> eps,
                                     int coarse = kMembershipScan, Scalar tol = Scalar(kMembershipRefineTol)) {
  const auto slice = derivative(epsilon_slice(f, eps));
  auto fn = [&](Scalar theta) { return std::abs(eval(slice, std::polar(Scalar(1), theta)) - Scalar(1)); };
  const auto best = refined_circle_max<Scalar>(fn, coarse, tol);
  return {best.value, std::polar(Scalar(1), best.theta)};
}

/// Sweeps `eps_count` equispaced unit eps, then refines eps by golden section
/// around the best sample when `refine` is set.
template <typename Scalar>
SliceSweep<Scalar> slice_sweep(const HarmonicPolyMap<Scalar>& f, int eps_count = kDefaultEpsilonCount,
                               bool refine = true, int coarse = kMembershipScan) {
  if (eps_count < 3) throw std::invalid_argument("slice_sweep: need at least 3 eps samples");
  auto at = [&](Scalar phi) { return slice_boundary_sup(f, std::polar(Scalar(1), phi), coarse).sup; };
  const Scalar step = kTwoPi<Scalar> / Scalar(eps_count);
  Scalar best_phi = 0;
  Scalar best = Scalar(-1);
  for (int k = 0; k < eps_count; ++k) {
    const Scalar v = at(step * Scalar(k));
    if (v > best) {
      best = v;
      best_phi = step * Scalar(k);
    }
  }
  if (refine) {
    const auto [phi, value] = golden_section_max<Scalar>(at, best_phi - step, best_phi + step, Scalar(1e-9));
    if (value > best) {
      best = value;
      best_phi = phi;
    }
  }
  const auto eps = std::polar(Scalar(1), best_phi);
  return {best, eps, slice_boundary_sup(f, eps, coarse).witness};
}

}  // namespace fhmap

#endif  // FHMAP_CLASSES_HPP
