#ifndef FHMAP_VERIFY_HPP
#define FHMAP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fhmap {

enum class Suite { coefficients, growth, area, jacobian, boundary, orders, products, neighborhoods, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// One checked property. `worst_margin` is the smallest (bound - value) seen;
/// a sample is a violation when its margin drops below -tolerance.
struct PropertyEntry {
  std::string id;
  std::string anchor;  // human-readable statement of the property
  int samples = 0;
  int violations = 0;
  double worst_margin = 0.0;
  double elapsed_seconds = 0.0;
};

struct VerifyReport {
  std::vector<PropertyEntry> entries;
  bool pass = true;  // no entry has a violation
  std::uint64_t seed = 0;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 100;       // random samples per randomized entry
  int degree = 12;         // degree of random members
  double tol = 1e-9;       // slack for inequality checks
  double r_max = 0.999;    // outer grid radius
  int grid_angles = 720;   // angles per grid circle
};

/// Runs every entry of the suite. Output depends only on the config (elapsed
/// times aside). Throws std::invalid_argument on a nonpositive sample count.
VerifyReport run_verify(Suite suite, const VerifyConfig& config);

}  // namespace fhmap

#endif  // FHMAP_VERIFY_HPP
