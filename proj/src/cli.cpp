#include "fhmap/cli.hpp"

#include "fhmap/classes.hpp"
#include "fhmap/geometry.hpp"
#include "fhmap/mapfile.hpp"
#include "fhmap/render.hpp"
#include "fhmap/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

namespace fhmap::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int grid_angles = 720;
  double r_max = 0.999;
  std::string format = "text";
  bool timing = false;

  bool json_lines() const { return format == "json-lines"; }
};

std::string num(double v, const char* fmt = "%.12g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string complex_text(std::complex<double> z) {
  return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::non_member: return "non_member";
    case Verdict::boundary_case: return "boundary_case";
  }
  return "";
}

const char* method_name(MembershipMethod m) {
  switch (m) {
    case MembershipMethod::numeric_sup: return "numeric_sup";
    case MembershipMethod::coeff_sufficient: return "coeff_sufficient";
    case MembershipMethod::coeff_necessary_violation: return "coeff_necessary_violation";
  }
  return "";
}

int cmd_check(const Globals& g, const std::string& path, double lambda, bool unpinned, bool strict,
              std::ostream& out, std::ostream& err) {
  const auto file = read_map_file(path);
  const ClassSpec spec(lambda, !unpinned);
  const auto report = is_member_numeric(file.map, spec, strict ? BoundaryPolicy::report : BoundaryPolicy::resolve);
  const auto violations = coeff_necessary_checks(file.map, spec, g.tol.value_or(kCheckTol));
  const bool sufficient = coeff_sufficient(file.map, lambda);

  if (g.json_lines()) {
    json doc;
    doc["command"] = "check";
    doc["file"] = path;
    doc["lambda"] = lambda;
    doc["pinned"] = spec.pinned;
    doc["verdict"] = verdict_name(report.verdict);
    doc["defect_sup"] = report.defect_sup;
    doc["margin"] = report.margin;
    doc["witness"] = {report.witness.real(), report.witness.imag()};
    doc["method"] = method_name(report.method);
    doc["on_boundary"] = report.on_boundary;
    doc["coeff_sufficient"] = sufficient;
    doc["necessary_violations"] = json::array();
    for (const auto& v : violations) {
      doc["necessary_violations"].push_back({{"constraint", v.constraint}, {"n", v.n}, {"value", v.value}, {"bound", v.bound}});
    }
    out << doc.dump() << "\n";
  } else {
    out << "file: " << path << "\n"
        << "class: lambda = " << num(lambda) << (spec.pinned ? ", pinned" : ", unpinned") << "\n"
        << "verdict: " << verdict_name(report.verdict) << "\n"
        << "defect_sup: " << num(report.defect_sup) << "\n"
        << "margin: " << num(report.margin) << "\n"
        << "witness: " << complex_text(report.witness) << "\n"
        << "method: " << method_name(report.method) << "\n"
        << "on_boundary: " << (report.on_boundary ? "yes" : "no") << "\n"
        << "coeff_sufficient: " << (sufficient ? "yes" : "no") << "\n"
        << "necessary_violations: " << violations.size() << "\n";
    for (const auto& v : violations) {
      out << "  " << v.constraint;
      if (v.n > 0) out << " (n = " << v.n << ")";
      out << ": " << num(v.value) << " > " << num(v.bound) << "\n";
    }
  }
  (void)err;
  switch (report.verdict) {
    case Verdict::member: return kPass;
    case Verdict::non_member: return kFail;
    case Verdict::boundary_case: return kBoundary;
  }
  return kFail;
}

int cmd_verify(const Globals& g, const std::string& suite_text, int samples, int degree, std::ostream& out,
               std::ostream& err) {
  const auto suite = parse_suite(suite_text);
  if (!suite) {
    err << "fhmap verify: unknown suite '" << suite_text << "'\n";
    return kUsage;
  }
  if (samples < 1) {
    err << "fhmap verify: --samples must be at least 1\n";
    return kUsage;
  }
  VerifyConfig config;
  config.seed = g.seed;
  config.samples = samples;
  config.degree = degree;
  config.tol = g.tol.value_or(1e-9);
  config.r_max = g.r_max;
  config.grid_angles = g.grid_angles;
  const auto report = run_verify(*suite, config);

  for (const auto& e : report.entries) {
    if (g.json_lines()) {
      json doc{{"id", e.id},         {"anchor", e.anchor}, {"samples", e.samples}, {"violations", e.violations},
               {"worst_margin", e.worst_margin}, {"pass", e.violations == 0}};
      if (g.timing) doc["elapsed_seconds"] = e.elapsed_seconds;
      out << doc.dump() << "\n";
    } else {
      out << (e.violations == 0 ? "PASS " : "FAIL ") << e.id << "  samples=" << e.samples
          << " violations=" << e.violations << " worst_margin=" << num(e.worst_margin, "%.6e");
      if (g.timing) out << " elapsed=" << num(e.elapsed_seconds, "%.3f") << "s";
      out << "\n     " << e.anchor << "\n";
    }
  }
  if (g.json_lines()) {
    out << json{{"suite", suite_text}, {"seed", report.seed}, {"pass", report.pass}}.dump() << "\n";
  } else {
    out << "suite " << suite_text << " seed " << report.seed << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kPass : kFail;
}

int cmd_radius(const Globals& g, const std::string& path, const std::string& kind_text, std::ostream& out,
               std::ostream& err) {
  const auto file = read_map_file(path);
  const auto kind = kind_text == "convex" ? FunctionalKind::convex : FunctionalKind::starlike;
  RadiusBracket<double> bracket;
  try {
    bracket = radius_bracket(file.map, kind, g.tol.value_or(1e-3), RadiusScan{g.r_max, g.grid_angles, 0.01});
  } catch (const DegenerateInput& e) {
    err << "fhmap radius: " << e.what() << "\n";
    return kBoundary;
  }
  if (g.json_lines()) {
    out << json{{"command", "radius"},
                {"kind", kind_text},
                {"lo", bracket.lo},
                {"hi", bracket.hi},
                {"tol", bracket.tol},
                {"whole_disk", bracket.whole_disk},
                {"failing_radii", bracket.failing_radii}}
               .dump()
        << "\n";
  } else {
    out << "kind: " << kind_text << "\n"
        << "lo: " << num(bracket.lo) << "\n"
        << "hi: " << num(bracket.hi) << "\n"
        << "tol: " << num(bracket.tol) << "\n"
        << "whole_disk: " << (bracket.whole_disk ? "yes" : "no") << "\n"
        << "failing_circles: " << bracket.failing_radii.size() << "\n";
  }
  return kPass;
}

int cmd_render(const Globals& g, const std::string& path, const std::string& output, const std::string& style_text,
               std::ostream& out, std::ostream& err) {
  const auto file = read_map_file(path);
  const auto style = parse_render_style(style_text);
  if (!style) {
    err << "fhmap render: unknown style '" << style_text << "'\n";
    return kUsage;
  }
  const auto rendering = render_svg(file.map, *style);
  std::ofstream svg(output, std::ios::binary);
  if (!svg || !(svg << rendering.svg) || !svg.flush()) {
    err << "fhmap render: cannot write " << output << "\n";
    return kUsage;
  }
  if (g.json_lines()) {
    out << json{{"command", "render"},
                {"output", output},
                {"style", style_text},
                {"boundary_length", rendering.boundary_length},
                {"cusps", rendering.cusps.size()}}
               .dump()
        << "\n";
  } else {
    out << "wrote " << output << "\n"
        << "boundary_length: " << num(rendering.boundary_length) << "\n"
        << "cusps: " << rendering.cusps.size() << "\n";
  }
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic maps with bounded derivative defect: membership, geometry and verification"};
  app.name("fhmap");
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance (check: 1e-9, verify: 1e-9, radius bisection: 1e-3)");
  app.add_option("--grid-angles", g.grid_angles, "Angles per grid circle")->capture_default_str()->check(CLI::Range(16, 100000));
  app.add_option("--r-max", g.r_max, "Outer grid radius")->capture_default_str()->check(CLI::Range(0.5, 0.999999));
  app.add_option("--format", g.format, "Output format")->capture_default_str()->check(CLI::IsMember({"text", "json-lines"}));
  app.add_flag("--timing", g.timing, "Include elapsed times in verify output");

  std::string input;
  double lambda = 1.0;
  bool unpinned = false;
  bool strict = false;
  auto* check = app.add_subcommand("check", "Class membership report for a map file")->fallthrough();
  check->add_option("file", input, "Map file")->required();
  check->add_option("--lambda", lambda, "Class parameter in (0, 1]")->capture_default_str();
  check->add_flag("--unpinned", unpinned, "Allow b1 != 0 (lambda = 1 only)");
  check->add_flag("--strict", strict, "Report boundary cases instead of resolving them");

  std::string suite;
  int samples = 100;
  int degree = 12;
  auto* verify = app.add_subcommand("verify", "Run property verification suites")->fallthrough();
  verify->add_option("suite", suite, "coefficients|growth|area|jacobian|boundary|orders|products|neighborhoods|all")
      ->required();
  verify->add_option("--samples", samples, "Random samples per property")->capture_default_str();
  verify->add_option("--degree", degree, "Degree of random members")->capture_default_str()->check(CLI::Range(2, 64));

  std::string kind = "starlike";
  auto* radius = app.add_subcommand("radius", "Bracket the radius of starlikeness or convexity")->fallthrough();
  radius->add_option("file", input, "Map file")->required();
  radius->add_option("--kind", kind, "starlike|convex")->capture_default_str()->check(CLI::IsMember({"starlike", "convex"}));

  std::string output;
  std::string style = "boundary_curve";
  auto* render = app.add_subcommand("render", "Write an SVG picture of the map")->fallthrough();
  render->add_option("file", input, "Map file")->required();
  render->add_option("-o,--output", output, "SVG output path")->required();
  render->add_option("--style", style, "grid_image|boundary_curve")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*check) return cmd_check(g, input, lambda, unpinned, strict, out, err);
    if (*verify) return cmd_verify(g, suite, samples, degree, out, err);
    if (*radius) return cmd_radius(g, input, kind, out, err);
    if (*render) return cmd_render(g, input, output, style, out, err);
  } catch (const MapFileError& e) {
    err << "fhmap: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "fhmap: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fhmap::cli
