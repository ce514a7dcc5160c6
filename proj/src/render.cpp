#include "fhmap/render.hpp"

#include "fhmap/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace fhmap {

namespace {

constexpr int kBoundarySamples = 4096;
constexpr int kCircleSamples = 720;
constexpr int kRadialSamples = 200;
constexpr int kRadialSegments = 24;
constexpr double kCanvas = 600.0;
// Relative size of |d/dtheta f| (against its boundary maximum) below which a
// local minimum is drawn as a cusp.
constexpr double kCuspRatio = 1e-2;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Frame {
  double min_x, max_y, scale, pad;

  std::string point(std::complex<double> w) const {
    return fixed(pad + (w.real() - min_x) * scale) + "," + fixed(pad + (max_y - w.imag()) * scale);
  }
};

Frame make_frame(const std::vector<std::vector<std::complex<double>>>& paths) {
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& path : paths) {
    for (const auto& w : path) {
      min_x = std::min(min_x, w.real());
      max_x = std::max(max_x, w.real());
      min_y = std::min(min_y, w.imag());
      max_y = std::max(max_y, w.imag());
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad = 20.0;
  return {min_x, max_y, (kCanvas - 2 * pad) / span, pad};
}

std::string polyline(const Frame& frame, const std::vector<std::complex<double>>& pts, const char* style) {
  std::string s = "  <polyline fill=\"none\" " + std::string(style) + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += frame.point(pts[i]);
  }
  s += "\"/>\n";
  return s;
}

std::vector<std::complex<double>> find_cusps(const HarmonicPolyMap<double>& f) {
  std::vector<double> speed(kBoundarySamples);
  for (int k = 0; k < kBoundarySamples; ++k) {
    speed[k] = std::abs(theta_derivative(f, std::polar(1.0, kTwoPi<double> * k / kBoundarySamples)));
  }
  const double peak = *std::max_element(speed.begin(), speed.end());
  std::vector<std::complex<double>> cusps;
  for (int k = 0; k < kBoundarySamples; ++k) {
    const double prev = speed[(k + kBoundarySamples - 1) % kBoundarySamples];
    const double next = speed[(k + 1) % kBoundarySamples];
    if (speed[k] <= prev && speed[k] < next && speed[k] < kCuspRatio * peak) {
      cusps.push_back(eval_map(f, std::polar(1.0, kTwoPi<double> * k / kBoundarySamples)));
    }
  }
  return cusps;
}

std::string header(const std::string& title) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
         "  <title>" + title + "</title>\n"
         "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
}

}  // namespace

std::optional<RenderStyle> parse_render_style(std::string_view name) {
  if (name == "grid_image") return RenderStyle::grid_image;
  if (name == "boundary_curve") return RenderStyle::boundary_curve;
  return std::nullopt;
}

Rendering render_svg(const HarmonicPolyMap<double>& f, RenderStyle style) {
  Rendering out;
  const auto trace = boundary_trace(f, kBoundarySamples);
  out.boundary_length = trace.length;
  out.cusps = find_cusps(f);

  std::vector<std::vector<std::complex<double>>> circles;
  std::vector<std::vector<std::complex<double>>> rays;
  if (style == RenderStyle::grid_image) {
    for (int i = 1; i <= 10; ++i) {
      const double r = i / 10.0;
      std::vector<std::complex<double>> c;
      for (int k = 0; k <= kCircleSamples; ++k) c.push_back(eval_map(f, std::polar(r, kTwoPi<double> * k / kCircleSamples)));
      circles.push_back(std::move(c));
    }
    for (int j = 0; j < kRadialSegments; ++j) {
      std::vector<std::complex<double>> ray;
      for (int k = 0; k <= kRadialSamples; ++k) {
        ray.push_back(eval_map(f, std::polar(double(k) / kRadialSamples, kTwoPi<double> * j / kRadialSegments)));
      }
      rays.push_back(std::move(ray));
    }
  } else {
    circles.push_back(trace.points);
  }

  auto all = circles;
  all.insert(all.end(), rays.begin(), rays.end());
  const Frame frame = make_frame(all);

  std::string svg = header(style == RenderStyle::grid_image ? "image of polar grid" : "image of the unit circle");
  for (const auto& ray : rays) svg += polyline(frame, ray, "stroke=\"#7a8ca5\" stroke-width=\"0.6\"");
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const bool outer = i + 1 == circles.size();
    svg += polyline(frame, circles[i], outer ? "stroke=\"#1b3a6b\" stroke-width=\"1.6\"" : "stroke=\"#3c5d8f\" stroke-width=\"0.8\"");
  }
  if (style == RenderStyle::boundary_curve) {
    for (const auto& w : out.cusps) {
      const auto p = frame.point(w);
      const auto comma = p.find(',');
      svg += "  <circle cx=\"" + p.substr(0, comma) + "\" cy=\"" + p.substr(comma + 1) +
             "\" r=\"4\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"1.2\"/>\n";
    }
  }
  svg += "</svg>\n";
  out.svg = std::move(svg);
  return out;
}

}  // namespace fhmap
