#include "fhmap/mapfile.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace fhmap {

namespace {

using nlohmann::json;

CoeffVector<double> read_coeffs(const json& doc, const char* key, int degree) {
  if (!doc.contains(key) || !doc[key].is_array()) throw MapFileError(std::string("missing array '") + key + "'");
  const json& arr = doc[key];
  if (static_cast<int>(arr.size()) != degree) {
    throw MapFileError(std::string("'") + key + "' has " + std::to_string(arr.size()) + " entries, degree is " +
                       std::to_string(degree));
  }
  CoeffVector<double> c(degree);
  for (int k = 0; k < degree; ++k) {
    const json& pair = arr[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw MapFileError(std::string("'") + key + "[" + std::to_string(k) + "]' is not a [re, im] pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw MapFileError("non-finite coefficient");
    c[k] = {re, im};
  }
  return c;
}

json write_coeffs(const AnalyticSeries<double>& s) {
  json arr = json::array();
  for (int n = 1; n <= s.degree(); ++n) arr.push_back(json::array({s.coeff(n).real(), s.coeff(n).imag()}));
  return arr;
}

}  // namespace

MapFile parse_map_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MapFileError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MapFileError("top level must be an object");
  if (doc.contains("format") && doc["format"] != kMapFileFormat) throw MapFileError("unexpected 'format' tag");
  if (!doc.contains("version") || !doc["version"].is_number_integer()) throw MapFileError("missing integer 'version'");
  if (doc["version"].get<int>() != kMapFileVersion) {
    throw MapFileError("unsupported version " + std::to_string(doc["version"].get<int>()));
  }
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) throw MapFileError("missing integer 'degree'");
  const int degree = doc["degree"].get<int>();
  if (degree < 1) throw MapFileError("degree must be at least 1");

  auto a = read_coeffs(doc, "a", degree);
  auto b = read_coeffs(doc, "b", degree);
  if (a[0] != std::complex<double>(1.0, 0.0)) throw MapFileError("a[0] must be [1, 0]");

  MapFile file{HarmonicPolyMap<double>(AnalyticSeries<double>(std::move(a)), AnalyticSeries<double>(std::move(b))), {}};
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw MapFileError("'metadata' must be an object");
    for (const auto& [key, value] : doc["metadata"].items()) {
      if (!value.is_string()) throw MapFileError("metadata value for '" + key + "' must be a string");
      file.metadata[key] = value.get<std::string>();
    }
  }
  return file;
}

std::string format_map_file(const MapFile& file) {
  json doc;
  doc["format"] = kMapFileFormat;
  doc["version"] = kMapFileVersion;
  doc["degree"] = file.map.degree();
  doc["a"] = write_coeffs(file.map.h());
  doc["b"] = write_coeffs(file.map.g());
  doc["metadata"] = json::object();
  for (const auto& [key, value] : file.metadata) doc["metadata"][key] = value;
  return doc.dump(2) + "\n";
}

MapFile read_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MapFileError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_map_file(buffer.str());
}

void write_map_file(const std::filesystem::path& path, const MapFile& file) {
  std::ofstream out(path);
  if (!out) throw MapFileError("cannot write " + path.string());
  out << format_map_file(file);
  if (!out) throw MapFileError("write failed for " + path.string());
}

}  // namespace fhmap
