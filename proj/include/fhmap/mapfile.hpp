#ifndef FHMAP_MAPFILE_HPP
#define FHMAP_MAPFILE_HPP

#include "fhmap/harmap.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fhmap {

inline constexpr int kMapFileVersion = 1;
inline constexpr const char* kMapFileFormat = "fhmap-map";

/// Malformed or inconsistent map file.
class MapFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A harmonic polynomial map plus free-form metadata, as stored on disk.
///
/// On-disk form (JSON text):
///   { "format": "fhmap-map", "version": 1, "degree": N,
///     "a": [[re, im], ...  N entries, a[0] = [1, 0]],
///     "b": [[re, im], ...  N entries],
///     "metadata": { "key": "value", ... } }
/// Numbers are written in shortest round-trip form, so write/read is bit-exact.
struct MapFile {
  HarmonicPolyMap<double> map = HarmonicPolyMap<double>::identity();
  std::map<std::string, std::string> metadata;
};

MapFile parse_map_file(std::string_view text);
std::string format_map_file(const MapFile& file);

MapFile read_map_file(const std::filesystem::path& path);
void write_map_file(const std::filesystem::path& path, const MapFile& file);

}  // namespace fhmap

#endif  // FHMAP_MAPFILE_HPP
