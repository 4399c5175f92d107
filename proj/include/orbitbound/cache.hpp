#ifndef ORBITBOUND_CACHE_HPP
#define ORBITBOUND_CACHE_HPP

// Disk cache for weight systems: one canonical JSON file per (type, hw),
// keyed by a stable content hash of the type label and coefficients.

#include "orbitbound/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace orbitbound {

inline std::string cache_key(const SimpleType& type, const std::vector<std::int64_t>& coeffs) {
  std::string s = type.label() + ":";
  for (auto c : coeffs)
    s += std::to_string(c) + ",";
  return s;
}

inline std::string default_cache_dir() {
  if (const char* env = std::getenv("ORBITBOUND_CACHE"))
    return env;
  return ".orbitbound-cache";
}

inline std::filesystem::path cache_path(const std::string& dir, const SimpleType& type,
                                        const std::vector<std::int64_t>& coeffs) {
  return std::filesystem::path(dir) / (type.label() + "_" + fnv1a_hex(cache_key(type, coeffs)) + ".json");
}

inline WeightSystem cached_weight_system(const RootSystem& rs, const HighestWeight& hw,
                                         std::int64_t budget, const std::string& cache_dir,
                                         bool bypass) {
  if (bypass || cache_dir.empty())
    return weight_system(rs, hw, budget);
  const auto path = cache_path(cache_dir, rs.type, hw.coeffs);
  if (std::filesystem::exists(path)) {
    try {
      Json j = load_json_file(path.string());
      if (j.value("type", "") == rs.type.label() &&
          j.at("hw").get<std::vector<std::int64_t>>() == hw.coeffs)
        return weight_system_from_json(rs, j);
    } catch (const Error&) {
      // fall through and recompute; the entry is rewritten below
    }
  }
  WeightSystem ws = weight_system(rs, hw, budget);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::ofstream out(path);
  if (out)
    out << weight_system_to_json(ws).dump(2) << "\n";
  return ws;
}

}  // namespace orbitbound

#endif
