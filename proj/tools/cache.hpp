#pragma once

// On-disk cache of computed face sets, keyed by a canonical job string.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kr/faces.hpp"

namespace kr::cli {

inline constexpr const char* kToolVersion = "1";

class FaceCache {
public:
  /// Disabled when dir is empty.
  explicit FaceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// Reads KR_CACHE_DIR.
  static FaceCache from_environment();

  bool enabled() const { return !dir_.empty(); }
  std::filesystem::path path_for(const std::string& key) const;

  /// nullopt on miss, unreadable entry, or key/version mismatch.
  std::optional<std::vector<Face>> load(const std::string& key) const;
  /// Write to a temporary file, then rename into place.
  void store(const std::string& key, const std::vector<Face>& faces) const;

private:
  std::filesystem::path dir_;
};

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(const std::string& s);

}  // namespace kr::cli
