#include "cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace kr::cli {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

FaceCache FaceCache::from_environment() {
  const char* dir = std::getenv("KR_CACHE_DIR");
  return FaceCache(dir && *dir ? std::filesystem::path(dir) : std::filesystem::path());
}

std::filesystem::path FaceCache::path_for(const std::string& key) const { return dir_ / (fnv1a_hex(key) + ".json"); }

std::optional<std::vector<Face>> FaceCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key || j.at("version").get<std::string>() != kToolVersion) return std::nullopt;
    return j.at("faces").get<std::vector<Face>>();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void FaceCache::store(const std::string& key, const std::vector<Face>& faces) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  std::random_device rd;
  const auto tmp = dir_ / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"key", key}, {"version", kToolVersion}, {"faces", faces}}.dump() << "\n";
    if (!out) {
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace kr::cli
