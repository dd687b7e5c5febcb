#include "wittkit/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace wittkit {

namespace fs = std::filesystem;

namespace {
std::mutex g_mu;
std::string g_dir;
std::atomic<uint64_t> g_tmp_counter{0};

fs::path key_path(const std::string& key) {
  fs::path p(g_dir);
  for (char c : key) {
    if (!(std::isalnum((unsigned char)c) || c == '-' || c == '_' || c == '.' || c == '/'))
      return {};
  }
  return p / (key + ".json");
}
}  // namespace

void set_cache_dir(const std::string& dir) {
  std::lock_guard lk(g_mu);
  g_dir = dir;
}

std::string cache_dir() {
  std::lock_guard lk(g_mu);
  return g_dir;
}

std::optional<std::string> cache_get(const std::string& key) {
  std::lock_guard lk(g_mu);
  if (g_dir.empty()) return std::nullopt;
  fs::path p = key_path(key);
  if (p.empty()) return std::nullopt;
  std::error_code ec;
  if (!fs::exists(p, ec) || ec) return std::nullopt;
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cache_put(const std::string& key, const std::string& payload) {
  std::lock_guard lk(g_mu);
  if (g_dir.empty()) return;
  fs::path p = key_path(key);
  if (p.empty()) return;
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  if (ec) return;
  fs::path tmp = p;
  tmp += ".tmp" + std::to_string(g_tmp_counter.fetch_add(1)) + "." +
         std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << payload;
    if (!out.good()) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, p, ec);  // atomic replacement; last complete write wins
  if (ec) fs::remove(tmp, ec);
}

}  // namespace wittkit
