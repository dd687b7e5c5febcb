#pragma once

#include <optional>
#include <string>

namespace wittkit {

/// Process-global cache directory; empty string disables caching. The
/// harness points this at --cache-dir / WITTKIT_CACHE.
void set_cache_dir(const std::string& dir);
std::string cache_dir();

/// Key -> file lookup. Keys are slash-namespaced ("witt-polys/p3-n2-v1");
/// entries are whole files replaced atomically (temp + rename), so readers
/// never see partial payloads. Corrupted or unreadable entries surface as
/// misses; callers always fall back to recomputation.
std::optional<std::string> cache_get(const std::string& key);
void cache_put(const std::string& key, const std::string& payload);

}  // namespace wittkit
