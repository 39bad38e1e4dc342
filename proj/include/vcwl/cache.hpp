#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "vcwl/io.hpp"

namespace vcwl {

std::string sha256_hex(std::string_view data);

/// On-disk store of computed records keyed by a content hash. Entries carry
/// the engine version; a version mismatch, a key mismatch or an unreadable
/// file is a miss. Writers take an exclusive advisory lock and replace
/// entries atomically.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, std::string version = kEngineVersion);

  /// VCWL_CACHE_DIR, else $XDG_CACHE_HOME/vcwl, else $HOME/.cache/vcwl.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }
  const std::string& version() const { return version_; }

  /// Hash of the version tag and the canonical dump of `inputs`.
  std::string key(const Json& inputs) const;
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

 private:
  std::filesystem::path entry_path(const std::string& key) const;

  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace vcwl
