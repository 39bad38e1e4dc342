#include "vcwl/cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vcwl/error.hpp"

namespace vcwl {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

/// flock on <dir>/.lock for the lifetime of the object.
class DirLock {
 public:
  DirLock(const std::filesystem::path& dir, int op) {
    fd_ = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ >= 0 && ::flock(fd_, op) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~DirLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;
  bool held() const { return fd_ >= 0; }

 private:
  int fd_ = -1;
};

}  // namespace

Cache::Cache(std::filesystem::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

std::filesystem::path Cache::default_directory() {
  if (const char* env = std::getenv("VCWL_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "vcwl";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "vcwl";
  return std::filesystem::temp_directory_path() / "vcwl-cache";
}

std::string Cache::key(const Json& inputs) const { return sha256_hex(version_ + "\n" + inputs.dump()); }

std::filesystem::path Cache::entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<Json> Cache::load(const std::string& key) const {
  std::error_code ec;
  if (!std::filesystem::exists(entry_path(key), ec)) return std::nullopt;
  DirLock lock(dir_, LOCK_SH);
  std::ifstream in(entry_path(key));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  auto entry = Json::parse(buf.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (!entry.contains("version") || !entry.contains("key") || !entry.contains("payload")) return std::nullopt;
  if (entry["version"] != version_ || entry["key"] != key) return std::nullopt;
  return entry["payload"];
}

void Cache::store(const std::string& key, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  DirLock lock(dir_, LOCK_EX);
  if (!lock.held()) return;
  auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << Json{{"version", version_}, {"key", key}, {"payload", payload}}.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, entry_path(key), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace vcwl
