#pragma once

#include <cstdint>
#include <random>

namespace vcwl {

/// mt19937_64 with a portable bounded draw (rejection sampling), so seeded
/// results do not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Sub-seed number `k` of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
  return master + 0x9e3779b97f4a7c15ULL * k;
}

}  // namespace vcwl
