#pragma once

#include <cstdint>
#include <random>

namespace nestrec {

/// Seeded source whose draws depend only on the seed. std::mt19937_64 is
/// fully specified by the standard; the distributions are not, so bounded
/// draws are done here by rejection on the raw engine output.
class SeededSource {
 public:
  explicit SeededSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nestrec
