// Seeded RNG wrapper. Distribution sampling is written out explicitly
// (Box-Muller, Fisher-Yates) instead of going through std::*_distribution,
// whose outputs differ between standard library implementations; cached
// datasets and result records are expected to be reproducible bit for bit.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pcdistill/common.hpp"

namespace pcdistill {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1), 53-bit resolution
  real_t uniform() { return static_cast<real_t>(engine_() >> 11) * 0x1.0p-53; }

  real_t uniform(real_t lo, real_t hi) { return lo + (hi - lo) * uniform(); }

  real_t normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    real_t u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const real_t u2 = uniform();
    const real_t r = std::sqrt(-2.0 * std::log(u1));
    const real_t theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // inclusive bounds, rejection sampled to stay unbiased
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw ConfigError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return lo + static_cast<std::int64_t>(r % span);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  // count distinct values from {lo..hi}, order randomized
  std::vector<int> distinct_ints(int count, int lo, int hi) {
    const int span = hi - lo + 1;
    if (count > span) throw ConfigError("distinct_ints: not enough values in range");
    std::vector<int> pool(static_cast<std::size_t>(span));
    for (int i = 0; i < span; ++i) pool[static_cast<std::size_t>(i)] = lo + i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const auto j = static_cast<std::size_t>(uniform_int(i, span - 1));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  real_t spare_ = 0.0;
};

}  // namespace pcdistill
