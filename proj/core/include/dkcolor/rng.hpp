#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dkcolor/errors.hpp"

namespace dkc {

// Stage tags used to key per-vertex random streams. Every simulated stage
// draws from streams keyed by (seed, vertex, stage, round, draw index), so
// replaying a stage with the same seed is bit-identical and iterating
// vertices in any order cannot change the outcome.
enum class StageId : std::uint32_t {
  kGenerate = 1,
  kSlackGenPre,
  kSlackGenPost,
  kSplitPre,
  kSplitPost,
  kRctS1,
  kRctS1Post,
  kMctS1,
  kMctS1Post,
  kRctS2,
  kRctS2Post,
  kMctS2,
  kMctS2Post,
  kRctBH,
  kRctBHPost,
  kMctBH,
  kMctBHPost,
  kRctBL,
  kRctBLPost,
  kMctBL,
  kMctBLPost,
  kSctH,
  kSctHPost,
  kSubsampleH,
  kSubsampleHPost,
  kSctL,
  kSctLPost,
  kSubsampleL,
  kSubsampleLPost,
  kTest = 900,
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace detail

// Counter-based deterministic stream. next() depends only on the key it was
// built from plus the number of prior draws; no hidden global state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next() {
    return detail::mix64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_);
  }

  // Uniform in [0,1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Unbiased uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw DomainError("RngStream::below: empty range");
    const std::uint64_t rem = -n % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= rem) return r % n;
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& set) {
    if (set.empty()) throw DomainError("RngStream::pick: empty set");
    return set[below(set.size())];
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

// Private per-node randomness. A stream is derived from the global seed and
// an arbitrary tuple of 64-bit key components (vertex id, stage, round, ...).
class NodeRng {
 public:
  explicit NodeRng(std::uint64_t global_seed) : seed_(global_seed) {}

  std::uint64_t seed() const { return seed_; }

  template <typename... Key>
  RngStream stream(Key... key) const {
    std::uint64_t h = detail::mix64(seed_ ^ 0x8e5bf1c7a3d2f964ULL);
    ((h = detail::mix64(h ^ static_cast<std::uint64_t>(key))), ...);
    return RngStream(h);
  }

  template <typename... Key>
  RngStream stream(std::uint64_t v, StageId stage, Key... key) const {
    return stream(v, static_cast<std::uint64_t>(stage),
                  static_cast<std::uint64_t>(key)...);
  }

 private:
  std::uint64_t seed_;
};

// One deterministic uniform draw over a finite set, keyed by the full tuple.
template <typename T>
const T& draw_uniform(const NodeRng& rng, std::uint64_t v, StageId stage,
                      std::uint64_t round, const std::vector<T>& set) {
  if (set.empty()) throw DomainError("draw_uniform: empty set");
  auto s = rng.stream(v, stage, round);
  return s.pick(set);
}

}  // namespace dkc
