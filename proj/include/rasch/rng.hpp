#pragma once

#include <cstdint>

namespace rasch {

// Splittable counter-style PRNG built on the splitmix64 finalizer.
//
// Child streams are derived by key, not by advancing the parent, so the
// stream of a (user, item) cell or a trial index is the same no matter in
// which order (or on how many threads) the cells are visited.  All state is
// plain uint64 arithmetic, so sequences are identical across platforms.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(mix(seed ^ 0x5851f42d4c957f2dULL)) {}

  // Independent stream keyed by (a, b); does not advance this generator.
  SplitRng child(std::uint64_t a, std::uint64_t b = 0) const {
    std::uint64_t s = mix(state_ ^ mix(a * kGamma + 0xd1b54a32d192ed03ULL));
    return SplitRng(RawState{}, mix(s ^ mix(b * kGamma + 0x8cb92ba72f3d8dd7ULL)));
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  struct RawState {};
  SplitRng(RawState, std::uint64_t state) : state_(state) {}

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace rasch
