#ifndef ORDMATCH_RNG_HPP
#define ORDMATCH_RNG_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace ordmatch {

// Counter-based splitmix64 generator.
//
// Properties the harness relies on:
//  - fully deterministic: the same (seed, stream) pair always yields the
//    same sequence, on every platform (no std::uniform_* distributions,
//    whose outputs are implementation-defined);
//  - splittable: distinct stream ids give decorrelated sequences, so each
//    Monte-Carlo trial can own an independent stream and the trial loop
//    can run in any order or thread count without changing results.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : state_(mix(mix(seed ^ 0x9e3779b97f4a7c15ull) ^
                   mix(stream ^ 0xd1b54a32d192ed03ull))) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform draw from [0, n). Bitmask rejection keeps it exactly uniform
  // and platform-independent.
  size_t uniform_index(size_t n) {
    assert(n >= 1);
    if (n == 1) return 0;
    uint64_t mask = ~uint64_t{0} >> __builtin_clzll(n - 1);
    for (;;) {
      uint64_t v = next_u64() & mask;
      if (v < n) return static_cast<size_t>(v);
    }
  }

  // Uniform draw from [0, 1), 53 significant bits.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform draw from [lo, hi).
  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

  // Fisher-Yates; every permutation equally likely.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

}  // namespace ordmatch

#endif
