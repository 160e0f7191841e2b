#pragma once

#include <cstdint>

namespace dualvdt {

// Counter-based random stream, algorithm id "splitmix64/box-muller:1".
//
// Draw number c is mix64(seed + (c+1) * 0x9E3779B97F4A7C15): the sequence is a
// pure function of (seed, counter), so saving/restoring the counter replays it
// exactly, and identical seeds give identical sequences on any platform with
// IEEE-754 doubles (normal() depends on libm log/cos/sqrt at their documented
// precision).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call
  // (no cached spare, so the state stays a plain counter).
  double normal();

  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Derived independent stream; deterministic in (seed, stream).
  Rng fork(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }
  void set_counter(std::uint64_t c) { counter_ = c; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace dualvdt
