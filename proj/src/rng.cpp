#include "dualvdt/rng.hpp"

#include <cmath>

namespace dualvdt {

double Rng::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top bits keeps the draw unbiased.
  const std::uint64_t limit = bound * (0xFFFFFFFFFFFFFFFFull / bound);
  std::uint64_t v = next_u64();
  while (v >= limit) v = next_u64();
  return v % bound;
}

Rng Rng::fork(std::uint64_t stream) const {
  std::uint64_t z = stream + 0x632BE59BD9B4E019ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  return Rng(seed_ ^ z);
}

}  // namespace dualvdt
