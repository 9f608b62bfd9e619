#pragma once

#include <cstdint>

namespace pareto {

/// Counter-based standard normal stream, stable across compilers and
/// standard libraries (unlike std::normal_distribution).
///
/// Algorithm "splitmix64-boxmuller/1":
///   word(i)    = splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15)
///   uniform(i) = (word(i) >> 11) * 2^-53                 in [0, 1)
///   normals 2j and 2j+1 come from u1 = 1 - uniform(2j) in (0, 1],
///   u2 = uniform(2j + 1) by Box-Muller:
///     r = sqrt(-2 ln u1); z0 = r cos(2 pi u2); z1 = r sin(2 pi u2)
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : seed_(seed) {}

  double next();

  static std::uint64_t splitmix64(std::uint64_t z);
  static double uniform(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pareto
