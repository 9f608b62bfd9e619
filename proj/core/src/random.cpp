#include "pareto/random.hpp"

#include <cmath>
#include <numbers>

namespace pareto {

std::uint64_t NormalStream::splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double NormalStream::uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t word = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform(seed_, counter_++);
  const double u2 = uniform(seed_, counter_++);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace pareto
