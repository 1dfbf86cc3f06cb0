#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pcm::detail {

// Uniform draws with a fixed bit mapping, so seeded output is identical
// across standard library implementations.

inline double unit_interval(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * unit_interval(gen);
}

inline double log_uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::exp(uniform(gen, std::log(lo), std::log(hi)));
}

inline int uniform_index(std::mt19937_64& gen, int n) {
  return static_cast<int>(gen() % static_cast<std::uint64_t>(n));
}

}  // namespace pcm::detail
