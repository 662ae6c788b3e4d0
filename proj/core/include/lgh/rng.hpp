#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lgh {

// Seedable generator used for every stochastic path. std::mt19937_64 has a
// fully specified algorithm, and the 53-bit mapping below avoids
// std::uniform_real_distribution, whose output is not pinned down by the
// standard. Streams are therefore identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t raw() { return gen_(); }

  // Recorded in output manifests so runs can be reproduced exactly.
  static constexpr std::string_view kGeneratorId = "mt19937_64/u53";

 private:
  std::mt19937_64 gen_;
};

// Stateless mix (splitmix64 finalizer) used to derive independent per-point
// seeds from a master seed, so scan results do not depend on worker count
// or execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

}  // namespace lgh
