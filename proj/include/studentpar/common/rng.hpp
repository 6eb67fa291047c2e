#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace studentpar {

// Seeded generator with labelled forking. Each component draws from
// fork("<label>") so reordering components never perturbs another stream.
// Distributions are computed here from raw 64-bit draws rather than through
// <random> distribution objects, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng fork(std::string_view label) const { return Rng(mix(seed_ ^ hash(label))); }
  Rng fork(std::string_view label, std::uint64_t index) const {
    return Rng(mix(mix(seed_ ^ hash(label)) + index));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  double normal();
  double exponential(double rate);

 private:
  static std::uint64_t mix(std::uint64_t x);
  static std::uint64_t hash(std::string_view label);

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace studentpar
