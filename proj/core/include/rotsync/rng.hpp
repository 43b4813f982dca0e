#pragma once

#include <cstdint>
#include <string_view>

namespace rotsync {

// Deterministic counter-free random source built on splitmix64.
// Child streams derived by name or index are statistically independent of
// the parent and of each other, so e.g. the graph draw does not shift when
// the corruption probability changes.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Derived streams. The parent state is not advanced.
  Rng Stream(std::string_view name) const;
  Rng Stream(uint64_t index) const;

  uint64_t NextU64();
  // Uniform in [0, 1).
  double Uniform();
  // Uniform integer in [0, bound), bound > 0.
  uint64_t UniformInt(uint64_t bound);
  bool Bernoulli(double p);
  // Standard normal via Box-Muller.
  double Normal();

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rotsync
