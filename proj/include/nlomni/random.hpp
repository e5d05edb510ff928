#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "nlomni/scalar.hpp"

namespace nlomni {

/// Reproducible draws. Only mt19937_64 output (fully specified by the
/// standard) is used, so sequences are identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Derives an independent stream for a named consumer.
  SeededRng(std::uint64_t seed, std::string_view stream);

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return (engine_() >> 63) != 0; }
  /// Integer coefficient in [-3, 3].
  Scalar coefficient() { return uniform(-3, 3); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nlomni
