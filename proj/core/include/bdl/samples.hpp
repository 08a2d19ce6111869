#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bdl/braid.hpp"
#include "bdl/free_group.hpp"
#include "bdl/laurent.hpp"

namespace bdl::samples {

/// Seeded generator with a portable reduction to ranges (the standard
/// distributions are implementation-defined, which would make fixed-seed
/// suites differ between toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Freely reduced random braid of exactly `length` letters.
BraidWord random_braid(Rng& rng, int n, int length);

/// Freely reduced random word on x_1..x_n of length at most `max_length`.
FreeWord random_free_word(Rng& rng, int n, int max_length);

/// Random Laurent polynomial: every exponent in a box of side span+1 with a
/// random offset in [-span, 0] per variable receives a uniform coefficient
/// in [-max_coeff, max_coeff].
LaurentPoly random_laurent(Rng& rng, int var_count, int span, int max_coeff);

/// Random square matrix of random_laurent entries.
LaurentMatrix random_laurent_matrix(Rng& rng, std::size_t d, int var_count, int span, int max_coeff);

}  // namespace bdl::samples
