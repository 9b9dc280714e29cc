#pragma once

#include <random>

#include "octeig/octonion.hpp"

namespace octeig::test {

inline Octonion random_octonion(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  Octonion o;
  for (int k = 0; k < kOctDim; ++k) o[k] = d(rng);
  return o;
}

inline Octonion random_integer_octonion(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Octonion o;
  for (int k = 0; k < kOctDim; ++k) o[k] = d(rng);
  return o;
}

}  // namespace octeig::test
