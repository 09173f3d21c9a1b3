#pragma once

// Shared test helpers: samplers for valid trace triples and random slopes.

#include <cmath>
#include <random>

#include "fricke/curves.hpp"

namespace test_util {

struct Triple {
  double x, y, z;
};

// Uniformly samples a point with x,y,z > 2 and x^2+y^2+z^2-xyz <= 0:
// x free, y above the hyperbola where real z exist, z between the roots.
inline Triple sample_valid_point(std::mt19937_64& rng, double x_max = 8.0) {
  const double x = std::uniform_real_distribution<double>(2.5, x_max)(rng);
  const double y_min = 2 * x / std::sqrt(x * x - 4);
  const double y =
      std::uniform_real_distribution<double>(y_min + 0.05, y_min + 6.0)(rng);
  const double disc = x * x * y * y - 4 * (x * x + y * y);
  const double root = std::sqrt(disc);
  const double z =
      std::uniform_real_distribution<double>((x * y - root) / 2, (x * y + root) / 2)(rng);
  return {x, y, z};
}

inline fricke::Slope sample_slope(std::mt19937_64& rng, long long bound = 50) {
  std::uniform_int_distribution<long long> u(-bound, bound);
  for (;;) {
    const long long p = u(rng), q = u(rng);
    if (p == 0 && q == 0) continue;
    return fricke::Slope(p, q);
  }
}

}  // namespace test_util
