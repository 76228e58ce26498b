#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "splitpack/geometry.hpp"

namespace splitpack::test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Apex strictly inside the Thales circle over the base keeps the apex angle
// at least 90 degrees; right triangles come from points on the circle.
inline Triangle random_non_acute(std::mt19937_64& rng, bool right = false) {
  const double base = uniform(rng, 0.5, 3.0);
  const double u = uniform(rng, 0.05, 0.95);
  const double cap = base * std::sqrt(u * (1.0 - u));
  const double h = right ? cap : cap * uniform(rng, 0.05, 1.0);
  const Point shift{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
  return Triangle(shift, shift + Point{base, 0.0}, shift + Point{u * base, h});
}

inline std::vector<double> random_areas(std::mt19937_64& rng, std::size_t n, double total) {
  std::vector<double> raw(n);
  double sum = 0.0;
  for (auto& v : raw) {
    // Mix of spreads so some instances have tiny circles next to big ones.
    v = std::exp(uniform(rng, -6.0, 0.0));
    sum += v;
  }
  for (auto& v : raw) v *= total / sum;
  return raw;
}

}  // namespace splitpack::test
