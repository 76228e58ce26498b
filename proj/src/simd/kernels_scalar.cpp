#include <cmath>

#include "splitpack/kernels.hpp"

namespace splitpack::simd::detail {

void circle_pair_slack_scalar(double x, double y, double r, const double* xs, const double* ys,
                              const double* rs, std::size_t n, double* out) {
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = x - xs[k];
    const double dy = y - ys[k];
    out[k] = std::sqrt(dx * dx + dy * dy) - r - rs[k];
  }
}

void disk_in_polygon_slack_scalar(const double* xs, const double* ys, const double* rs,
                                  std::size_t n, const HalfPlane* planes, std::size_t m,
                                  double* out) {
  for (std::size_t k = 0; k < n; ++k) {
    double best = HUGE_VAL;
    for (std::size_t e = 0; e < m; ++e) {
      const double v = planes[e].nx * xs[k] + planes[e].ny * ys[k] - planes[e].offset;
      best = v < best ? v : best;
    }
    out[k] = best - rs[k];
  }
}

}  // namespace splitpack::simd::detail
