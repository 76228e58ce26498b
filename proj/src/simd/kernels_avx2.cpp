// Compiled with -mavx2 and without FMA contraction; see kernels.hpp.

#include <immintrin.h>

#include "splitpack/kernels.hpp"

namespace splitpack::simd::detail {

void circle_pair_slack_avx2(double x, double y, double r, const double* xs, const double* ys,
                            const double* rs, std::size_t n, double* out) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d vr = _mm256_set1_pd(r);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d dx = _mm256_sub_pd(vx, _mm256_loadu_pd(xs + k));
    const __m256d dy = _mm256_sub_pd(vy, _mm256_loadu_pd(ys + k));
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d s = _mm256_sub_pd(_mm256_sub_pd(_mm256_sqrt_pd(d2), vr), _mm256_loadu_pd(rs + k));
    _mm256_storeu_pd(out + k, s);
  }
  if (k < n) circle_pair_slack_scalar(x, y, r, xs + k, ys + k, rs + k, n - k, out + k);
}

void disk_in_polygon_slack_avx2(const double* xs, const double* ys, const double* rs,
                                std::size_t n, const HalfPlane* planes, std::size_t m,
                                double* out) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d px = _mm256_loadu_pd(xs + k);
    const __m256d py = _mm256_loadu_pd(ys + k);
    __m256d best = _mm256_set1_pd(HUGE_VAL);
    for (std::size_t e = 0; e < m; ++e) {
      const __m256d v = _mm256_sub_pd(
          _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(planes[e].nx), px),
                        _mm256_mul_pd(_mm256_set1_pd(planes[e].ny), py)),
          _mm256_set1_pd(planes[e].offset));
      // min_pd(a, b) is (a < b ? a : b), matching the scalar reference.
      best = _mm256_min_pd(v, best);
    }
    _mm256_storeu_pd(out + k, _mm256_sub_pd(best, _mm256_loadu_pd(rs + k)));
  }
  if (k < n) disk_in_polygon_slack_scalar(xs + k, ys + k, rs + k, n - k, planes, m, out + k);
}

}  // namespace splitpack::simd::detail
