#pragma once

// Data-parallel inner loops of the verifier. Every kernel has a scalar
// reference and, where the CPU allows it, an AVX2 variant that performs the
// same IEEE operations in the same order, so results are bit-identical.

#include <cstddef>
#include <span>
#include <vector>

namespace splitpack::simd {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa) noexcept;

/// Inside of a convex polygon edge: nx * x + ny * y - offset >= 0, with a
/// unit normal.
struct HalfPlane {
  double nx = 0.0;
  double ny = 0.0;
  double offset = 0.0;
};

/// Circles in structure-of-arrays layout.
struct CircleBatch {
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> r;

  std::size_t size() const { return x.size(); }
};

struct Kernels {
  Isa isa;
  // out[k] = sqrt((x - xs[k])^2 + (y - ys[k])^2) - r - rs[k]
  void (*circle_pair_slack)(double x, double y, double r, const double* xs, const double* ys,
                            const double* rs, std::size_t n, double* out);
  // out[k] = min_e (nx_e * xs[k] + ny_e * ys[k] - offset_e) - rs[k]
  void (*disk_in_polygon_slack)(const double* xs, const double* ys, const double* rs,
                                std::size_t n, const HalfPlane* planes, std::size_t m,
                                double* out);
};

bool isa_supported(Isa isa) noexcept;
std::vector<Isa> supported_isas();

/// Kernel table for a specific instruction set; throws if unsupported.
const Kernels& kernels_for(Isa isa);

/// Best supported kernels, unless SPLITPACK_ISA=scalar|avx2 selects one.
const Kernels& active_kernels();

/// Separation slack between circle (x, y, r) and each circle in `others`.
void circle_pair_slack(const Kernels& k, double x, double y, double r, CircleBatch others,
                       std::span<double> out);

/// Containment slack of each circle in the convex polygon given by `planes`.
void disk_in_polygon_slack(const Kernels& k, CircleBatch circles,
                           std::span<const HalfPlane> planes, std::span<double> out);

/// Half-planes of a counterclockwise convex polygon.
template <class PointRange>
std::vector<HalfPlane> polygon_half_planes(const PointRange& ccw);

namespace detail {
void circle_pair_slack_scalar(double x, double y, double r, const double* xs, const double* ys,
                              const double* rs, std::size_t n, double* out);
void disk_in_polygon_slack_scalar(const double* xs, const double* ys, const double* rs,
                                  std::size_t n, const HalfPlane* planes, std::size_t m,
                                  double* out);
#if defined(SPLITPACK_HAVE_AVX2)
void circle_pair_slack_avx2(double x, double y, double r, const double* xs, const double* ys,
                            const double* rs, std::size_t n, double* out);
void disk_in_polygon_slack_avx2(const double* xs, const double* ys, const double* rs,
                                std::size_t n, const HalfPlane* planes, std::size_t m,
                                double* out);
#endif
}  // namespace detail

}  // namespace splitpack::simd

#include <cmath>

namespace splitpack::simd {

template <class PointRange>
std::vector<HalfPlane> polygon_half_planes(const PointRange& ccw) {
  std::vector<HalfPlane> planes;
  const std::size_t n = std::size(ccw);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = ccw[i];
    const auto& b = ccw[(i + 1) % n];
    const double ex = b.x - a.x, ey = b.y - a.y;
    const double len = std::hypot(ex, ey);
    if (len == 0.0) continue;
    const HalfPlane h{-ey / len, ex / len, 0.0};
    planes.push_back({h.nx, h.ny, h.nx * a.x + h.ny * a.y});
  }
  return planes;
}

}  // namespace splitpack::simd
