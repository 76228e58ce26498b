#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "splitpack/kernels.hpp"

namespace splitpack::simd {

namespace {

constexpr Kernels kScalar{Isa::scalar, &detail::circle_pair_slack_scalar,
                          &detail::disk_in_polygon_slack_scalar};
#if defined(SPLITPACK_HAVE_AVX2)
constexpr Kernels kAvx2{Isa::avx2, &detail::circle_pair_slack_avx2,
                        &detail::disk_in_polygon_slack_avx2};
#endif

const Kernels& select_kernels() {
  if (const char* env = std::getenv("SPLITPACK_ISA")) {
    const std::string_view name(env);
    if (name == "scalar") return kScalar;
    if (name == "avx2" && isa_supported(Isa::avx2)) return kernels_for(Isa::avx2);
  }
  if (isa_supported(Isa::avx2)) return kernels_for(Isa::avx2);
  return kScalar;
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(SPLITPACK_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_supported(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

const Kernels& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error(std::string("instruction set not available: ") + to_string(isa));
  }
#if defined(SPLITPACK_HAVE_AVX2)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const Kernels& active_kernels() {
  static const Kernels& selected = select_kernels();
  return selected;
}

void circle_pair_slack(const Kernels& k, double x, double y, double r, CircleBatch others,
                       std::span<double> out) {
  k.circle_pair_slack(x, y, r, others.x.data(), others.y.data(), others.r.data(), others.size(),
                      out.data());
}

void disk_in_polygon_slack(const Kernels& k, CircleBatch circles,
                           std::span<const HalfPlane> planes, std::span<double> out) {
  k.disk_in_polygon_slack(circles.x.data(), circles.y.data(), circles.r.data(), circles.size(),
                          planes.data(), planes.size(), out.data());
}

}  // namespace splitpack::simd
