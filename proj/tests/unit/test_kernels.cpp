#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "splitpack/kernels.hpp"

using namespace splitpack;
using namespace splitpack::simd;

namespace {

struct Pt {
  double x, y;
};

struct Batch {
  std::vector<double> x, y, r;
  CircleBatch view() const { return {x, y, r}; }
};

Batch random_batch(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> pos(-10.0, 10.0), rad(0.0, 2.0);
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    b.x.push_back(pos(rng));
    b.y.push_back(pos(rng));
    b.r.push_back(rad(rng));
  }
  return b;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernels against hand values") {
  const Kernels& k = kernels_for(Isa::scalar);
  const std::vector<double> xs{3.0, 0.0}, ys{4.0, 0.0}, rs{1.0, 0.5};
  std::vector<double> out(2);
  circle_pair_slack(k, 0.0, 0.0, 1.0, {xs, ys, rs}, out);
  CHECK(out[0] == 3.0);   // 5 - 1 - 1
  CHECK(out[1] == -1.5);  // coincident centers

  const std::vector<Pt> square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  const auto planes = polygon_half_planes(square);
  REQUIRE(planes.size() == 4);
  const std::vector<double> px{1.0, 0.25, 3.0}, py{1.0, 1.0, 1.0}, pr{0.5, 0.5, 0.1};
  std::vector<double> slack(3);
  disk_in_polygon_slack(k, {px, py, pr}, planes, slack);
  CHECK(slack[0] == doctest::Approx(0.5));
  CHECK(slack[1] == doctest::Approx(-0.25));
  CHECK(slack[2] == doctest::Approx(-1.1));
}

TEST_CASE("scalar is always available and listed first") {
  CHECK(isa_supported(Isa::scalar));
  const auto isas = supported_isas();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == Isa::scalar);
  CHECK(std::string(to_string(Isa::avx2)) == "avx2");
}

TEST_CASE("every supported ISA matches scalar bit for bit") {
  std::mt19937_64 rng(51);
  const Kernels& ref = kernels_for(Isa::scalar);
  for (Isa isa : supported_isas()) {
    if (isa == Isa::scalar) continue;
    MESSAGE("comparing scalar with " << to_string(isa));
    const Kernels& k = kernels_for(isa);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 257u, 1000u}) {
      const Batch b = random_batch(rng, n);
      std::vector<double> want(n), got(n);
      circle_pair_slack(ref, 0.5, -0.25, 0.75, b.view(), want);
      circle_pair_slack(k, 0.5, -0.25, 0.75, b.view(), got);
      CHECK(bit_equal(want, got));

      for (std::size_t m : {1u, 3u, 4u, 5u}) {
        std::vector<Pt> poly;
        for (std::size_t e = 0; e < m + 2; ++e) {
          const double t = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m + 2);
          poly.push_back({5.0 * std::cos(t), 5.0 * std::sin(t)});
        }
        const auto planes = polygon_half_planes(poly);
        disk_in_polygon_slack(ref, b.view(), planes, want);
        disk_in_polygon_slack(k, b.view(), planes, got);
        CHECK(bit_equal(want, got));
      }
    }
  }
}

TEST_CASE("unsupported ISA requests throw") {
  if (!isa_supported(Isa::avx2)) {
    CHECK_THROWS(kernels_for(Isa::avx2));
  } else {
    CHECK(kernels_for(Isa::avx2).isa == Isa::avx2);
  }
  CHECK(isa_supported(active_kernels().isa));
}

}  // TEST_SUITE
