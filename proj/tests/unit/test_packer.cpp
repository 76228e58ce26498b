#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "splitpack/error.hpp"
#include "splitpack/packer.hpp"
#include "splitpack/verifier.hpp"
#include "support.hpp"

using namespace splitpack;
using doctest::Approx;

namespace {

ErrorCode error_of(const PackRequest& request) {
  try {
    pack(request);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("pack() did not throw");
  return ErrorCode::invalid_parameter;
}

std::vector<const PackingNode*> circles_of(const Packing& p) {
  std::vector<const PackingNode*> out;
  for (const auto& n : p.nodes) {
    if (n.is_circle()) out.push_back(&n);
  }
  std::sort(out.begin(), out.end(),
            [](const PackingNode* a, const PackingNode* b) { return a->input_index < b->input_index; });
  return out;
}

const Circle& circle(const PackingNode* n) { return std::get<Circle>(n->shape); }

// Disk of radius s centered at c inside an unrounded triangle.
bool disk_in_triangle(Point c, double s, const Triangle& t, double tol) {
  return signed_distance(c, t) >= s - tol;
}

}  // namespace

TEST_SUITE("packer") {

TEST_CASE("worst case: twincircles in the unit square") {
  const double r = 1.0 / (2.0 + kSqrt2);
  const double each = kPi * r * r;
  const auto result = pack({Square{1.0}, CircleSet::from_areas(std::vector<double>{each, each}), 0.0});
  const auto cs = circles_of(result.packing);
  REQUIRE(cs.size() == 2);
  std::vector<Point> centers{circle(cs[0]).center, circle(cs[1]).center};
  std::sort(centers.begin(), centers.end(), [](Point a, Point b) { return a.x < b.x; });
  CHECK(centers[0].x == Approx(r).epsilon(1e-12));
  CHECK(centers[0].y == Approx(r).epsilon(1e-12));
  CHECK(centers[1].x == Approx(1.0 - r).epsilon(1e-12));
  CHECK(centers[1].y == Approx(1.0 - r).epsilon(1e-12));
  const auto report = verify(result.packing, 1e-9);
  CHECK(report.passed);
  CHECK(std::abs(report.worst_slack) <= 1e-9);
}

TEST_CASE("a single circle at full capacity touches the corner sides") {
  const double phi = critical_density(Square{1.0});
  const auto result = pack({Square{1.0}, CircleSet::from_areas(std::vector<double>{phi}), 0.0});
  const auto cs = circles_of(result.packing);
  REQUIRE(cs.size() == 1);
  CHECK(circle(cs[0]).center.x == Approx(kSqrt2 - 1.0).epsilon(1e-12));
  CHECK(circle(cs[0]).center.y == Approx(kSqrt2 - 1.0).epsilon(1e-12));
  CHECK(circle(cs[0]).radius == Approx(kSqrt2 - 1.0).epsilon(1e-12));
  CHECK(result.packing.hat_count() == 0);
  CHECK(verify(result.packing, 1e-9).passed);
}

TEST_CASE("3-4-5 triangle: the circles are the altitude-half incircles") {
  const Triangle t = Triangle::from_sides(3, 4, 5);
  const auto result =
      pack({t, CircleSet::from_areas(std::vector<double>{9 * kPi / 25, 16 * kPi / 25}), 0.0});
  const auto f = t.canonical_frame();
  for (const PackingNode* n : circles_of(result.packing)) {
    const Circle& c = circle(n);
    // Tangent to the base and to the altitude through the apex.
    CHECK(std::abs(cross(f.right - f.left, c.center - f.left)) / distance(f.left, f.right) ==
          Approx(c.radius).epsilon(1e-12));
    CHECK(std::abs(cross(f.apex - f.foot, c.center - f.foot)) / distance(f.foot, f.apex) ==
          Approx(c.radius).epsilon(1e-12));
  }
  CHECK(verify(result.packing, 1e-9).passed);
}

TEST_CASE("hats in a square") {
  const Square sq{1.0};
  const double a = critical_area(sq);
  SUBCASE("equal halves are the half squares") {
    const HatPair h = place_hats_in_square(sq, {a / 2, 0}, {a / 2, 0});
    REQUIRE(h.first);
    REQUIRE(h.second);
    CHECK(h.first->triangle.area() == Approx(0.5).epsilon(1e-12));
    CHECK(h.second->triangle.area() == Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(signed_distance(Point{1.0, 0.0}, h.first->triangle)) < 1e-12);
    CHECK(std::abs(signed_distance(Point{0.0, 1.0}, h.second->triangle)) < 1e-12);
  }
  SUBCASE("empty first group leaves a single rounded hat") {
    const HatPair h = place_hats_in_square(sq, {0, 0}, {a, a});
    CHECK_FALSE(h.first);
    REQUIRE(h.second);
    CHECK(h.second->rounding_radius == Approx(h.second->triangle.inradius()).epsilon(1e-12));
    CHECK(h.second->incircle_area() == Approx(a).epsilon(1e-12));
  }
  SUBCASE("non-conjugated tuples are rejected") {
    CHECK_THROWS_AS(place_hats_in_square(sq, {0.7 * a, 0}, {0.3 * a, 0}), Error);
  }
}

TEST_CASE("the square lemma's explicit conditions hold") {
  // Height sum along the diagonal and the rounded diagonal of the bigger hat.
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const double side = test::uniform(rng, 0.1, 5.0);
    const double a = critical_area(Square{side});
    const double a1 = (i < 1000) ? a / 2.0 * i / 1000.0 : test::uniform(rng, 0.0, a / 2.0);
    const double a2 = a - a1;
    const double h1 = a1 > 0 ? hat_dimensions(a1, 0).height : 0.0;
    CHECK(h1 + hat_dimensions(a2, 0).height <= kSqrt2 * side * (1 + 1e-12));
    CHECK(hat_dimensions(a2, a2 - a1).diagonal <= side * (1 + 1e-12));
  }
}

TEST_CASE("sub-hats in a hat") {
  SUBCASE("3-4-5 at exact key areas reproduces the altitude halves") {
    const Hat c{Triangle::from_sides(3, 4, 5), 0.0};
    const SplitKey key = hat_split_key(c);
    const HatPair h = place_subhats_in_hat(c, key, {key.f1, 0}, {key.f2, 0});
    REQUIRE(h.first);
    REQUIRE(h.second);
    CHECK(h.first->incircle_area() == Approx(key.f1).epsilon(1e-12));
    CHECK(h.second->incircle_area() == Approx(key.f2).epsilon(1e-12));
    CHECK(h.first->triangle.area() + h.second->triangle.area() ==
          Approx(c.triangle.area()).epsilon(1e-12));
  }
  SUBCASE("right isosceles halves") {
    const Hat c{Triangle::from_sides(1, 1, kSqrt2), 0.0};
    const double a = c.incircle_area();
    const HatPair h = place_subhats_in_hat(c, hat_split_key(c), {a / 2, 0}, {a / 2, 0});
    CHECK(h.first->triangle.area() == Approx(0.25).epsilon(1e-12));
    CHECK(h.second->triangle.area() == Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("an oversized child pokes past the apex but its rounding stays inside") {
    // Legs 2 + sqrt(2) give inradius 1.
    const double leg = 2.0 + kSqrt2;
    const Hat c{Triangle::from_sides(leg, leg, leg * kSqrt2), 0.0};
    REQUIRE(c.incircle_area() == Approx(kPi).epsilon(1e-12));
    const SplitKey key = hat_split_key(c);
    const AreaPair g1{0.3 * kPi, 0.0}, g2{0.7 * kPi, 0.4 * kPi};
    const HatPair h = place_subhats_in_hat(c, key, g1, g2);
    REQUIRE(h.second);
    // The unrounded child triangle reaches beyond the container's apex...
    bool outside = false;
    for (Point p : h.second->triangle.vertices()) outside |= signed_distance(p, c.triangle) < -1e-9;
    CHECK(outside);
    // ...but every corner disk is inside.
    for (Point p : h.second->corner_centers()) {
      CHECK(disk_in_triangle(p, h.second->rounding_radius, c.triangle, 1e-12));
    }
  }
}

TEST_CASE("circle in hat") {
  const Hat c{Triangle::from_sides(3, 4, 5), 0.0};
  const Circle full = place_circle_in_hat(c, kPi);
  CHECK(full.radius == Approx(1.0).epsilon(1e-14));
  CHECK(distance(full.center, c.triangle.incenter()) < 1e-14);
  const Circle half = place_circle_in_hat(c, kPi / 2);
  CHECK(signed_distance(half.center, c.triangle) > half.radius);
  CHECK_THROWS_AS(place_circle_in_hat(c, 1.1 * kPi), Error);
}

TEST_CASE("minimal containers") {
  const Container sq = min_container(CircleSet::from_areas(std::vector<double>{kPi}), Square{1.0});
  CHECK(std::get<Square>(sq).side == Approx(1.0 + kSqrt2).epsilon(1e-12));
  CHECK(container_area(sq) / 4.0 == Approx(1.4571067811865475).epsilon(1e-12));

  const double phi = critical_density(Square{1.0});
  const Container unit = min_container(CircleSet::from_areas(std::vector<double>{phi / 3, 2 * phi / 3}),
                                       Square{7.0});
  CHECK(std::get<Square>(unit).side == Approx(1.0).epsilon(1e-12));

  const Container tri = min_container(CircleSet::from_areas(std::vector<double>{2.0}),
                                      Triangle::from_sides(3, 4, 5));
  const Triangle& t = std::get<Triangle>(tri);
  CHECK(triangle_incircle(t).area() == Approx(2.0).epsilon(1e-12));
  CHECK(t.edge_length(0) / t.edge_length(1) ==
        Approx(Triangle::from_sides(3, 4, 5).edge_length(0) /
               Triangle::from_sides(3, 4, 5).edge_length(1)).epsilon(1e-12));
}

TEST_CASE("request validation") {
  const double phi = critical_density(Square{1.0});
  CHECK(error_of({Square{1.0}, CircleSet::from_areas(std::vector<double>{0.3, 0.3}), 0.0}) ==
        ErrorCode::over_capacity);
  CHECK(error_of({Square{1.0}, CircleSet::from_areas(std::vector<double>{0.1, 0.01}), 0.05}) ==
        ErrorCode::min_size_violation);
  CHECK(error_of({Triangle::from_sides(1, 1, 1), CircleSet::from_areas(std::vector<double>{0.01}),
                  0.0}) == ErrorCode::unsupported_container);
  CHECK(error_of({Square{0.0}, CircleSet{}, 0.0}) == ErrorCode::invalid_parameter);
  // Exactly at capacity is accepted.
  CHECK_NOTHROW(pack({Square{1.0}, CircleSet::from_areas(std::vector<double>{phi / 2, phi / 2}), 0.0}));
}

TEST_CASE("empty input gives a bare container") {
  const auto result = pack({Square{1.0}, CircleSet{}, 0.0});
  CHECK(result.packing.nodes.size() == 1);
  CHECK(verify(result.packing, 1e-9).passed);
}

TEST_CASE("random instances: completeness, counts and verification") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 600; ++i) {
    const Container container =
        i % 2 == 0 ? Container{Square{test::uniform(rng, 0.2, 5.0)}}
                   : Container{test::random_non_acute(rng, i % 6 == 1)};
    const auto n = static_cast<std::size_t>(1 + rng() % 120);
    const double total = critical_area(container) * test::uniform(rng, 0.01, 1.0);
    const auto areas = test::random_areas(rng, n, total);
    const auto result = pack({container, CircleSet::from_areas(areas), 0.0});
    const Packing& p = result.packing;

    REQUIRE(p.circle_count() == n);
    for (const PackingNode* c : circles_of(p)) {
      REQUIRE(c->input_area == areas[static_cast<std::size_t>(c->input_index)]);
      REQUIRE(circle(c).area() == Approx(c->input_area).epsilon(1e-12));
    }
    CHECK(p.hat_count() <= 2 * n - 2);
    CHECK(result.stats.split_invocations == n - 1);
    CHECK(result.stats.element_moves <= n * (n + 1) / 2);
    const auto report = verify(p, default_tolerance(p), VerifyOptions{false});
    CHECK(report.passed);
  }
}

TEST_CASE("worst-case instances with a minimum size") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const Container container =
        i % 2 == 0 ? Container{Square{1.0}} : Container{test::random_non_acute(rng)};
    const auto n = static_cast<std::size_t>(2 + rng() % 30);
    auto areas = test::random_areas(rng, n, critical_area(container));
    const double b = *std::min_element(areas.begin(), areas.end());
    const auto result = pack({container, CircleSet::from_areas(areas), b});
    CHECK(verify(result.packing, default_tolerance(result.packing)).passed);
  }
}

TEST_CASE("scaling the instance scales the packing") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    const double k = test::uniform(rng, 0.1, 10.0);
    const bool square = i % 2 == 0;
    const Triangle t = test::random_non_acute(rng);
    const Container small = square ? Container{Square{1.0}} : Container{t};
    const Container large =
        square ? Container{Square{k}} : Container{t.scaled_about(Point{}, k)};
    const auto n = static_cast<std::size_t>(1 + rng() % 50);
    const auto areas = test::random_areas(rng, n, critical_area(small) * 0.9);
    std::vector<double> scaled;
    for (double a : areas) scaled.push_back(a * k * k);
    const auto pa = pack({small, CircleSet::from_areas(areas), 0.0});
    const auto pb = pack({large, CircleSet::from_areas(scaled), 0.0});
    const auto a = circles_of(pa.packing);
    const auto b = circles_of(pb.packing);
    REQUIRE(a.size() == b.size());
    const double size = std::sqrt(container_area(large));
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(std::abs(k * circle(a[j]).center.x - circle(b[j]).center.x) <= 1e-12 * size);
      CHECK(std::abs(k * circle(a[j]).center.y - circle(b[j]).center.y) <= 1e-12 * size);
      CHECK(circle(b[j]).radius == Approx(k * circle(a[j]).radius).epsilon(1e-12));
    }
  }
}

TEST_CASE("powers of two subdivide self-similarly") {
  for (int k = 1; k <= 6; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const Square sq{1.0};
    const std::vector<double> areas(n, critical_area(sq) / static_cast<double>(n));
    const auto result = pack({sq, CircleSet::from_areas(areas), 0.0});
    const Packing& p = result.packing;
    CHECK(p.hat_count() == 2 * n - 2);
    for (const auto& node : p.nodes) {
      if (!node.is_hat()) continue;
      const auto& parent = p.nodes[static_cast<std::size_t>(node.parent)];
      const double parent_area = parent.is_hat() ? std::get<Hat>(parent.shape).triangle.area()
                                                 : sq.area();
      // Every child triangle is exactly half its parent: scale factor 1.
      CHECK(std::get<Hat>(node.shape).triangle.area() ==
            Approx(parent_area / 2.0).epsilon(1e-12));
    }
    CHECK(verify(p, 1e-9).passed);
  }
}

}  // TEST_SUITE
