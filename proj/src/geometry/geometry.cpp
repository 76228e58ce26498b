#include "splitpack/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "splitpack/error.hpp"

namespace splitpack {

namespace {

bool all_finite(const std::array<Point, 3>& v) {
  return std::all_of(v.begin(), v.end(), [](Point p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
  });
}

// Kahan's numerically stable Heron formula.
double heron_area(double x, double y, double z) {
  std::array<double, 3> s{x, y, z};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double a = s[0], b = s[1], c = s[2];
  const double p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(p, 0.0));
}

void require_sides(double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0) || !std::isfinite(x) || !std::isfinite(y) ||
      !std::isfinite(z)) {
    throw Error(ErrorCode::invalid_parameter, "triangle side lengths must be positive");
  }
  const double longest = std::max({x, y, z});
  if (longest >= (x + y + z) - longest) {
    throw Error(ErrorCode::invalid_parameter,
                "side lengths violate the strict triangle inequality");
  }
}

double apex_angle_from_sides(double x, double y, double z) {
  std::array<double, 3> s{x, y, z};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double c = (s[1] * s[1] + s[2] * s[2] - s[0] * s[0]) / (2.0 * s[1] * s[2]);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

std::array<Point, 4> Square::corners() const {
  return {origin, origin + Point{side, 0.0}, origin + Point{side, side},
          origin + Point{0.0, side}};
}

Triangle::Triangle(const std::array<Point, 3>& vertices) : vertices_(vertices) {
  if (!all_finite(vertices_)) {
    throw Error(ErrorCode::invalid_parameter, "triangle vertices must be finite");
  }
  const double twice_area = cross(vertices_[1] - vertices_[0], vertices_[2] - vertices_[0]);
  const double scale = std::max({edge_length(0), edge_length(1), edge_length(2)});
  if (!(std::abs(twice_area) > 1e-14 * scale * scale)) {
    throw Error(ErrorCode::invalid_parameter, "degenerate triangle");
  }
  if (twice_area < 0.0) std::swap(vertices_[1], vertices_[2]);
}

Triangle Triangle::from_sides(double x, double y, double z) {
  require_sides(x, y, z);
  std::array<double, 3> s{x, y, z};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double base = s[0], left = s[1], right = s[2];
  const double px = (base * base + left * left - right * right) / (2.0 * base);
  const double py = 2.0 * heron_area(base, left, right) / base;
  return Triangle(Point{0.0, 0.0}, Point{base, 0.0}, Point{px, py});
}

double Triangle::edge_length(std::size_t i) const {
  return distance(vertices_[i % 3], vertices_[(i + 1) % 3]);
}

double Triangle::area() const {
  return heron_area(edge_length(0), edge_length(1), edge_length(2));
}

double Triangle::perimeter() const { return edge_length(0) + edge_length(1) + edge_length(2); }

double Triangle::inradius() const { return 2.0 * area() / perimeter(); }

Point Triangle::incenter() const {
  // Vertex weights are the lengths of the opposite sides.
  const double wa = edge_length(1), wb = edge_length(2), wc = edge_length(0);
  const double total = wa + wb + wc;
  return Point{(wa * vertices_[0].x + wb * vertices_[1].x + wc * vertices_[2].x) / total,
               (wa * vertices_[0].y + wb * vertices_[1].y + wc * vertices_[2].y) / total};
}

double Triangle::apex_angle() const {
  return apex_angle_from_sides(edge_length(0), edge_length(1), edge_length(2));
}

CanonicalFrame Triangle::canonical_frame() const {
  std::size_t base = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (edge_length(i) > edge_length(base)) base = i;
  }
  CanonicalFrame f{vertices_[base], vertices_[(base + 1) % 3], vertices_[(base + 2) % 3], {}};
  const Point dir = f.right - f.left;
  const double t = dot(f.apex - f.left, dir) / dot(dir, dir);
  f.foot = f.left + t * dir;
  return f;
}

Triangle Triangle::canonical() const {
  const CanonicalFrame f = canonical_frame();
  return Triangle(f.left, f.right, f.apex);
}

Triangle Triangle::scaled_about(Point center, double factor) const {
  std::array<Point, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = center + factor * (vertices_[i] - center);
  return Triangle(v);
}

std::array<Point, 3> Hat::corner_centers() const {
  const Point center = triangle.incenter();
  const double rho = triangle.inradius();
  const double k = std::max(0.0, (rho - rounding_radius) / rho);
  std::array<Point, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = center + k * (triangle[i] - center);
  return out;
}

std::vector<Point> Hat::boundary(int arc_segments) const {
  const auto& v = triangle.vertices();
  if (rounding_radius <= 0.0) return {v.begin(), v.end()};
  const auto centers = corner_centers();
  std::vector<Point> out;
  out.reserve(3 * static_cast<std::size_t>(arc_segments + 1));
  for (std::size_t i = 0; i < 3; ++i) {
    const Point in = v[i] - v[(i + 2) % 3];
    const Point outgoing = v[(i + 1) % 3] - v[i];
    // Outward normals of a counterclockwise polygon point to the right.
    const double start = std::atan2(-in.x, in.y);
    double end = std::atan2(-outgoing.x, outgoing.y);
    while (end < start) end += 2.0 * kPi;
    for (int k = 0; k <= arc_segments; ++k) {
      const double theta = start + (end - start) * k / arc_segments;
      out.push_back(centers[i] + rounding_radius * Point{std::cos(theta), std::sin(theta)});
    }
  }
  return out;
}

HatDimensions hat_dimensions(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0) || b > a || !std::isfinite(a)) {
    throw Error(ErrorCode::invalid_parameter, "hat dimensions need 0 <= b <= a and a > 0");
  }
  const double r = radius_of_area(a);
  const double s = radius_of_area(b);
  HatDimensions d;
  d.height = r * (1.0 + kSqrt2);
  d.width = r * (2.0 + 2.0 * kSqrt2) - s * 2.0 * kSqrt2;
  d.diagonal = r * (2.0 + kSqrt2) - s * kSqrt2;
  d.corner_width = d.width + s * kSqrt2;
  d.corner_diagonal = r * (2.0 + kSqrt2);
  return d;
}

Circle triangle_incircle(const Triangle& t) { return Circle{t.incenter(), t.inradius()}; }

std::pair<Circle, Circle> square_twincircles(double side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw Error(ErrorCode::invalid_parameter, "square side must be positive");
  }
  const double r = side / (2.0 + kSqrt2);
  return {Circle{{r, r}, r}, Circle{{side - r, side - r}, r}};
}

double critical_density(const Square&) { return kPi / (3.0 + 2.0 * kSqrt2); }

double critical_density(const Triangle& triangle) {
  return critical_density_from_sides(triangle.edge_length(0), triangle.edge_length(1),
                                     triangle.edge_length(2));
}

double critical_density(const Container& container) {
  return std::visit([](const auto& c) { return critical_density(c); }, container);
}

double critical_density_from_sides(double x, double y, double z) {
  require_sides(x, y, z);
  if (apex_angle_from_sides(x, y, z) < kRightAngleThreshold) {
    throw Error(ErrorCode::unsupported_container, "acute triangles are not supported");
  }
  const double p = x + y + z;
  return kPi * std::sqrt((x + y - z) * (z + x - y) * (y + z - x) / (p * p * p));
}

double critical_area(const Container& container) {
  if (const auto* sq = std::get_if<Square>(&container)) {
    return critical_density(*sq) * sq->area();
  }
  const auto& t = std::get<Triangle>(container);
  if (!t.is_non_acute()) {
    throw Error(ErrorCode::unsupported_container, "acute triangles are not supported");
  }
  return area_of_radius(t.inradius());
}

double container_area(const Container& container) {
  return std::visit([](const auto& c) { return c.area(); }, container);
}

double container_diameter(const Container& container) {
  if (const auto* sq = std::get_if<Square>(&container)) return sq->side * kSqrt2;
  const auto& t = std::get<Triangle>(container);
  return std::max({t.edge_length(0), t.edge_length(1), t.edge_length(2)});
}

std::vector<Point> container_polygon(const Container& container) {
  if (const auto* sq = std::get_if<Square>(&container)) {
    const auto c = sq->corners();
    return {c.begin(), c.end()};
  }
  const auto& v = std::get<Triangle>(container).vertices();
  return {v.begin(), v.end()};
}

SplitKey hat_split_key(const Hat& hat) {
  if (!hat.triangle.is_non_acute()) {
    throw Error(ErrorCode::unsupported_container, "split key needs a non-acute triangle");
  }
  const CanonicalFrame f = hat.triangle.canonical_frame();
  const Triangle left_half(f.left, f.foot, f.apex);
  const Triangle right_half(f.foot, f.right, f.apex);
  return SplitKey{area_of_radius(left_half.inradius()), area_of_radius(right_half.inradius())};
}

double segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double segment_segment_distance(Point a, Point b, Point c, Point d) {
  // Orientation signs are noise for (nearly) collinear segments, so only
  // solve for a crossing when the directions are clearly apart; near-parallel
  // crossings are caught by the endpoint distances below.
  const Point ab = b - a, cd = d - c;
  const double denom = cross(ab, cd);
  if (std::abs(denom) > 1e-12 * norm(ab) * norm(cd)) {
    const double t = cross(c - a, cd) / denom;
    const double u = cross(c - a, ab) / denom;
    if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) return 0.0;
  }
  return std::min({segment_distance(a, c, d), segment_distance(b, c, d),
                   segment_distance(c, a, b), segment_distance(d, a, b)});
}

double signed_distance(Point p, const Triangle& t) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    const Point a = t[i];
    const Point edge = t[(i + 1) % 3] - a;
    best = std::min(best, cross(edge, p - a) / norm(edge));
  }
  return best;
}

double signed_distance(Point p, std::span<const Point> poly) {
  const std::size_t n = poly.size();
  if (n == 0) return -std::numeric_limits<double>::infinity();
  if (n == 1) return -distance(p, poly[0]);
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(poly[i], poly[(i + 1) % n]);
  if (n >= 3 && twice_area > 0.0) {
    double inside = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const Point edge = poly[(i + 1) % n] - poly[i];
      const double len = norm(edge);
      if (len == 0.0) continue;
      inside = std::min(inside, cross(edge, p - poly[i]) / len);
    }
    if (inside >= 0.0) return inside;
  }
  double outside = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    outside = std::min(outside, segment_distance(p, poly[i], poly[(i + 1) % n]));
  }
  return -outside;
}

double convex_polygon_distance(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  if (signed_distance(a[0], b) >= 0.0 || signed_distance(b[0], a) >= 0.0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point a0 = a[i], a1 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, segment_segment_distance(a0, a1, b[j], b[(j + 1) % b.size()]));
      if (best == 0.0) return 0.0;
    }
  }
  return best;
}

}  // namespace splitpack
