#pragma once

// Closed-form constructions for Split Packing: hats, incircles, twincircles,
// split keys, critical densities, and the convex-distance primitives the
// verifier builds on.

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace splitpack {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Apex angles at or above this count as non-acute.
inline constexpr double kRightAngleThreshold = kPi / 2.0 - 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Radius of the circle with the given area.
inline double radius_of_area(double area) { return std::sqrt(area / kPi); }
inline double area_of_radius(double radius) { return kPi * radius * radius; }

struct Circle {
  Point center;
  double radius = 0.0;

  double area() const { return area_of_radius(radius); }
};

/// Axis-aligned square with its lower-left corner at `origin`.
struct Square {
  double side = 1.0;
  Point origin{};

  double area() const { return side * side; }
  /// Corners in counterclockwise order starting at the origin.
  std::array<Point, 4> corners() const;
};

/// Base, apex and altitude foot of a triangle whose base is its longest side.
/// `left`, `right`, `apex` are in counterclockwise order.
struct CanonicalFrame {
  Point left;
  Point right;
  Point apex;
  Point foot;
};

/// Triangle with positive area. Vertices are stored counterclockwise; a
/// clockwise input is reversed.
class Triangle {
 public:
  explicit Triangle(const std::array<Point, 3>& vertices);
  Triangle(Point a, Point b, Point c) : Triangle(std::array<Point, 3>{a, b, c}) {}

  /// Builds the triangle with side lengths x, y, z in the canonical frame:
  /// the longest side is the base from the origin along +x, the longer of
  /// the two remaining sides is the left leg.
  static Triangle from_sides(double x, double y, double z);

  const std::array<Point, 3>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  /// Length of the edge from vertex i to vertex i+1.
  double edge_length(std::size_t i) const;
  double area() const;
  double perimeter() const;
  double inradius() const;
  Point incenter() const;
  /// Largest interior angle.
  double apex_angle() const;
  bool is_non_acute() const { return apex_angle() >= kRightAngleThreshold; }

  CanonicalFrame canonical_frame() const;
  /// Same triangle with vertices rotated so that vertex 0 -> vertex 1 is the
  /// longest edge.
  Triangle canonical() const;

  /// Image under p -> center + factor * (p - center).
  Triangle scaled_about(Point center, double factor) const;

 private:
  std::array<Point, 3> vertices_;
};

/// Non-acute triangle whose corners are rounded to `rounding_radius`.
struct Hat {
  Triangle triangle;
  double rounding_radius = 0.0;

  double incircle_area() const { return area_of_radius(triangle.inradius()); }
  double rounding_area() const { return area_of_radius(rounding_radius); }

  /// Centers of the three corner disks: the triangle shrunk inward by the
  /// rounding radius. The hat is the convex hull of the disks.
  std::array<Point, 3> corner_centers() const;

  /// Closed boundary polyline, `arc_segments` segments per rounded corner.
  std::vector<Point> boundary(int arc_segments = 8) const;
};

struct HatDimensions {
  double height = 0.0;
  double width = 0.0;
  double diagonal = 0.0;
  double corner_width = 0.0;
  double corner_diagonal = 0.0;
};

struct SplitKey {
  double f1 = 1.0;
  double f2 = 1.0;
};

using Container = std::variant<Square, Triangle>;

/// Measures of a right isosceles hat with incircle area `a`, rounding area `b`.
HatDimensions hat_dimensions(double a, double b);

Circle triangle_incircle(const Triangle& t);

/// The two largest equal circles in the square [0, side]^2, lower-left first.
std::pair<Circle, Circle> square_twincircles(double side);

/// Fraction of the container's area that always packs.
double critical_density(const Square& square);
double critical_density(const Triangle& triangle);
double critical_density(const Container& container);
/// Closed form from side lengths; requires a non-acute triangle.
double critical_density_from_sides(double x, double y, double z);

/// Largest combined circle area that always packs into the container.
double critical_area(const Container& container);
double container_area(const Container& container);
/// Longest distance between two points of the container.
double container_diameter(const Container& container);
/// Counterclockwise outline of the container.
std::vector<Point> container_polygon(const Container& container);

/// Incircle areas of the two altitude halves of the hat's triangle, left
/// half first.
SplitKey hat_split_key(const Hat& hat);

/// Distance from `p` to segment [a, b].
double segment_distance(Point p, Point a, Point b);
/// Distance between segments [a, b] and [c, d].
double segment_segment_distance(Point a, Point b, Point c, Point d);

/// Minimum inward distance to the triangle's sides; negative outside.
double signed_distance(Point p, const Triangle& t);
/// Same for a counterclockwise convex polygon. Outside points get the
/// negated Euclidean distance to the polygon; degenerate polygons (points,
/// segments) count every point as outside or on the boundary.
double signed_distance(Point p, std::span<const Point> convex_ccw);

/// Euclidean distance between two convex counterclockwise polygons (each
/// may be degenerate); 0 when they intersect.
double convex_polygon_distance(std::span<const Point> a, std::span<const Point> b);

}  // namespace splitpack
