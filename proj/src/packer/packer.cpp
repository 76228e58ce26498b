#include "splitpack/packer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "splitpack/error.hpp"

namespace splitpack {

namespace {

constexpr double kPlacementTolerance = 1e-9;

void require_conjugated(AreaPair first, AreaPair second, double capacity, double b,
                        SplitKey key) {
  const double a = first.a + second.a;
  if (first.a < 0.0 || second.a < 0.0) {
    throw Error(ErrorCode::invalid_parameter, "group areas must be nonnegative");
  }
  if (a > capacity * (1.0 + kPlacementTolerance)) {
    throw Error(ErrorCode::over_capacity, "groups exceed the container's capacity");
  }
  if (!check_conjugated({first, second}, a, b, key)) {
    throw Error(ErrorCode::conjugatedness_violation,
                "area/rounding tuples are not conjugated for the container's split key");
  }
}

std::optional<Hat> make_hat(const Triangle& triangle, AreaPair group) {
  if (group.a <= 0.0) return std::nullopt;
  if (group.b > group.a * (1.0 + kCapacityTolerance)) {
    throw Error(ErrorCode::invalid_parameter, "hat rounding exceeds its incircle");
  }
  const double s = std::min(radius_of_area(group.b), triangle.inradius());
  return Hat{triangle, s};
}

struct WorkItem {
  int node;
  Hat container;
  CircleSet circles;
  // Minimum-size guarantee for the circles in this container.
  double min_size;
};

std::string format_ratio(double ratio) {
  std::ostringstream os;
  os.precision(17);
  os << ratio;
  return os.str();
}

}  // namespace

void validate(const PackRequest& request) {
  if (const auto* t = std::get_if<Triangle>(&request.container); t && !t->is_non_acute()) {
    throw Error(ErrorCode::unsupported_container, "acute triangles are not supported");
  }
  if (const auto* sq = std::get_if<Square>(&request.container);
      sq && !(sq->side > 0.0 && std::isfinite(sq->side))) {
    throw Error(ErrorCode::invalid_parameter, "square side must be positive");
  }
  if (!(request.min_size >= 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "minimum size must be nonnegative");
  }
  const double capacity = critical_area(request.container);
  const double total = request.circles.combined();
  if (total > capacity * (1.0 + kCapacityTolerance)) {
    throw Error(ErrorCode::over_capacity,
                "combined area exceeds the critical area (ratio " +
                    format_ratio(total / capacity) + ")");
  }
  if (!request.circles.empty() && request.circles.minimum() < request.min_size) {
    throw Error(ErrorCode::min_size_violation, "a circle is smaller than the minimum size");
  }
}

HatPair place_hats_in_square(const Square& square, AreaPair first, AreaPair second,
                             double min_size) {
  const double capacity = critical_area(square);
  const SplitKey key{capacity / 2.0, capacity / 2.0};
  require_conjugated(first, second, capacity, min_size, key);

  const double side = square.side;
  const Point low = square.origin;
  const Point high = square.origin + Point{side, side};
  HatPair out;
  if (first.a > 0.0) {
    const double t = std::sqrt(first.a / key.f1);
    out.first = make_hat(Triangle(low, low + Point{t * side, 0.0}, low + Point{0.0, t * side}),
                         first);
  }
  if (second.a > 0.0) {
    const double t = std::sqrt(second.a / key.f2);
    out.second = make_hat(
        Triangle(high, high - Point{t * side, 0.0}, high - Point{0.0, t * side}), second);
  }
  return out;
}

HatPair place_subhats_in_hat(const Hat& container, SplitKey key, AreaPair first,
                             AreaPair second) {
  if (!container.triangle.is_non_acute()) {
    throw Error(ErrorCode::unsupported_container, "container hat must be non-acute");
  }
  require_conjugated(first, second, container.incircle_area(), container.rounding_area(), key);

  const CanonicalFrame f = container.triangle.canonical_frame();
  HatPair out;
  if (first.a > 0.0) {
    const double t = std::sqrt(first.a / key.f1);
    out.first = make_hat(Triangle(f.left, f.left + t * (f.foot - f.left),
                                  f.left + t * (f.apex - f.left)),
                         first);
  }
  if (second.a > 0.0) {
    const double t = std::sqrt(second.a / key.f2);
    out.second = make_hat(Triangle(f.right + t * (f.foot - f.right), f.right,
                                   f.right + t * (f.apex - f.right)),
                          second);
  }
  return out;
}

Circle place_circle_in_hat(const Hat& container, double area) {
  if (!(area > 0.0)) throw Error(ErrorCode::invalid_parameter, "circle area must be positive");
  const Circle incircle = triangle_incircle(container.triangle);
  // A leaf hat's incircle equals its circle by construction; recomputing it
  // from the scaled vertices drifts by a few ulps per level.
  if (area > incircle.area() * (1.0 + kPlacementTolerance)) {
    throw Error(ErrorCode::over_capacity, "circle exceeds the hat's incircle");
  }
  return Circle{incircle.center, radius_of_area(area)};
}

Container min_container(const CircleSet& circles, const Container& family) {
  const double total = circles.combined();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "cannot size a container for an empty set");
  }
  if (const auto* sq = std::get_if<Square>(&family)) {
    return Square{std::sqrt(total / critical_density(*sq)), sq->origin};
  }
  const auto& t = std::get<Triangle>(family);
  const double k = std::sqrt(total / critical_area(t));
  return t.scaled_about(t[0], k);
}

PackResult pack(const PackRequest& request) {
  validate(request);

  PackResult result;
  Packing& packing = result.packing;
  PackStats& stats = result.stats;
  packing.input_areas.assign(request.circles.size(), 0.0);
  for (const auto& item : request.circles.items()) {
    packing.input_areas[static_cast<std::size_t>(item.index)] = item.area;
  }

  PackingNode root;
  std::visit([&root](const auto& c) { root.shape = c; }, request.container);
  packing.add_node(std::move(root), -1);
  if (request.circles.empty()) return result;

  auto add_circle = [&packing](int parent, const Circle& circle, const CircleItem& item) {
    PackingNode node;
    node.shape = circle;
    node.input_index = item.index;
    node.input_area = item.area;
    packing.add_node(std::move(node), parent);
  };
  auto add_hat = [&packing](int parent, const Hat& hat) {
    PackingNode node;
    node.shape = hat;
    return packing.add_node(std::move(node), parent);
  };

  std::vector<WorkItem> stack;

  if (const auto* sq = std::get_if<Square>(&request.container)) {
    const CircleSet& circles = request.circles;
    if (circles.size() == 1) {
      const CircleItem& item = circles.items().front();
      const double r = radius_of_area(item.area);
      add_circle(0, Circle{sq->origin + Point{r, r}, r}, item);
      return result;
    }
    const double half = critical_area(*sq) / 2.0;
    auto [c1, c2] = weighted_split(circles, SplitKey{half, half});
    ++stats.split_invocations;
    stats.element_moves += circles.size();
    const double a1 = c1.combined(), a2 = c2.combined();
    const AreaPair g1{a1, min_guarantee(a1, a2, half, half, request.min_size)};
    const AreaPair g2{a2, min_guarantee(a2, a1, half, half, request.min_size)};
    const HatPair hats = place_hats_in_square(*sq, g1, g2, request.min_size);
    // Both groups are nonempty: the first circle lands in bucket 1 and the
    // second in bucket 2.
    const int n1 = add_hat(0, *hats.first);
    const int n2 = add_hat(0, *hats.second);
    stack.push_back({n2, *hats.second, std::move(c2), g2.b});
    stack.push_back({n1, *hats.first, std::move(c1), g1.b});
  } else {
    stack.push_back({0, Hat{std::get<Triangle>(request.container), 0.0}, request.circles,
                     request.min_size});
  }

  while (!stack.empty()) {
    WorkItem work = std::move(stack.back());
    stack.pop_back();
    if (work.circles.size() == 1) {
      const CircleItem& item = work.circles.items().front();
      add_circle(work.node, place_circle_in_hat(work.container, item.area), item);
      continue;
    }
    const SplitKey key = hat_split_key(work.container);
    auto [c1, c2] = weighted_split(work.circles, key);
    ++stats.split_invocations;
    stats.element_moves += work.circles.size();
    const double a1 = c1.combined(), a2 = c2.combined();
    const AreaPair g1{a1, min_guarantee(a1, a2, key.f1, key.f2, work.min_size)};
    const AreaPair g2{a2, min_guarantee(a2, a1, key.f2, key.f1, work.min_size)};
    const HatPair hats = place_subhats_in_hat(work.container, key, g1, g2);
    const int n1 = add_hat(work.node, *hats.first);
    const int n2 = add_hat(work.node, *hats.second);
    stack.push_back({n2, *hats.second, std::move(c2), g2.b});
    stack.push_back({n1, *hats.first, std::move(c1), g1.b});
  }
  return result;
}

}  // namespace splitpack
