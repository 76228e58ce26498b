#include "splitpack/verifier.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "splitpack/error.hpp"
#include "splitpack/kernels.hpp"

namespace splitpack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::malformed_tree, what);
}

// The triangle's sides moved inward by s, intersected pairwise. For a hat
// these are the centers of its corner disks.
std::array<Point, 3> offset_corners(const Triangle& t, double s) {
  std::array<Point, 3> normal;
  std::array<double, 3> offset;
  for (std::size_t k = 0; k < 3; ++k) {
    const Point edge = t[(k + 1) % 3] - t[k];
    normal[k] = (1.0 / norm(edge)) * Point{-edge.y, edge.x};
    offset[k] = dot(normal[k], t[k]) + s;
  }
  std::array<Point, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t a = (i + 2) % 3, b = i;
    const double det = cross(normal[a], normal[b]);
    out[i] = Point{(offset[a] * normal[b].y - offset[b] * normal[a].y) / det,
                   (normal[a].x * offset[b] - normal[b].x * offset[a]) / det};
  }
  return out;
}

double local_inradius(const Triangle& t) {
  const double twice_area = cross(t[1] - t[0], t[2] - t[0]);
  const double perimeter = distance(t[0], t[1]) + distance(t[1], t[2]) + distance(t[2], t[0]);
  return twice_area / perimeter;
}

void check_structure(const Packing& packing) {
  const auto& nodes = packing.nodes;
  if (nodes.empty()) malformed("packing has no root");
  if (!nodes.front().is_root_container() || nodes.front().parent != -1) {
    malformed("root must be a square or triangle container");
  }
  const int count = static_cast<int>(nodes.size());
  for (int i = 0; i < count; ++i) {
    const PackingNode& node = nodes[static_cast<std::size_t>(i)];
    if (i > 0) {
      if (node.is_root_container()) malformed("container shape below the root");
      if (node.parent < 0 || node.parent >= count || node.parent == i) {
        malformed("node " + std::to_string(i) + " has an invalid parent");
      }
      const auto& siblings = nodes[static_cast<std::size_t>(node.parent)].children;
      if (std::count(siblings.begin(), siblings.end(), i) != 1) {
        malformed("node " + std::to_string(i) + " is not listed by its parent");
      }
    }
    for (int child : node.children) {
      if (child <= 0 || child >= count || nodes[static_cast<std::size_t>(child)].parent != i) {
        malformed("node " + std::to_string(i) + " lists an invalid child");
      }
    }
    if (node.is_circle()) {
      if (!node.children.empty()) malformed("circle " + std::to_string(i) + " has children");
      const auto& c = std::get<Circle>(node.shape);
      if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
        malformed("circle " + std::to_string(i) + " has a non-positive radius");
      }
    }
    if (node.is_hat()) {
      const auto& hat = std::get<Hat>(node.shape);
      if (!(hat.rounding_radius >= 0.0) || !std::isfinite(hat.rounding_radius)) {
        malformed("hat " + std::to_string(i) + " has an invalid rounding radius");
      }
      const auto& ch = node.children;
      const auto kind = [&](int c) -> const PackingNode& { return nodes[static_cast<std::size_t>(c)]; };
      const bool one_circle = ch.size() == 1 && kind(ch[0]).is_circle();
      const bool two_hats = ch.size() == 2 && kind(ch[0]).is_hat() && kind(ch[1]).is_hat();
      if (!one_circle && !two_hats) {
        malformed("hat " + std::to_string(i) + " must hold one circle or two hats");
      }
    }
  }
  // Every node must hang below the root.
  std::vector<int> pending{0};
  std::size_t reached = 0;
  while (!pending.empty()) {
    const int i = pending.back();
    pending.pop_back();
    if (++reached > nodes.size()) malformed("cycle in packing tree");
    for (int c : nodes[static_cast<std::size_t>(i)].children) pending.push_back(c);
  }
  if (reached != nodes.size()) malformed("packing tree has unreachable nodes");
}

class ReportBuilder {
 public:
  ReportBuilder(double tolerance, bool record_all) : record_all_(record_all) {
    report_.tolerance = tolerance;
    report_.worst_slack = kInf;
    worst_.fill(Check{CheckKind::circle_circle, -1, -1, kInf});
  }

  void add(CheckKind kind, int first, int second, double slack) {
    const Check check{kind, first, second, slack};
    const auto k = static_cast<std::size_t>(kind);
    ++report_.counts[k];
    report_.worst_slack = std::min(report_.worst_slack, slack);
    const bool failed = !(slack >= -report_.tolerance);
    if (failed) {
      ++report_.failures;
      report_.passed = false;
    }
    if (record_all_ || failed) {
      report_.checks.push_back(check);
    } else if (slack < worst_[k].slack) {
      worst_[k] = check;
    }
  }

  VerificationReport finish() && {
    if (!record_all_) {
      for (const Check& c : worst_) {
        if (c.first >= 0) report_.checks.push_back(c);
      }
    }
    std::sort(report_.checks.begin(), report_.checks.end(), [](const Check& l, const Check& r) {
      return std::tie(l.kind, l.first, l.second) < std::tie(r.kind, r.first, r.second);
    });
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::array<Check, kCheckKindCount> worst_;
  bool record_all_;
};

// Smallest slack of a disk (center, radius) inside the node's shape.
double disk_in_node(const PackingNode& node, Point center, double radius) {
  if (const auto* hat = std::get_if<Hat>(&node.shape)) {
    const auto core = offset_corners(hat->triangle, hat->rounding_radius);
    return signed_distance(center, core) + hat->rounding_radius - radius;
  }
  const std::vector<Point> poly = std::holds_alternative<Square>(node.shape)
                                      ? container_polygon(std::get<Square>(node.shape))
                                      : container_polygon(std::get<Triangle>(node.shape));
  return signed_distance(center, poly) - radius;
}

void check_circles(const Packing& packing, ReportBuilder& out) {
  std::vector<int> ids;
  std::vector<double> xs, ys, rs;
  for (std::size_t i = 0; i < packing.nodes.size(); ++i) {
    if (const auto* c = std::get_if<Circle>(&packing.nodes[i].shape)) {
      ids.push_back(static_cast<int>(i));
      xs.push_back(c->center.x);
      ys.push_back(c->center.y);
      rs.push_back(c->radius);
    }
  }
  const std::size_t n = ids.size();
  if (n == 0) return;
  const auto& kernels = simd::active_kernels();
  std::vector<double> slack(n);

  const auto planes = simd::polygon_half_planes(container_polygon(packing.container()));
  simd::disk_in_polygon_slack(kernels, {xs, ys, rs}, planes, slack);
  for (std::size_t i = 0; i < n; ++i) out.add(CheckKind::circle_in_container, ids[i], 0, slack[i]);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t rest = n - i - 1;
    const simd::CircleBatch others{std::span(xs).subspan(i + 1), std::span(ys).subspan(i + 1),
                                   std::span(rs).subspan(i + 1)};
    simd::circle_pair_slack(kernels, xs[i], ys[i], rs[i], others, std::span(slack).first(rest));
    for (std::size_t j = 0; j < rest; ++j) {
      out.add(CheckKind::circle_circle, ids[i], ids[i + 1 + j], slack[j]);
    }
  }
}

void check_hats(const Packing& packing, ReportBuilder& out) {
  const auto& nodes = packing.nodes;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto* hat = std::get_if<Hat>(&nodes[i].shape);
    if (!hat) continue;
    const PackingNode& parent = nodes[static_cast<std::size_t>(nodes[i].parent)];
    double slack = local_inradius(hat->triangle) - hat->rounding_radius;
    for (Point center : offset_corners(hat->triangle, hat->rounding_radius)) {
      slack = std::min(slack, disk_in_node(parent, center, hat->rounding_radius));
    }
    out.add(CheckKind::hat_in_parent, static_cast<int>(i), nodes[i].parent, slack);
  }
  for (const PackingNode& node : nodes) {
    const auto& ch = node.children;
    for (std::size_t a = 0; a < ch.size(); ++a) {
      const auto* ha = std::get_if<Hat>(&nodes[static_cast<std::size_t>(ch[a])].shape);
      if (!ha) continue;
      const auto core_a = offset_corners(ha->triangle, ha->rounding_radius);
      for (std::size_t b = a + 1; b < ch.size(); ++b) {
        const auto* hb = std::get_if<Hat>(&nodes[static_cast<std::size_t>(ch[b])].shape);
        if (!hb) continue;
        const auto core_b = offset_corners(hb->triangle, hb->rounding_radius);
        const double gap = convex_polygon_distance(core_a, core_b);
        out.add(CheckKind::hat_hat_disjoint, std::min(ch[a], ch[b]), std::max(ch[a], ch[b]),
                gap - ha->rounding_radius - hb->rounding_radius);
      }
    }
  }
}

void check_leaves(const Packing& packing, ReportBuilder& out) {
  const std::size_t declared = packing.input_areas.size();
  std::vector<int> seen(declared, 0);
  bool ok = true;
  for (const PackingNode& node : packing.nodes) {
    const auto* c = std::get_if<Circle>(&node.shape);
    if (!c) continue;
    const int idx = node.input_index;
    if (idx < 0 || static_cast<std::size_t>(idx) >= declared) {
      ok = false;
      continue;
    }
    ++seen[static_cast<std::size_t>(idx)];
    const double area = packing.input_areas[static_cast<std::size_t>(idx)];
    if (node.input_area != area || std::abs(c->area() - area) > 1e-12 * area) ok = false;
  }
  ok = ok && std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
  out.add(CheckKind::leaf_multiset, 0, -1, ok ? 0.0 : -kInf);
}

}  // namespace

const char* to_string(CheckKind kind) noexcept {
  switch (kind) {
    case CheckKind::circle_circle: return "circle-circle";
    case CheckKind::circle_in_container: return "circle-in-container";
    case CheckKind::hat_in_parent: return "hat-in-parent";
    case CheckKind::hat_hat_disjoint: return "hat-hat-disjoint";
    case CheckKind::leaf_multiset: return "leaf-multiset";
  }
  return "unknown";
}

double default_tolerance(const Packing& packing) {
  return 1e-9 * container_diameter(packing.container());
}

VerificationReport verify(const Packing& packing, double tolerance, const VerifyOptions& options) {
  check_structure(packing);
  ReportBuilder builder(tolerance, options.record_all);
  const bool has_content = packing.nodes.size() > 1 || !packing.input_areas.empty();
  if (has_content) {
    check_circles(packing, builder);
    check_hats(packing, builder);
    check_leaves(packing, builder);
  }
  return std::move(builder).finish();
}

Packing flat_packing(const Container& container, const std::vector<Circle>& circles) {
  Packing packing;
  PackingNode root;
  std::visit([&root](const auto& c) { root.shape = c; }, container);
  packing.add_node(std::move(root), -1);
  for (std::size_t k = 0; k < circles.size(); ++k) {
    PackingNode leaf;
    leaf.shape = circles[k];
    leaf.input_index = static_cast<int>(k);
    leaf.input_area = circles[k].area();
    packing.input_areas.push_back(leaf.input_area);
    packing.add_node(std::move(leaf), 0);
  }
  return packing;
}

std::pair<double, double> projection_widths(const Circle& near_start, const Circle& near_end,
                                            Point base_start, Point base_end) {
  const Point dir = base_end - base_start;
  const Point u = (1.0 / norm(dir)) * dir;
  return {dot(near_start.center - base_start, u) + near_start.radius,
          dot(base_end - near_end.center, u) + near_end.radius};
}

}  // namespace splitpack
