#pragma once

// Packing trees, shared by the packer (which builds them) and the verifier
// (which checks them). Nodes live in one flat vector; node 0 is the root.

#include <cstddef>
#include <variant>
#include <vector>

#include "splitpack/geometry.hpp"

namespace splitpack {

struct PackingNode {
  /// Square or Triangle for the root, Hat for subcontainers, Circle for leaves.
  std::variant<Square, Triangle, Hat, Circle> shape;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
  /// Leaf circles only: position and area of the originating input circle.
  int input_index = -1;
  double input_area = 0.0;

  bool is_circle() const { return std::holds_alternative<Circle>(shape); }
  bool is_hat() const { return std::holds_alternative<Hat>(shape); }
  bool is_root_container() const {
    return std::holds_alternative<Square>(shape) || std::holds_alternative<Triangle>(shape);
  }
};

struct Packing {
  std::vector<PackingNode> nodes;
  /// Declared input areas, by input index.
  std::vector<double> input_areas;

  const PackingNode& root() const { return nodes.front(); }
  Container container() const;

  std::size_t circle_count() const;
  std::size_t hat_count() const;

  /// Appends a node under `parent` (or as the root when parent < 0) and
  /// returns its index.
  int add_node(PackingNode node, int parent);
};

inline Container Packing::container() const {
  if (const auto* sq = std::get_if<Square>(&root().shape)) return *sq;
  return std::get<Triangle>(root().shape);
}

inline std::size_t Packing::circle_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes) n += node.is_circle() ? 1 : 0;
  return n;
}

inline std::size_t Packing::hat_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes) n += node.is_hat() ? 1 : 0;
  return n;
}

inline int Packing::add_node(PackingNode node, int parent) {
  const int index = static_cast<int>(nodes.size());
  node.parent = parent;
  if (parent >= 0) {
    node.depth = nodes[static_cast<std::size_t>(parent)].depth + 1;
    nodes[static_cast<std::size_t>(parent)].children.push_back(index);
  } else {
    node.depth = 0;
  }
  nodes.push_back(std::move(node));
  return index;
}

}  // namespace splitpack
