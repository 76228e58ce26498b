#pragma once

// Recursive Split Packing into squares and non-acute triangles.
//
// Every subcontainer is a hat: a right triangle with rounded corners. A node
// holding two or more circles computes its split key, splits the circles with
// weighted_split, derives each group's minimum-size guarantee and places two
// child hats anchored at the ends of its base. A node holding one circle
// places it at its incenter. Squares use the key (a/2, a/2) with the two
// half-squares as the unscaled children, so both container kinds share one
// placement path.

#include <cstddef>
#include <optional>

#include "splitpack/geometry.hpp"
#include "splitpack/packing_tree.hpp"
#include "splitpack/splitting.hpp"

namespace splitpack {

/// Relative slack allowed when comparing a set's area to a capacity.
inline constexpr double kCapacityTolerance = 1e-12;

struct PackRequest {
  Container container = Square{};
  CircleSet circles;
  /// Promised lower bound on every circle's area.
  double min_size = 0.0;
};

struct PackStats {
  std::size_t split_invocations = 0;
  /// Circles handed to weighted_split, summed over all invocations.
  std::size_t element_moves = 0;
};

struct PackResult {
  Packing packing;
  PackStats stats;
};

/// Throws unless the request is packable by the guarantee: non-acute
/// container, combined area within the critical area, min-size respected.
void validate(const PackRequest& request);

PackResult pack(const PackRequest& request);

/// Child hats of a split; a group with zero area gets no hat.
struct HatPair {
  std::optional<Hat> first;
  std::optional<Hat> second;
};

/// Right isosceles hats with their right angles in the lower-left and
/// upper-right corners, each the half-square scaled by sqrt(a_i / (t/2))
/// where t is the square's twincircle area, rounded to b_i.
HatPair place_hats_in_square(const Square& square, AreaPair first, AreaPair second,
                             double min_size = 0.0);

/// Altitude halves of the container's triangle, scaled about the left and
/// right base vertices by sqrt(a_i / f_i) and rounded to b_i.
HatPair place_subhats_in_hat(const Hat& container, SplitKey key, AreaPair first,
                             AreaPair second);

/// Circle of the given area at the incenter of the hat's triangle.
Circle place_circle_in_hat(const Hat& container, double area);

/// Smallest member of the family (same shape, same anchor) whose critical
/// area equals the circles' combined area.
Container min_container(const CircleSet& circles, const Container& family);

}  // namespace splitpack
