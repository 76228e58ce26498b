#pragma once

// Greedy partitioning of circle sets: the unweighted split and its weighted
// generalization, plus the minimum-size guarantees they provide.

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "splitpack/geometry.hpp"

namespace splitpack {

/// One circle of an input set: its area and its position in the input.
struct CircleItem {
  double area = 0.0;
  int index = 0;

  friend bool operator==(const CircleItem&, const CircleItem&) = default;
};

/// Multiset of positive circle areas kept in descending order. Equal areas
/// keep their insertion order.
class CircleSet {
 public:
  CircleSet() = default;
  /// Sorts the items; throws on non-positive or non-finite areas.
  explicit CircleSet(std::vector<CircleItem> items);
  /// Items are numbered by their position in `areas`.
  static CircleSet from_areas(std::span<const double> areas);

  /// Appends an item no larger than the current minimum.
  void push_back(const CircleItem& item);

  const std::vector<CircleItem>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  /// Sum of the areas, accumulated in insertion order.
  double combined() const { return combined_; }
  /// Smallest area, or +infinity for the empty set.
  double minimum() const {
    return items_.empty() ? std::numeric_limits<double>::infinity() : items_.back().area;
  }
  std::vector<double> areas() const;

 private:
  std::vector<CircleItem> items_;
  double combined_ = 0.0;
};

/// Greedy two-way split: each circle goes to the bucket with the smaller
/// running sum (ties to the first); afterwards the buckets are swapped if
/// needed so that the first has the smaller sum.
std::pair<CircleSet, CircleSet> split(const CircleSet& circles);

/// Weighted greedy split: each circle goes to the bucket with the smaller
/// relative fill sum_i / f_i (ties to the first). No final swap.
std::pair<CircleSet, CircleSet> weighted_split(const CircleSet& circles, SplitKey key);

/// Rounding area that bucket i may assume: max{b, sum_i - f_i * sum_j / f_j, 0}.
double min_guarantee(double sum_i, double sum_j, double f_i, double f_j, double b);

struct AreaPair {
  double a = 0.0;  // packable area
  double b = 0.0;  // minimum circle area (rounding)
};

struct ConjugatedPair {
  AreaPair first;
  AreaPair second;
};

/// The two tuples are (a, b, key)-conjugated: a1 + a2 = a, b_i >= b and
/// b_i >= a_i - f_i * a_j / f_j, each within 1e-12 * a.
bool check_conjugated(const ConjugatedPair& pair, double a, double b, SplitKey key);

}  // namespace splitpack
