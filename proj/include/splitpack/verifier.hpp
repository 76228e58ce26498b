#pragma once

// Independent numeric validation of packing trees. Only primitive geometry is
// used here (signed distances, convex polygon distances, offset lines); the
// packer's placement formulas and hat dimensions are deliberately not linked.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "splitpack/geometry.hpp"
#include "splitpack/packing_tree.hpp"

namespace splitpack {

enum class CheckKind {
  circle_circle,
  circle_in_container,
  hat_in_parent,
  hat_hat_disjoint,
  leaf_multiset,
};

inline constexpr std::size_t kCheckKindCount = 5;

const char* to_string(CheckKind kind) noexcept;

/// One check. Slack is signed: negative means overlap or protrusion.
/// `first` and `second` are node indices; `second` is -1 when unused.
struct Check {
  CheckKind kind;
  int first = -1;
  int second = -1;
  double slack = 0.0;
};

struct VerificationReport {
  bool passed = true;
  /// Sorted by (kind, first, second).
  std::vector<Check> checks;
  /// Smallest slack seen; +infinity when nothing was checked.
  double worst_slack = 0.0;
  double tolerance = 0.0;
  std::array<std::size_t, kCheckKindCount> counts{};
  std::size_t failures = 0;
};

struct VerifyOptions {
  /// When false, only failing checks and the worst check of each kind are
  /// kept in `checks`; counts and the verdict are unaffected.
  bool record_all = true;
};

/// 1e-9 times the container's diameter.
double default_tolerance(const Packing& packing);

/// Throws Error(malformed_tree) for structurally invalid trees.
VerificationReport verify(const Packing& packing, double tolerance,
                          const VerifyOptions& options = {});

/// Wraps loose circles in a root container (a trivial tree); circle k gets
/// input index k.
Packing flat_packing(const Container& container, const std::vector<Circle>& circles);

/// Distance from each base endpoint to the far end of the corresponding
/// circle's projection onto the base line. The projections are disjoint iff
/// the sum is at most the base length.
std::pair<double, double> projection_widths(const Circle& near_start, const Circle& near_end,
                                            Point base_start, Point base_end);

}  // namespace splitpack
