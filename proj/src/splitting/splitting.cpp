#include "splitpack/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splitpack/error.hpp"

namespace splitpack {

CircleSet::CircleSet(std::vector<CircleItem> items) {
  for (const auto& item : items) {
    if (!(item.area > 0.0) || !std::isfinite(item.area)) {
      throw Error(ErrorCode::invalid_parameter,
                  "circle " + std::to_string(item.index) + " has a non-positive area");
    }
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const CircleItem& l, const CircleItem& r) { return l.area > r.area; });
  items_.reserve(items.size());
  for (const auto& item : items) push_back(item);
}

CircleSet CircleSet::from_areas(std::span<const double> areas) {
  std::vector<CircleItem> items;
  items.reserve(areas.size());
  for (std::size_t i = 0; i < areas.size(); ++i) {
    items.push_back({areas[i], static_cast<int>(i)});
  }
  return CircleSet(std::move(items));
}

void CircleSet::push_back(const CircleItem& item) {
  if (!items_.empty() && item.area > items_.back().area) {
    throw Error(ErrorCode::invalid_parameter, "circle set must stay sorted descending");
  }
  items_.push_back(item);
  combined_ += item.area;
}

std::vector<double> CircleSet::areas() const {
  std::vector<double> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.area);
  return out;
}

std::pair<CircleSet, CircleSet> split(const CircleSet& circles) {
  CircleSet first, second;
  for (const auto& item : circles.items()) {
    if (first.combined() <= second.combined()) {
      first.push_back(item);
    } else {
      second.push_back(item);
    }
  }
  if (first.combined() > second.combined()) std::swap(first, second);
  return {std::move(first), std::move(second)};
}

std::pair<CircleSet, CircleSet> weighted_split(const CircleSet& circles, SplitKey key) {
  if (!(key.f1 > 0.0) || !(key.f2 > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "split key components must be positive");
  }
  CircleSet first, second;
  for (const auto& item : circles.items()) {
    if (first.combined() / key.f1 <= second.combined() / key.f2) {
      first.push_back(item);
    } else {
      second.push_back(item);
    }
  }
  return {std::move(first), std::move(second)};
}

double min_guarantee(double sum_i, double sum_j, double f_i, double f_j, double b) {
  return std::max({b, sum_i - f_i * sum_j / f_j, 0.0});
}

bool check_conjugated(const ConjugatedPair& pair, double a, double b, SplitKey key) {
  const double tol = 1e-12 * std::abs(a);
  const auto& [a1, b1] = pair.first;
  const auto& [a2, b2] = pair.second;
  if (std::abs(a1 + a2 - a) > tol) return false;
  if (b1 < b - tol || b2 < b - tol) return false;
  if (b1 < a1 - key.f1 * a2 / key.f2 - tol) return false;
  if (b2 < a2 - key.f2 * a1 / key.f1 - tol) return false;
  return true;
}

}  // namespace splitpack
