#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "splitpack/error.hpp"
#include "splitpack/splitting.hpp"
#include "support.hpp"

using namespace splitpack;
using doctest::Approx;

namespace {

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> merged(const CircleSet& a, const CircleSet& b) {
  auto out = a.areas();
  const auto rest = b.areas();
  out.insert(out.end(), rest.begin(), rest.end());
  return sorted(out);
}

// Straight transcription of the greedy rule: each circle goes to the bucket
// with the lower relative fill, lower index on ties.
std::pair<std::vector<double>, std::vector<double>> reference_weighted(
    const std::vector<double>& descending, double f1, double f2) {
  std::vector<double> c1, c2;
  double s1 = 0.0, s2 = 0.0;
  for (double v : descending) {
    if (s1 / f1 <= s2 / f2) {
      c1.push_back(v);
      s1 += v;
    } else {
      c2.push_back(v);
      s2 += v;
    }
  }
  return {c1, c2};
}

}  // namespace

TEST_SUITE("splitting") {

TEST_CASE("circle sets sort descending and keep input indices") {
  const std::vector<double> areas{0.1, 0.3, 0.2, 0.3};
  const CircleSet set = CircleSet::from_areas(areas);
  REQUIRE(set.size() == 4);
  CHECK(set.items()[0] == CircleItem{0.3, 1});
  CHECK(set.items()[1] == CircleItem{0.3, 3});
  CHECK(set.items()[2] == CircleItem{0.2, 2});
  CHECK(set.items()[3] == CircleItem{0.1, 0});
  CHECK(set.combined() == Approx(0.9));
  CHECK(set.minimum() == 0.1);
  CHECK(CircleSet().minimum() == INFINITY);
  CHECK_THROWS_AS(CircleSet::from_areas(std::vector<double>{1.0, 0.0}), Error);
  CHECK_THROWS_AS(CircleSet::from_areas(std::vector<double>{-1.0}), Error);
}

TEST_CASE("split hand trace") {
  const auto [c1, c2] = split(CircleSet::from_areas(std::vector<double>{0.3, 0.25, 0.2, 0.15, 0.1}));
  CHECK(c1.areas() == std::vector<double>{0.25, 0.2});
  CHECK(c2.areas() == std::vector<double>{0.3, 0.15, 0.1});
  CHECK(c2.minimum() == Approx(c2.combined() - c1.combined()));
}

TEST_CASE("split small cases") {
  const auto [a1, a2] = split(CircleSet::from_areas(std::vector<double>{5.0}));
  CHECK(a1.empty());
  CHECK(a2.areas() == std::vector<double>{5.0});

  const auto [b1, b2] = split(CircleSet::from_areas(std::vector<double>{2.0, 2.0}));
  CHECK(b1.areas() == std::vector<double>{2.0});
  CHECK(b2.areas() == std::vector<double>{2.0});

  const auto [e1, e2] = split(CircleSet());
  CHECK(e1.empty());
  CHECK(e2.empty());
}

TEST_CASE("weighted split hand trace") {
  const auto [c1, c2] = weighted_split(CircleSet::from_areas(std::vector<double>{4, 2, 2}), {1, 3});
  CHECK(c1.areas() == std::vector<double>{4});
  CHECK(c2.areas() == std::vector<double>{2, 2});
  CHECK(c1.minimum() >= c1.combined() - 1.0 * c2.combined() / 3.0);

  const auto [s1, s2] = weighted_split(CircleSet::from_areas(std::vector<double>{7.0}), {5, 1});
  CHECK(s1.areas() == std::vector<double>{7.0});
  CHECK(s2.empty());

  CHECK_THROWS_AS(weighted_split(CircleSet::from_areas(std::vector<double>{1.0}), {0, 1}), Error);
}

TEST_CASE("min guarantee") {
  CHECK(min_guarantee(0.55, 0.45, 1, 1, 0) == Approx(0.10));
  CHECK(min_guarantee(4, 4, 1, 3, 0) == Approx(8.0 / 3.0));
  CHECK(min_guarantee(0.3, 0.7, 1, 1, 0.05) == 0.05);
  CHECK(min_guarantee(0.3, 0.7, 1, 1, 0.0) == 0.0);
}

TEST_CASE("conjugated pairs") {
  const double a = 2.0;
  CHECK(check_conjugated({{a / 2, 0}, {a / 2, 0}}, a, 0, {1, 1}));
  CHECK_FALSE(check_conjugated({{0.7 * a, 0}, {0.3 * a, 0}}, a, 0, {1, 1}));
  CHECK(check_conjugated({{0.7 * a, 0.4 * a}, {0.3 * a, 0}}, a, 0, {1, 1}));
  // Sum must match a.
  CHECK_FALSE(check_conjugated({{0.5, 0}, {0.5, 0}}, a, 0, {1, 1}));
  // Rounding may not drop below the container's own b.
  CHECK_FALSE(check_conjugated({{1, 0.1}, {1, 0.1}}, a, 0.2, {1, 1}));
}

TEST_CASE("weighted split matches the reference greedy rule") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(1 + rng() % 40);
    const CircleSet set = CircleSet::from_areas(test::random_areas(rng, n, 1.0));
    const double f1 = test::uniform(rng, 0.05, 1.0), f2 = test::uniform(rng, 0.05, 1.0);
    const auto [c1, c2] = weighted_split(set, {f1, f2});
    const auto [r1, r2] = reference_weighted(set.areas(), f1, f2);
    CHECK(c1.areas() == r1);
    CHECK(c2.areas() == r2);
  }
}

TEST_CASE("unit key gives the same partition as split, up to the swap") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(1 + rng() % 30);
    const CircleSet set = CircleSet::from_areas(test::random_areas(rng, n, 1.0));
    const auto [p1, p2] = split(set);
    const auto [w1, w2] = weighted_split(set, {1, 1});
    const bool same = p1.items() == w1.items() && p2.items() == w2.items();
    const bool swapped = p1.items() == w2.items() && p2.items() == w1.items();
    CHECK((same || swapped));
  }
}

TEST_CASE("splitting guarantees on random instances") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10000; ++i) {
    const auto n = static_cast<std::size_t>(1 + rng() % 60);
    const double a = test::uniform(rng, 0.01, 10.0);
    const CircleSet set = CircleSet::from_areas(test::random_areas(rng, n, a));
    const SplitKey key{test::uniform(rng, 0.01, 1.0), test::uniform(rng, 0.01, 1.0)};
    const auto [c1, c2] = weighted_split(set, key);

    REQUIRE(merged(c1, c2) == sorted(set.areas()));
    if (n >= 2) REQUIRE((!c1.empty() && !c2.empty()));
    const double slack = 1e-12 * a;
    const double g1 = c1.combined() - key.f1 * c2.combined() / key.f2;
    const double g2 = c2.combined() - key.f2 * c1.combined() / key.f1;
    REQUIRE(c1.minimum() >= g1 - slack);
    REQUIRE(c2.minimum() >= g2 - slack);

    const double b = set.minimum();
    const ConjugatedPair pair{
        {c1.combined(), min_guarantee(c1.combined(), c2.combined(), key.f1, key.f2, b)},
        {c2.combined(), min_guarantee(c2.combined(), c1.combined(), key.f2, key.f1, b)}};
    REQUIRE(check_conjugated(pair, set.combined(), b, key));

    const auto [u1, u2] = split(set);
    REQUIRE(u1.combined() <= u2.combined());
    REQUIRE(u2.minimum() >= u2.combined() - u1.combined() - slack);
  }
}

TEST_CASE("splitting is deterministic") {
  std::mt19937_64 rng(24);
  const CircleSet set = CircleSet::from_areas(test::random_areas(rng, 50, 1.0));
  const auto a = weighted_split(set, {0.3, 0.7});
  const auto b = weighted_split(set, {0.3, 0.7});
  CHECK(a.first.items() == b.first.items());
  CHECK(a.second.items() == b.second.items());
}

}  // TEST_SUITE
