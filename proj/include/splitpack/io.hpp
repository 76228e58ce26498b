#pragma once

// Instance and packing documents (JSON), SVG figures, and the library side of
// the `splitpack` commands.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "splitpack/geometry.hpp"
#include "splitpack/packer.hpp"
#include "splitpack/verifier.hpp"

namespace splitpack::io {

struct SquareSpec {
  double side = 1.0;

  friend bool operator==(const SquareSpec&, const SquareSpec&) = default;
};

/// Exactly one of `sides` and `vertices` is set.
struct TriangleSpec {
  std::optional<std::array<double, 3>> sides;
  std::optional<std::array<Point, 3>> vertices;

  friend bool operator==(const TriangleSpec&, const TriangleSpec&) = default;
};

using ContainerSpec = std::variant<SquareSpec, TriangleSpec>;

/// Parses "square:SIDE" or "triangle:X,Y,Z".
ContainerSpec parse_container_flag(std::string_view text);
/// Side lengths are canonicalized (longest side as base); vertices are kept
/// and only rotated so the longest edge comes first.
Container to_container(const ContainerSpec& spec);
ContainerSpec to_spec(const Container& container);

/// Exactly one of `area` and `radius` is set.
struct CircleSpec {
  std::optional<double> area;
  std::optional<double> radius;

  double to_area() const;
  friend bool operator==(const CircleSpec&, const CircleSpec&) = default;
};

struct InstanceDocument {
  ContainerSpec container = SquareSpec{};
  std::vector<CircleSpec> circles;
  std::optional<double> min_size;

  std::vector<double> areas() const;
  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

struct Placement {
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
  int input_index = 0;
  /// Originating input area.
  std::optional<double> area;
  /// Index into `subcontainers`, or -1 for the root container.
  std::optional<int> parent;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Subcontainer {
  std::array<Point, 3> vertices{};
  double rounding_radius = 0.0;
  int depth = 1;
  std::optional<int> parent;

  friend bool operator==(const Subcontainer&, const Subcontainer&) = default;
};

struct PackingDocument {
  ContainerSpec container = SquareSpec{};
  /// Ordered by input index.
  std::vector<Placement> placements;
  std::vector<Subcontainer> subcontainers;
  double density_used = 0.0;
  double critical_density = 0.0;

  friend bool operator==(const PackingDocument&, const PackingDocument&) = default;
};

nlohmann::json to_json(const ContainerSpec& spec);
ContainerSpec container_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InstanceDocument& doc);
/// Accepts a full instance object, an object with only "circles", or a bare
/// array of circles; `container` overrides (or supplies) the container.
InstanceDocument instance_from_json(const nlohmann::json& j,
                                    const std::optional<ContainerSpec>& container = {});

nlohmann::json to_json(const PackingDocument& doc);
PackingDocument packing_from_json(const nlohmann::json& j);

std::string serialize(const InstanceDocument& doc);
std::string serialize(const PackingDocument& doc);
InstanceDocument parse_instance(std::string_view text);
PackingDocument parse_packing(std::string_view text);

PackingDocument to_document(const Packing& packing, const ContainerSpec& echo);
/// Rebuilds the tree when every element carries a parent, otherwise wraps
/// the placements in a trivial tree.
Packing to_packing(const PackingDocument& doc);

std::string render_svg(const PackingDocument& doc);

// Commands.

struct DecideResult {
  bool packable = false;  // false means "unknown", never "no"
  double ratio = 0.0;     // combined area / critical area
};

DecideResult decide(const InstanceDocument& instance);

PackingDocument pack_instance(const InstanceDocument& instance, PackStats* stats = nullptr);

struct ApproxResult {
  ContainerSpec container;
  PackingDocument packing;
  double lower_bound = 0.0;  // combined circle area
  double ratio = 0.0;        // container area / lower bound
};

ApproxResult approx(const std::vector<double>& areas, const ContainerSpec& family);

enum class Distribution { equal, geometric, uniform };

Distribution parse_distribution(std::string_view name);
const char* to_string(Distribution d) noexcept;

struct GenOptions {
  int count = 1;
  double target_ratio = 1.0;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::uniform;
  ContainerSpec container = SquareSpec{};
};

InstanceDocument generate(const GenOptions& options);

/// Non-positive tolerance selects default_tolerance().
VerificationReport verify_document(const PackingDocument& doc, double tolerance,
                                   const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerificationReport& report, const Packing& packing);

}  // namespace splitpack::io
