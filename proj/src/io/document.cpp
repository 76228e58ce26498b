#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "splitpack/error.hpp"
#include "splitpack/io.hpp"

namespace splitpack::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad_document(const std::string& what) {
  throw Error(ErrorCode::malformed_document, what);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::invalid_parameter, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    bad_document(std::string("expected numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad_document("a vertex must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(Point p) { return json::array({p.x, p.y}); }

std::array<Point, 3> vertices_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) bad_document("a triangle needs three vertices");
  return {point_from_json(j[0]), point_from_json(j[1]), point_from_json(j[2])};
}

json vertices_to_json(const std::array<Point, 3>& v) {
  return json::array({point_to_json(v[0]), point_to_json(v[1]), point_to_json(v[2])});
}

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j.at(key).is_number_integer()) bad_document(std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

std::optional<double> optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number()) bad_document(std::string("'") + key + "' must be a number");
  return j.at(key).get<double>();
}

CircleSpec circle_from_json(const json& j) {
  // A bare number is shorthand for an area.
  if (j.is_number()) {
    const double a = j.get<double>();
    if (!(a > 0.0) || !std::isfinite(a)) bad_document("circle sizes must be positive");
    return CircleSpec{a, std::nullopt};
  }
  if (!j.is_object()) bad_document("a circle must be an object with 'area' or 'radius'");
  CircleSpec c{optional_number(j, "area"), optional_number(j, "radius")};
  if (c.area.has_value() == c.radius.has_value()) {
    bad_document("each circle needs exactly one of 'area' and 'radius'");
  }
  const double v = c.area ? *c.area : *c.radius;
  if (!(v > 0.0) || !std::isfinite(v)) bad_document("circle sizes must be positive");
  return c;
}

}  // namespace

ContainerSpec parse_container_flag(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::invalid_parameter,
                "container must be square:SIDE or triangle:X,Y,Z");
  }
  const std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (kind == "square") return SquareSpec{parse_number(rest)};
  if (kind == "triangle") {
    std::array<double, 3> sides{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto comma = rest.find(',');
      if ((i < 2) != (comma != std::string_view::npos)) {
        throw Error(ErrorCode::invalid_parameter, "triangle needs three side lengths X,Y,Z");
      }
      sides[i] = parse_number(rest.substr(0, comma));
      if (comma != std::string_view::npos) rest = rest.substr(comma + 1);
    }
    return TriangleSpec{sides, std::nullopt};
  }
  throw Error(ErrorCode::invalid_parameter, "unknown container kind '" + std::string(kind) + "'");
}

Container to_container(const ContainerSpec& spec) {
  if (const auto* sq = std::get_if<SquareSpec>(&spec)) {
    if (!(sq->side > 0.0) || !std::isfinite(sq->side)) {
      throw Error(ErrorCode::invalid_parameter, "square side must be positive");
    }
    return Square{sq->side, {}};
  }
  const auto& t = std::get<TriangleSpec>(spec);
  if (t.sides.has_value() == t.vertices.has_value()) {
    throw Error(ErrorCode::invalid_parameter, "triangle needs either sides or vertices");
  }
  if (t.sides) return Triangle::from_sides((*t.sides)[0], (*t.sides)[1], (*t.sides)[2]);
  return Triangle(*t.vertices).canonical();
}

ContainerSpec to_spec(const Container& container) {
  if (const auto* sq = std::get_if<Square>(&container)) return SquareSpec{sq->side};
  return TriangleSpec{std::nullopt, std::get<Triangle>(container).vertices()};
}

double CircleSpec::to_area() const {
  if (area) return *area;
  if (radius) return area_of_radius(*radius);
  throw Error(ErrorCode::malformed_document, "circle without area or radius");
}

std::vector<double> InstanceDocument::areas() const {
  std::vector<double> out;
  out.reserve(circles.size());
  for (const auto& c : circles) out.push_back(c.to_area());
  return out;
}

json to_json(const ContainerSpec& spec) {
  if (const auto* sq = std::get_if<SquareSpec>(&spec)) {
    return {{"type", "square"}, {"side", sq->side}};
  }
  const auto& t = std::get<TriangleSpec>(spec);
  json j{{"type", "triangle"}};
  if (t.sides) j["sides"] = *t.sides;
  if (t.vertices) j["vertices"] = vertices_to_json(*t.vertices);
  return j;
}

ContainerSpec container_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    bad_document("container must be an object with a 'type'");
  }
  const auto type = j.at("type").get<std::string>();
  if (type == "square") return SquareSpec{number_field(j, "side")};
  if (type != "triangle") bad_document("unknown container type '" + type + "'");
  TriangleSpec t;
  if (j.contains("sides")) {
    const auto& s = j.at("sides");
    if (!s.is_array() || s.size() != 3 ||
        !std::all_of(s.begin(), s.end(), [](const json& v) { return v.is_number(); })) {
      bad_document("'sides' must hold three numbers");
    }
    t.sides = std::array<double, 3>{s[0].get<double>(), s[1].get<double>(), s[2].get<double>()};
  }
  if (j.contains("vertices")) t.vertices = vertices_from_json(j.at("vertices"));
  if (t.sides.has_value() == t.vertices.has_value()) {
    bad_document("triangle needs exactly one of 'sides' and 'vertices'");
  }
  return t;
}

json to_json(const InstanceDocument& doc) {
  json circles = json::array();
  for (const auto& c : doc.circles) {
    circles.push_back(c.area ? json{{"area", *c.area}} : json{{"radius", *c.radius}});
  }
  json j{{"container", to_json(doc.container)}, {"circles", std::move(circles)}};
  if (doc.min_size) j["min_size"] = *doc.min_size;
  return j;
}

InstanceDocument instance_from_json(const json& j, const std::optional<ContainerSpec>& container) {
  InstanceDocument doc;
  const json* circles = nullptr;
  if (j.is_array()) {
    circles = &j;
  } else if (j.is_object()) {
    if (!j.contains("circles")) bad_document("instance needs a 'circles' list");
    circles = &j.at("circles");
    if (j.contains("container")) doc.container = container_from_json(j.at("container"));
    else if (!container) bad_document("instance needs a container");
    doc.min_size = optional_number(j, "min_size");
    if (doc.min_size && !(*doc.min_size >= 0.0)) bad_document("'min_size' must be nonnegative");
  } else {
    bad_document("instance must be a JSON object or array");
  }
  if (container) doc.container = *container;
  else if (j.is_array()) bad_document("a bare circle list needs --container");
  if (!circles->is_array()) bad_document("'circles' must be a list");
  for (const auto& c : *circles) doc.circles.push_back(circle_from_json(c));
  return doc;
}

json to_json(const PackingDocument& doc) {
  json placements = json::array();
  for (const auto& p : doc.placements) {
    json e{{"x", p.x}, {"y", p.y}, {"radius", p.radius}, {"input_index", p.input_index}};
    if (p.area) e["area"] = *p.area;
    if (p.parent) e["parent"] = *p.parent;
    placements.push_back(std::move(e));
  }
  json subs = json::array();
  for (const auto& s : doc.subcontainers) {
    json e{{"vertices", vertices_to_json(s.vertices)},
           {"rounding_radius", s.rounding_radius},
           {"depth", s.depth}};
    if (s.parent) e["parent"] = *s.parent;
    subs.push_back(std::move(e));
  }
  return {{"container", to_json(doc.container)},
          {"placements", std::move(placements)},
          {"subcontainers", std::move(subs)},
          {"density_used", doc.density_used},
          {"critical_density", doc.critical_density}};
}

PackingDocument packing_from_json(const json& j) {
  if (!j.is_object() || !j.contains("container") || !j.contains("placements")) {
    bad_document("packing document needs 'container' and 'placements'");
  }
  PackingDocument doc;
  doc.container = container_from_json(j.at("container"));
  if (!j.at("placements").is_array()) bad_document("'placements' must be a list");
  for (const auto& e : j.at("placements")) {
    if (!e.is_object()) bad_document("placement must be an object");
    Placement p;
    p.x = number_field(e, "x");
    p.y = number_field(e, "y");
    p.radius = number_field(e, "radius");
    const auto index = optional_int(e, "input_index");
    if (!index) bad_document("placement needs 'input_index'");
    p.input_index = *index;
    p.area = optional_number(e, "area");
    p.parent = optional_int(e, "parent");
    doc.placements.push_back(p);
  }
  if (j.contains("subcontainers")) {
    if (!j.at("subcontainers").is_array()) bad_document("'subcontainers' must be a list");
    for (const auto& e : j.at("subcontainers")) {
      if (!e.is_object() || !e.contains("vertices")) bad_document("subcontainer needs vertices");
      Subcontainer s;
      s.vertices = vertices_from_json(e.at("vertices"));
      s.rounding_radius = number_field(e, "rounding_radius");
      s.depth = optional_int(e, "depth").value_or(1);
      s.parent = optional_int(e, "parent");
      doc.subcontainers.push_back(s);
    }
  }
  doc.density_used = optional_number(j, "density_used").value_or(0.0);
  doc.critical_density = optional_number(j, "critical_density").value_or(0.0);
  return doc;
}

std::string serialize(const InstanceDocument& doc) { return to_json(doc).dump(2) + "\n"; }
std::string serialize(const PackingDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace {
json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad_document(std::string("invalid JSON: ") + e.what());
  }
}
}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  return instance_from_json(parse_json(text));
}

PackingDocument parse_packing(std::string_view text) { return packing_from_json(parse_json(text)); }

PackingDocument to_document(const Packing& packing, const ContainerSpec& echo) {
  PackingDocument doc;
  doc.container = echo;
  std::vector<int> sub_index(packing.nodes.size(), -1);
  auto parent_of = [&](const PackingNode& node) {
    return node.parent <= 0 ? -1 : sub_index[static_cast<std::size_t>(node.parent)];
  };
  for (std::size_t i = 0; i < packing.nodes.size(); ++i) {
    const PackingNode& node = packing.nodes[i];
    if (const auto* hat = std::get_if<Hat>(&node.shape)) {
      sub_index[i] = static_cast<int>(doc.subcontainers.size());
      doc.subcontainers.push_back(
          {hat->triangle.vertices(), hat->rounding_radius, node.depth, parent_of(node)});
    }
  }
  double total = 0.0;
  for (const PackingNode& node : packing.nodes) {
    if (const auto* c = std::get_if<Circle>(&node.shape)) {
      doc.placements.push_back({c->center.x, c->center.y, c->radius, node.input_index,
                                node.input_area, parent_of(node)});
      total += node.input_area;
    }
  }
  std::sort(doc.placements.begin(), doc.placements.end(),
            [](const Placement& l, const Placement& r) { return l.input_index < r.input_index; });
  const Container container = packing.container();
  doc.density_used = total / container_area(container);
  doc.critical_density = critical_density(container);
  return doc;
}

Packing to_packing(const PackingDocument& doc) {
  const Container container = to_container(doc.container);
  const bool tree =
      std::all_of(doc.placements.begin(), doc.placements.end(),
                  [](const Placement& p) { return p.parent.has_value(); }) &&
      std::all_of(doc.subcontainers.begin(), doc.subcontainers.end(),
                  [](const Subcontainer& s) { return s.parent.has_value(); });

  Packing packing;
  packing.input_areas.assign(doc.placements.size(), 0.0);
  auto leaf = [&packing](const Placement& p) {
    PackingNode node;
    node.shape = Circle{{p.x, p.y}, p.radius};
    node.input_index = p.input_index;
    node.input_area = p.area.value_or(area_of_radius(p.radius));
    if (p.input_index >= 0 && static_cast<std::size_t>(p.input_index) < packing.input_areas.size()) {
      packing.input_areas[static_cast<std::size_t>(p.input_index)] = node.input_area;
    }
    return node;
  };

  const std::size_t subs = tree ? doc.subcontainers.size() : 0;
  packing.nodes.resize(1 + subs + doc.placements.size());
  std::visit([&packing](const auto& c) { packing.nodes[0].shape = c; }, container);
  for (std::size_t k = 0; k < subs; ++k) {
    const Subcontainer& s = doc.subcontainers[k];
    try {
      packing.nodes[1 + k].shape = Hat{Triangle(s.vertices), s.rounding_radius};
    } catch (const Error& e) {
      bad_document("subcontainer " + std::to_string(k) + ": " + e.what());
    }
  }
  for (std::size_t k = 0; k < doc.placements.size(); ++k) {
    packing.nodes[1 + subs + k] = leaf(doc.placements[k]);
  }

  auto attach = [&](std::size_t node, std::optional<int> parent) {
    const int p = tree ? parent.value_or(-1) : -1;
    if (p < -1 || p >= static_cast<int>(subs)) {
      bad_document("parent index out of range at element " + std::to_string(node));
    }
    const int parent_node = p < 0 ? 0 : 1 + p;
    packing.nodes[node].parent = parent_node;
    packing.nodes[static_cast<std::size_t>(parent_node)].children.push_back(static_cast<int>(node));
  };
  for (std::size_t k = 0; k < subs; ++k) attach(1 + k, doc.subcontainers[k].parent);
  for (std::size_t k = 0; k < doc.placements.size(); ++k) {
    attach(1 + subs + k, doc.placements[k].parent);
  }
  for (std::size_t k = 0; k < subs; ++k) packing.nodes[1 + k].depth = doc.subcontainers[k].depth;
  return packing;
}

}  // namespace splitpack::io
