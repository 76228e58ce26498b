#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "splitpack/error.hpp"
#include "splitpack/io.hpp"

namespace splitpack::io {

using nlohmann::json;

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

json slack_json(double slack) {
  if (std::isfinite(slack)) return slack;
  return slack < 0 ? "-inf" : "inf";
}

}  // namespace

DecideResult decide(const InstanceDocument& instance) {
  const Container container = to_container(instance.container);
  const double capacity = critical_area(container);
  const auto areas = instance.areas();
  const CircleSet circles = CircleSet::from_areas(areas);
  DecideResult result;
  result.ratio = circles.combined() / capacity;
  result.packable = circles.combined() <= capacity * (1.0 + kCapacityTolerance);
  if (instance.min_size && !circles.empty() && circles.minimum() < *instance.min_size) {
    result.packable = false;
  }
  return result;
}

PackingDocument pack_instance(const InstanceDocument& instance, PackStats* stats) {
  const auto areas = instance.areas();
  PackRequest request{to_container(instance.container), CircleSet::from_areas(areas),
                      instance.min_size.value_or(0.0)};
  PackResult result = pack(request);
  if (stats) *stats = result.stats;
  return to_document(result.packing, instance.container);
}

ApproxResult approx(const std::vector<double>& areas, const ContainerSpec& family) {
  const CircleSet circles = CircleSet::from_areas(areas);
  const Container container = min_container(circles, to_container(family));
  PackResult result = pack(PackRequest{container, circles, 0.0});
  ApproxResult out;
  out.container = to_spec(container);
  out.packing = to_document(result.packing, out.container);
  out.lower_bound = circles.combined();
  out.ratio = container_area(container) / out.lower_bound;
  return out;
}

Distribution parse_distribution(std::string_view name) {
  if (name == "equal") return Distribution::equal;
  if (name == "geometric") return Distribution::geometric;
  if (name == "uniform") return Distribution::uniform;
  throw Error(ErrorCode::invalid_parameter,
              "distribution must be equal, geometric or uniform");
}

const char* to_string(Distribution d) noexcept {
  switch (d) {
    case Distribution::equal: return "equal";
    case Distribution::geometric: return "geometric";
    case Distribution::uniform: return "uniform";
  }
  return "unknown";
}

InstanceDocument generate(const GenOptions& options) {
  if (options.count < 1) throw Error(ErrorCode::invalid_parameter, "need at least one circle");
  if (!(options.target_ratio > 0.0 && options.target_ratio <= 1.0)) {
    throw Error(ErrorCode::invalid_parameter, "target ratio must lie in (0, 1]");
  }
  const double target = options.target_ratio * critical_area(to_container(options.container));
  const auto n = static_cast<std::size_t>(options.count);
  std::mt19937_64 rng(options.seed);

  std::vector<double> raw(n, 1.0);
  switch (options.distribution) {
    case Distribution::equal:
      break;
    case Distribution::uniform:
      for (auto& v : raw) v = 0.02 + 0.98 * unit_uniform(rng);
      break;
    case Distribution::geometric: {
      // Ratio chosen so the smallest circle is between 1e-3 and 1e-6 of the
      // largest.
      const double span = std::log(1e-3) * (1.0 + unit_uniform(rng));
      const double q = std::exp(span / static_cast<double>(std::max<std::size_t>(n - 1, 1)));
      double v = 1.0;
      for (auto& r : raw) {
        r = v;
        v *= q;
      }
      for (std::size_t i = n; i > 1; --i) {
        std::swap(raw[i - 1], raw[static_cast<std::size_t>(unit_uniform(rng) * i)]);
      }
      break;
    }
  }
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  InstanceDocument doc;
  doc.container = options.container;
  for (double v : raw) doc.circles.push_back({v * (target / total), std::nullopt});
  return doc;
}

VerificationReport verify_document(const PackingDocument& doc, double tolerance,
                                   const VerifyOptions& options) {
  const Packing packing = to_packing(doc);
  if (!(tolerance > 0.0)) tolerance = default_tolerance(packing);
  return verify(packing, tolerance, options);
}

json report_to_json(const VerificationReport& report, const Packing& packing) {
  auto describe = [&packing](int node) -> json {
    if (node < 0 || static_cast<std::size_t>(node) >= packing.nodes.size()) return nullptr;
    const PackingNode& n = packing.nodes[static_cast<std::size_t>(node)];
    if (n.is_circle()) return {{"node", node}, {"input_index", n.input_index}};
    return {{"node", node}};
  };
  json checks = json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"kind", to_string(c.kind)},
                      {"first", describe(c.first)},
                      {"second", describe(c.second)},
                      {"slack", slack_json(c.slack)}});
  }
  json counts = json::object();
  for (std::size_t k = 0; k < kCheckKindCount; ++k) {
    counts[to_string(static_cast<CheckKind>(k))] = report.counts[k];
  }
  return {{"passed", report.passed},
          {"tolerance", report.tolerance},
          {"worst_slack", slack_json(report.worst_slack)},
          {"failures", report.failures},
          {"counts", std::move(counts)},
          {"checks", std::move(checks)}};
}

}  // namespace splitpack::io
