// splitpack: decide, pack, approximate, verify and generate circle packings.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 invalid input, 3 unsupported container.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitpack/error.hpp"
#include "splitpack/io.hpp"

namespace {

using namespace splitpack;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUnsupported = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_parameter, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_parameter, "cannot write '" + path + "'");
  out << text;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::malformed_document, std::string("invalid JSON: ") + e.what());
  }
}

struct Options {
  std::string container;
  std::string circles = "-";
  std::string input = "-";
  std::string out;
  std::string format = "json";
  double min_size = -1.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  int count = 1;
  double ratio = 1.0;
  std::string distribution = "uniform";
};

io::InstanceDocument load_instance(const Options& opt) {
  std::optional<io::ContainerSpec> container;
  if (!opt.container.empty()) container = io::parse_container_flag(opt.container);
  io::InstanceDocument doc = io::instance_from_json(parse_json_text(read_input(opt.circles)), container);
  if (opt.min_size >= 0.0) doc.min_size = opt.min_size;
  return doc;
}

int run_decide(const Options& opt) {
  const auto result = io::decide(load_instance(opt));
  const json j{{"packable", result.packable ? "yes" : "unknown"}, {"ratio", result.ratio}};
  write_output(opt.out, j.dump(2) + "\n");
  return 0;
}

int run_pack(const Options& opt) {
  const io::InstanceDocument instance = load_instance(opt);
  const io::DecideResult decision = io::decide(instance);
  if (!decision.packable) {
    std::cerr << "splitpack: not packable by the area guarantee (ratio " << decision.ratio
              << " of the critical area)\n";
    return kExitInvalidInput;
  }
  const io::PackingDocument doc = io::pack_instance(instance);
  write_output(opt.out, opt.format == "svg" ? io::render_svg(doc) : io::serialize(doc));
  return 0;
}

int run_approx(const Options& opt) {
  const io::InstanceDocument instance = load_instance(opt);
  const io::ApproxResult result = io::approx(instance.areas(), instance.container);
  if (opt.format == "svg") {
    write_output(opt.out, io::render_svg(result.packing));
    return 0;
  }
  const json j{{"container", io::to_json(result.container)},
               {"lower_bound", result.lower_bound},
               {"ratio", result.ratio},
               {"packing", io::to_json(result.packing)}};
  write_output(opt.out, j.dump(2) + "\n");
  return 0;
}

int run_verify(const Options& opt) {
  const io::PackingDocument doc = io::packing_from_json(parse_json_text(read_input(opt.input)));
  const Packing packing = io::to_packing(doc);
  const double tolerance = opt.tolerance > 0.0 ? opt.tolerance : default_tolerance(packing);
  VerifyOptions vopt;
  vopt.record_all = packing.circle_count() <= 200;
  const VerificationReport report = verify(packing, tolerance, vopt);
  write_output(opt.out, io::report_to_json(report, packing).dump(2) + "\n");
  if (!report.passed) {
    for (const Check& c : report.checks) {
      if (c.slack < -tolerance) {
        std::cerr << "splitpack: " << to_string(c.kind) << " check failed (nodes " << c.first
                  << ", " << c.second << ", slack " << c.slack << ")\n";
        break;
      }
    }
    return kExitVerifyFailed;
  }
  return 0;
}

int run_gen(const Options& opt) {
  io::GenOptions g;
  g.count = opt.count;
  g.target_ratio = opt.ratio;
  g.seed = opt.seed;
  g.distribution = io::parse_distribution(opt.distribution);
  g.container = io::parse_container_flag(opt.container.empty() ? "square:1" : opt.container);
  write_output(opt.out, io::serialize(io::generate(g)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split Packing: worst-case optimal circle packing into squares and triangles"};
  app.require_subcommand(1);
  Options opt;

  auto add_container = [&opt](CLI::App* cmd) {
    cmd->add_option("--container", opt.container, "square:SIDE or triangle:X,Y,Z");
  };
  auto add_circles = [&opt](CLI::App* cmd) {
    cmd->add_option("--circles", opt.circles, "instance or circle list JSON (FILE or -)");
    cmd->add_option("--min-size", opt.min_size, "promised minimum circle area");
  };
  auto add_out = [&opt](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };
  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json or svg")
        ->check(CLI::IsMember({"json", "svg"}));
  };

  auto* decide = app.add_subcommand("decide", "sufficient area condition: yes or unknown");
  add_container(decide);
  add_circles(decide);
  add_out(decide);

  auto* pack = app.add_subcommand("pack", "pack circles into the container");
  add_container(pack);
  add_circles(pack);
  add_out(pack);
  add_format(pack);

  auto* approx = app.add_subcommand("approx", "smallest container of the family that packs");
  add_container(approx);
  add_circles(approx);
  add_out(approx);
  add_format(approx);

  auto* verify = app.add_subcommand("verify", "check a packing document");
  verify->add_option("input", opt.input, "packing document (FILE or -)");
  verify->add_option("--tolerance", opt.tolerance, "absolute tolerance (default 1e-9 x diameter)");
  add_out(verify);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  add_container(gen);
  gen->add_option("-n,--count", opt.count, "number of circles")->check(CLI::PositiveNumber);
  gen->add_option("--ratio", opt.ratio, "combined area as a fraction of the critical area");
  gen->add_option("--seed", opt.seed, "random seed");
  gen->add_option("--distribution", opt.distribution, "equal, geometric or uniform")
      ->check(CLI::IsMember({"equal", "geometric", "uniform"}));
  add_out(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (*decide) return run_decide(opt);
    if (*pack) return run_pack(opt);
    if (*approx) return run_approx(opt);
    if (*verify) return run_verify(opt);
    if (*gen) return run_gen(opt);
  } catch (const Error& e) {
    std::cerr << "splitpack: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::unsupported_container ? kExitUnsupported : kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "splitpack: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
