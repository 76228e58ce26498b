#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "splitpack/io.hpp"

namespace splitpack::io {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string path_data(const std::vector<Point>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M" : " L");
    d += num(pts[i].x) + " " + num(pts[i].y);
  }
  return d + " Z";
}

}  // namespace

std::string render_svg(const PackingDocument& doc) {
  const std::vector<Point> outline = container_polygon(to_container(doc.container));
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (Point p : outline) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.02 * extent;
  const double stroke = 0.002 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" +
         num(std::round(800.0 * (max_y - min_y + 2 * margin) / (max_x - min_x + 2 * margin))) +
         "\" viewBox=\"" + num(min_x - margin) + " " + num(-max_y - margin) + " " +
         num(max_x - min_x + 2 * margin) + " " + num(max_y - min_y + 2 * margin) + "\">\n";
  // Flip y so the document's coordinates render upright.
  out += "<g transform=\"scale(1,-1)\" stroke-width=\"" + num(stroke) + "\">\n";

  std::string container = "<polygon class=\"container\" fill=\"white\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) {
    container += (i ? " " : "") + num(outline[i].x) + "," + num(outline[i].y);
  }
  out += container + "\"/>\n";

  for (const Subcontainer& s : doc.subcontainers) {
    const Hat hat{Triangle(s.vertices), s.rounding_radius};
    out += "<path class=\"subcontainer\" fill=\"#d9d9d9\" stroke=\"#a0a0a0\" d=\"" +
           path_data(hat.boundary(12)) + "\"/>\n";
  }
  for (const Placement& p : doc.placements) {
    out += "<circle fill=\"#4d4d4d\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
           num(p.radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace splitpack::io
