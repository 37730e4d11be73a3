#include "symplectica/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "json.hpp"

#include "symplectica/errors.hpp"

namespace symplectica {

namespace {

struct P2 {
  double x, y;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// 1-axis up, 2-axis to the left, 3-axis to the right; camera slightly above.
P2 project(const Vec3& p, double azimuth_deg, double elevation_deg) {
  const double a = azimuth_deg * std::numbers::pi / 180.0;
  const double e = elevation_deg * std::numbers::pi / 180.0;
  const double gx = (p[2] - p[1]) / std::numbers::sqrt2;
  const double gz = (p[2] + p[1]) / std::numbers::sqrt2;
  const double x = gx * std::cos(a) + gz * std::sin(a);
  const double z = -gx * std::sin(a) + gz * std::cos(a);
  return {x, p[0] * std::cos(e) - z * std::sin(e)};
}

struct Pane {
  std::string* out;
  double cx, cy, unit, az, el;

  P2 at(const Vec3& p) const {
    const P2 q = project(p, az, el);
    return {cx + unit * q.x, cy - unit * q.y};
  }

  void line(const Vec3& a, const Vec3& b, const char* stroke, double width, const char* marker) const {
    const P2 p = at(a), q = at(b);
    *out += "<line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" + fmt(q.x) + "\" y2=\"" + fmt(q.y) +
            "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"";
    if (marker) *out += std::string(" marker-end=\"url(#") + marker + ")\"";
    *out += "/>\n";
  }

  void label(const Vec3& a, const char* text) const {
    const P2 p = at(a);
    *out += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\" font-size=\"12\" text-anchor=\"middle\">" + text + "</text>\n";
  }
};

const char* kColors[3] = {"#d62728", "#2ca02c", "#1f77b4"};
const char* kMarkers[3] = {"head-r", "head-g", "head-b"};

}  // namespace

SceneDots recompute_dots(const Scene& sc) {
  return {dot(sc.v1, sc.v2), dot(sc.v1, sc.v3), dot(sc.v2, sc.v3)};
}

Scene scene_of(const BeamMatrix4& s) {
  Scene sc;
  sc.sigma00 = s.s;
  sc.v1 = s.v1;
  sc.v2 = s.v2;
  sc.v3 = s.v3;
  sc.dots = recompute_dots(sc);
  return sc;
}

std::string render_svg(const Scene& sc, const RenderOptions& opt) {
  const int w = opt.pane_width, h = opt.pane_height;
  const int head = 28;
  double extent = std::max({std::abs(sc.sigma00), norm(sc.v1), norm(sc.v2), norm(sc.v3), 1.0});
  const double unit = opt.unit > 0 ? opt.unit : 0.4 * std::min(w, h) / extent;
  const double axis_len = 0.45 * std::min(w, h) / unit;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(2 * w) + "\" height=\"" +
         std::to_string(h + head) + "\" viewBox=\"0 0 " + std::to_string(2 * w) + " " + std::to_string(h + head) + "\">\n";
  out += "<defs>\n";
  for (int i = 0; i < 3; ++i)
    out += std::string("<marker id=\"") + kMarkers[i] +
           "\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\" markerUnits=\"userSpaceOnUse\">"
           "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"" + kColors[i] + "\"/></marker>\n";
  out += "</defs>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(2 * w) + "\" height=\"" + std::to_string(h + head) + "\" fill=\"white\"/>\n";

  std::string heading = "(R,G)=" + fmt(sc.dots.rg) + "  (R,B)=" + fmt(sc.dots.rb) + "  (G,B)=" + fmt(sc.dots.gb);
  if (!opt.title.empty()) heading = opt.title + "  " + heading;
  out += "<text x=\"" + std::to_string(w) + "\" y=\"18\" font-size=\"14\" font-family=\"monospace\" text-anchor=\"middle\">" +
         heading + "</text>\n";

  const double azimuths[2] = {sc.azimuth_left, sc.azimuth_right};
  for (int k = 0; k < 2; ++k) {
    out += "<g class=\"pane\" id=\"pane" + std::to_string(k) + "\">\n";
    const Pane pane{&out, w * (k + 0.5), head + 0.55 * h, unit, azimuths[k], opt.elevation};
    const Vec3 o{0, 0, 0};
    for (int ax = 0; ax < 3; ++ax) {
      Vec3 tip{0, 0, 0};
      tip[ax] = axis_len;
      pane.line(-tip, tip, "#000000", 0.75, nullptr);
      const char* names[3] = {"1", "2", "3"};
      pane.label(tip * 1.08, names[ax]);
    }
    pane.line(o, Vec3{sc.sigma00, 0, 0}, "#888888", 6.0, nullptr);
    const Vec3* vs[3] = {&sc.v1, &sc.v2, &sc.v3};
    for (int i = 0; i < 3; ++i)
      if (norm(*vs[i]) > 0) pane.line(o, *vs[i], kColors[i], 2.0, kMarkers[i]);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string scene_to_json(const Scene& sc) {
  nlohmann::ordered_json j;
  j["sigma00"] = sc.sigma00;
  j["v1"] = sc.v1;
  j["v2"] = sc.v2;
  j["v3"] = sc.v3;
  j["dots"] = {{"rg", sc.dots.rg}, {"rb", sc.dots.rb}, {"gb", sc.dots.gb}};
  return j.dump(2);
}

Scene scene_from_json(const std::string& text) {
  Scene sc;
  try {
    const auto j = nlohmann::json::parse(text);
    sc.sigma00 = j.at("sigma00").get<double>();
    sc.v1 = j.at("v1").get<Vec3>();
    sc.v2 = j.at("v2").get<Vec3>();
    sc.v3 = j.at("v3").get<Vec3>();
    const auto& d = j.at("dots");
    sc.dots = {d.at("rg").get<double>(), d.at("rb").get<double>(), d.at("gb").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("bad scene json: ") + e.what());
  }
  return sc;
}

}  // namespace symplectica
