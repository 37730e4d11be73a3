#pragma once

#include <string>

#include "symplectica/dirac.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

struct SceneDots {
  double rg = 0, rb = 0, gb = 0;
};

struct Scene {
  double sigma00 = 0;
  Vec3 v1{}, v2{}, v3{};  // red, green, blue
  SceneDots dots;
  double azimuth_left = -2.5;  // degrees
  double azimuth_right = 2.5;
};

Scene scene_of(const BeamMatrix4& s);
SceneDots recompute_dots(const Scene& sc);

struct RenderOptions {
  int pane_width = 320;
  int pane_height = 320;
  double unit = 0;  // pixels per unit length, 0 fits the scene
  double elevation = 20.0;  // degrees
  std::string title;
};

std::string render_svg(const Scene& sc, const RenderOptions& opt = {});

std::string scene_to_json(const Scene& sc);
Scene scene_from_json(const std::string& text);

}  // namespace symplectica
