#include <cmath>
#include <cstdlib>

#include "cli.hpp"
#include "json.hpp"
#include "symplectica/clifford.hpp"
#include "symplectica/dirac.hpp"
#include "symplectica/errors.hpp"

namespace symplectica::cli {

namespace {

using nlohmann::json;

std::vector<double> flatten(const json& j, std::size_t n, const char* what) {
  std::vector<double> out;
  if (!j.is_array()) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be an array");
  if (j.size() == n && j[0].is_array()) {
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != n) throw Error(ErrorKind::invalid_argument, std::string(what) + " has a ragged row");
      for (const auto& x : row) out.push_back(x.get<double>());
    }
  } else {
    for (const auto& x : j) out.push_back(x.get<double>());
  }
  if (out.size() != n * n)
    throw Error(ErrorKind::invalid_argument, std::string(what) + " does not match the order " + std::to_string(n));
  for (double x : out)
    if (!std::isfinite(x)) throw Error(ErrorKind::invalid_argument, std::string(what) + " has a non-finite entry");
  return out;
}

}  // namespace

BeamFile parse_beam_file(const std::string& text) {
  BeamFile f;
  try {
    const json j = json::parse(text);
    f.dof = j.at("dof").get<int>();
    if (f.dof < 1 || f.dof > 3) throw Error(ErrorKind::invalid_argument, "dof must be 1, 2 or 3");
    const std::size_t n = static_cast<std::size_t>(f.order());
    if (j.contains("components")) {
      if (f.dof != 2) throw Error(ErrorKind::invalid_argument, "components are only defined for dof 2");
      const std::vector<double> c = flatten(j.at("components"), 4, "components");
      CliffordElement4 z;
      for (std::size_t k = 0; k < 16; ++k) z.comp.a[k] = c[k];
      const Mat4 m = compose4(z);
      f.matrix.assign(m.a.begin(), m.a.end());
      f.from_components = true;
    } else {
      f.matrix = flatten(j.at("matrix"), n, "matrix");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("bad beam file: ") + e.what());
  }
  const std::size_t n = static_cast<std::size_t>(f.order());
  double scale = 1.0, asym = 0.0;
  for (double x : f.matrix) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) asym = std::max(asym, std::abs(f.matrix[i * n + k] - f.matrix[k * n + i]));
  if (asym > 1e-9 * scale) throw Error(ErrorKind::invalid_argument, "matrix is not symmetric");
  return f;
}

std::string dump_beam_file(const BeamFile& f) {
  const std::size_t n = static_cast<std::size_t>(f.order());
  nlohmann::ordered_json j;
  j["dof"] = f.dof;
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) rows.push_back(std::vector<double>(f.matrix.begin() + i * n, f.matrix.begin() + (i + 1) * n));
  j["matrix"] = rows;
  return j.dump(2) + "\n";
}

double residual_tolerance() {
  const char* s = std::getenv("SYMPLECTICA_TOL");
  if (!s || !*s) return 1e-6;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw Error(ErrorKind::invalid_argument, "SYMPLECTICA_TOL must be a positive number");
  return v;
}

}  // namespace symplectica::cli
