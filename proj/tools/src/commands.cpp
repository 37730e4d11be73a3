#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "symplectica/bunch.hpp"
#include "symplectica/dirac.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/pauli.hpp"
#include "symplectica/sampling.hpp"
#include "symplectica/smallmat.hpp"
#include "symplectica/viz.hpp"

namespace symplectica::cli {

namespace {

using ojson = nlohmann::ordered_json;

template <class M>
ojson rows(const M& m) {
  ojson r = ojson::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < m.cols; ++k) row.push_back(m(i, k));
    r.push_back(row);
  }
  return r;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  f << text;
}

int exit_code_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument:
    case ErrorKind::singular_matrix: return invalid_input;
    case ErrorKind::nonphysical: return nonphysical_beam;
    case ErrorKind::degenerate_direction:
    case ErrorKind::degenerate_emittance:
    case ErrorKind::degenerate_eigvec: return degenerate_direction;
  }
  return invalid_input;
}

double rel(double x, double scale) { return x / std::max(1.0, scale); }

// Residual block shared by every recipe report. Returns true when all are within tol.
bool finish_residuals(ojson& report, const std::map<std::string, double>& res, double tol) {
  ojson r;
  bool good = true;
  for (const auto& [k, v] : res) {
    r[k] = v;
    if (!(v <= tol)) good = false;
  }
  report["residuals"] = r;
  report["tolerance"] = tol;
  report["ok"] = good;
  return good;
}

ojson step_json(const ElementaryTransform& t) {
  ojson s;
  s["kind"] = to_string(t.kind);
  if (t.kind == TransformKind::scale) {
    s["factors"] = t.factors;
  } else {
    if (t.kind != TransformKind::gamma_rot) s["axis"] = t.axis;
    s["angle"] = t.angle;
  }
  s["representative"] = rows(t.representative());
  return s;
}

ojson step_json(const PauliTransform& t) {
  ojson s;
  s["kind"] = t.kind == PauliKind::boost ? "boost" : "rotation";
  if (t.kind == PauliKind::boost) s["axis"] = t.axis;
  s["angle"] = t.angle;
  s["representative"] = rows(t.representative());
  return s;
}

double normal_form_residual(const Mat4& m) {
  double r = pattern_residual(m, diagonal_pattern());
  r = std::max(r, std::abs(m(0, 0) - m(1, 1)));
  return std::max(r, std::abs(m(2, 2) - m(3, 3)));
}

int report_recipe4(const std::string& command, const Mat4& input, const RecipeResult& rr, const Pattern* pattern,
                   bool normal, std::ostream& out) {
  const BeamMatrix4 in = BeamMatrix4::from_matrix(input);
  const Emittances4 e_in = emittances4(in);
  const Emittances4 e_out = emittances4(rr.beam);
  const Mat4 result = rr.beam.representative();
  const double scale = max_abs(input);

  ojson rep;
  rep["command"] = command;
  rep["dof"] = 2;
  rep["input"] = {{"matrix", rows(input)}, {"components", rows(in.components().comp)}, {"emittances", {e_in.eps1, e_in.eps2}}};
  ojson steps = ojson::array();
  for (const auto& t : rr.pipeline.steps) steps.push_back(step_json(t));
  rep["steps"] = steps;
  ojson stages = ojson::array();
  for (const auto& s : rr.stages) stages.push_back(rows(s.components().comp));
  rep["stages"] = stages;
  rep["output"] = {{"matrix", rows(result)}, {"components", rows(rr.beam.components().comp)}, {"emittances", {e_out.eps1, e_out.eps2}}};
  rep["map"] = rows(rr.pipeline.map);
  rep["normalizer"] = rows(rr.pipeline.normalizer());

  std::map<std::string, double> res;
  res["symplectic"] = rr.pipeline.symplectic_residual();
  res["reconstruction"] = rel(max_abs_diff(rr.pipeline.map * input * rr.pipeline.map.transpose(), result), scale);
  res["emittance"] = rel(std::max(std::abs(e_in.eps1 - e_out.eps1), std::abs(e_in.eps2 - e_out.eps2)), scale);
  if (pattern) res["pattern"] = rel(pattern_residual(result, *pattern), scale);
  if (normal) res["normal_form"] = rel(normal_form_residual(result), scale);
  const bool good = finish_residuals(rep, res, residual_tolerance());
  out << rep.dump(2) << "\n";
  return good ? ok : residual_too_large;
}

BeamFile load(const std::string& path, std::istream& in) { return parse_beam_file(read_input(path, in)); }

int cmd_invariants(const std::string& path, std::istream& in, std::ostream& out) {
  const BeamFile f = load(path, in);
  ojson rep;
  rep["command"] = "invariants";
  rep["dof"] = f.dof;
  bool physical = false;
  ojson eps = ojson::array();
  double det = 0;
  if (f.dof == 1) {
    const Mat2 m = f.as<2>();
    det = det_oracle(m);
    physical = is_positive_definite(m);
    if (physical) eps.push_back(emittance2(BeamMatrix2::from_matrix(m)));
  } else if (f.dof == 2) {
    const BeamMatrix4 b = BeamMatrix4::from_matrix(f.as<4>());
    det = det_sym4(b);
    physical = is_physical(b);
    if (physical) {
      const Emittances4 e = emittances4(b);
      eps = {e.eps1, e.eps2};
    }
    rep["components"] = rows(b.components().comp);
  } else {
    const Mat6 m = f.as<6>();
    det = det_oracle(m);
    physical = is_positive_definite(m);
    if (physical)
      for (double e : emittances6(m)) eps.push_back(e);
  }
  rep["symmetric"] = true;
  rep["positive_definite"] = physical;
  rep["physical"] = physical;
  rep["determinant"] = det;
  rep["emittances"] = eps;
  out << rep.dump(2) << "\n";
  return physical ? ok : nonphysical_beam;
}

int cmd_normalize(const std::string& path, const std::string& strategy, std::istream& in, std::ostream& out) {
  const BeamFile f = load(path, in);
  const double tol = residual_tolerance();
  if (f.dof == 1) {
    const Mat2 m = f.as<2>();
    if (!is_positive_definite(m)) throw Error(ErrorKind::nonphysical, "beam matrix is not positive definite");
    const auto st = strategy == "direct" ? Normalize2Strategy::direct : Normalize2Strategy::two_step;
    const BeamMatrix2 b = BeamMatrix2::from_matrix(m);
    const auto [pipe, res2] = normalize2(b, st);
    const double eps = emittance2(b);
    const Mat2 result = res2.representative();
    ojson rep;
    rep["command"] = "normalize";
    rep["dof"] = 1;
    rep["input"] = {{"matrix", rows(m)}, {"emittances", {eps}}};
    ojson steps = ojson::array();
    for (const auto& t : pipe.steps) steps.push_back(step_json(t));
    rep["steps"] = steps;
    rep["output"] = {{"matrix", rows(result)}, {"components", {res2.sigma0, res2.v[0], res2.v[1]}}};
    rep["map"] = rows(pipe.map);
    rep["normalizer"] = rows(pipe.normalizer());
    std::map<std::string, double> r;
    r["symplectic"] = symplectic_residual(pipe.map);
    r["reconstruction"] = rel(max_abs_diff(pipe.map * m * pipe.map.transpose(), result), max_abs(m));
    r["normal_form"] = rel(max_abs_diff(result, Mat2::identity() * eps), max_abs(m));
    const bool good = finish_residuals(rep, r, tol);
    out << rep.dump(2) << "\n";
    return good ? ok : residual_too_large;
  }
  if (f.dof == 2) {
    const Mat4 m = f.as<4>();
    const auto st = strategy == "direct" ? DiagStrategy::direct : DiagStrategy::block_first;
    return report_recipe4("normalize", m, normalize4(BeamMatrix4::from_matrix(m), st), nullptr, true, out);
  }
  const Mat6 m = f.as<6>();
  const NormalDecomposition<3> nd = normalize6(m);
  const Mat6 map = symplectic_inverse(nd.n);
  ojson rep;
  rep["command"] = "normalize";
  rep["dof"] = 3;
  rep["input"] = {{"matrix", rows(m)}, {"emittances", nd.emittances}};
  ojson step;
  step["kind"] = "eigen";
  step["representative"] = rows(map);
  rep["steps"] = ojson::array({step});
  rep["output"] = {{"matrix", rows(nd.normal)}, {"emittances", nd.emittances}};
  rep["map"] = rows(map);
  rep["normalizer"] = rows(nd.n);
  std::map<std::string, double> r;
  r["symplectic"] = symplectic_residual(nd.n);
  r["reconstruction"] = rel(max_abs_diff(nd.n * nd.normal * nd.n.transpose(), m), max_abs(m));
  r["imaginary"] = nd.imag_residue;
  const bool good = finish_residuals(rep, r, tol);
  out << rep.dump(2) << "\n";
  return good ? ok : residual_too_large;
}

Mat4 load4(const std::string& path, std::istream& in) {
  const BeamFile f = load(path, in);
  if (f.dof != 2) throw Error(ErrorKind::invalid_argument, "this command needs a dof 2 beam");
  return f.as<4>();
}

int cmd_decouple(const std::string& path, const std::string& pairing, const std::string& coord, std::istream& in,
                 std::ostream& out) {
  const Mat4 m = load4(path, in);
  const BeamMatrix4 b = BeamMatrix4::from_matrix(m);
  if (!coord.empty()) {
    static const std::map<std::string, Coord> kCoords{{"x", Coord::x}, {"xp", Coord::xp}, {"y", Coord::y}, {"yp", Coord::yp}};
    const Coord c = kCoords.at(coord);
    const Pattern p = zero_pattern(c);
    return report_recipe4("decouple", m, decouple_single(b, c), &p, false, out);
  }
  static const std::map<std::string, Pairing> kPairings{
      {"xx_yy", Pairing::XX_YY}, {"xy_xpyp", Pairing::XY_XpYp}, {"xyp_xpy", Pairing::XYp_XpY}};
  const Pairing pr = kPairings.at(pairing);
  const Pattern p = zero_pattern(pr);
  return report_recipe4("decouple", m, decouple_pair(b, pr), &p, false, out);
}

int cmd_diagonalize(const std::string& path, const std::string& strategy, std::istream& in, std::ostream& out) {
  const Mat4 m = load4(path, in);
  const auto st = strategy == "direct" ? DiagStrategy::direct : DiagStrategy::block_first;
  const Pattern p = diagonal_pattern();
  return report_recipe4("diagonalize", m, diagonalize4(BeamMatrix4::from_matrix(m), st), &p, false, out);
}

std::string step_path(const std::string& out, std::size_t k) {
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  char buf[32];
  std::snprintf(buf, sizeof buf, "_step%02zu", k);
  return has_ext ? out.substr(0, dot) + buf + out.substr(dot) : out + buf + ".svg";
}

int cmd_render(const std::string& path, const std::string& out_path, std::istream& in, std::ostream& out) {
  const std::string text = read_input(path, in);
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("bad input: ") + e.what());
  }
  if (j.contains("stages")) {
    std::vector<BeamMatrix4> beams;
    try {
      const auto comp = [](const ojson& c) {
        CliffordElement4 z;
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t k = 0; k < 4; ++k) z.comp(i, k) = c.at(i).at(k).get<double>();
        return BeamMatrix4::from_components(z);
      };
      beams.push_back(comp(j.at("input").at("components")));
      for (const auto& s : j.at("stages")) beams.push_back(comp(s));
    } catch (const ojson::exception& e) {
      throw Error(ErrorKind::invalid_argument, std::string("bad report: ") + e.what());
    }
    if (out_path.empty() || out_path == "-") throw Error(ErrorKind::invalid_argument, "rendering a report needs --out");
    for (std::size_t k = 0; k < beams.size(); ++k) {
      RenderOptions opt;
      opt.title = k == 0 ? "input" : "step " + std::to_string(k);
      write_output(step_path(out_path, k), render_svg(scene_of(beams[k]), opt), out);
    }
    return ok;
  }
  const BeamFile f = parse_beam_file(text);
  if (f.dof != 2) throw Error(ErrorKind::invalid_argument, "rendering needs a dof 2 beam");
  write_output(out_path, render_svg(scene_of(BeamMatrix4::from_matrix(f.as<4>()))), out);
  return ok;
}

int cmd_gen(int dof, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  Rng rng(seed);
  BeamFile f;
  f.dof = dof;
  if (dof == 1) {
    const Mat2 m = random_physical_matrix<2>(rng);
    f.matrix.assign(m.a.begin(), m.a.end());
  } else if (dof == 2) {
    const Mat4 m = random_physical_beam4(rng).representative();
    f.matrix.assign(m.a.begin(), m.a.end());
  } else {
    const Mat6 m = random_physical_matrix<6>(rng);
    f.matrix.assign(m.a.begin(), m.a.end());
  }
  write_output(out_path, dump_beam_file(f), out);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic normalization and decoupling of beam matrices", "symplectica"};
  app.require_subcommand(1);

  std::string file, strategy, pairing, coord, out_path;
  int dof = 2;
  std::uint64_t seed = 1;

  auto* inv = app.add_subcommand("invariants", "Emittances, determinant and physicality checks");
  inv->add_option("file", file, "Beam file, - for stdin")->required();

  auto* norm = app.add_subcommand("normalize", "Normalize a beam matrix");
  norm->add_option("file", file, "Beam file, - for stdin")->required();
  norm->add_option("--strategy", strategy, "two_step|direct (dof 1), block_first|direct (dof 2)")
      ->check(CLI::IsMember({"two_step", "direct", "block_first"}));

  auto* dec = app.add_subcommand("decouple", "Decouple a pair of planes or a single coordinate");
  dec->add_option("file", file, "Beam file, - for stdin")->required();
  auto* opt_pair = dec->add_option("--pairing", pairing, "xx_yy|xy_xpyp|xyp_xpy")
                       ->transform(CLI::IsMember({"xx_yy", "xy_xpyp", "xyp_xpy"}, CLI::ignore_case));
  auto* opt_coord = dec->add_option("--coord", coord, "x|xp|y|yp")->transform(CLI::IsMember({"x", "xp", "y", "yp"}, CLI::ignore_case));
  opt_pair->excludes(opt_coord);

  auto* diag = app.add_subcommand("diagonalize", "Diagonalize a dof 2 beam matrix");
  diag->add_option("file", file, "Beam file, - for stdin")->required();
  diag->add_option("--strategy", strategy, "block_first|direct")
      ->check(CLI::IsMember({"block_first", "direct"}))
      ->default_val("block_first");

  auto* render = app.add_subcommand("render", "Stereo SVG of a dof 2 beam or of every stage of a report");
  render->add_option("file", file, "Beam file or recipe report, - for stdin")->required();
  render->add_option("--out", out_path, "Output SVG; reports get one file per step");

  auto* gen = app.add_subcommand("gen", "Random physical beam file");
  gen->add_option("--dof", dof, "1, 2 or 3")->check(CLI::Range(1, 3))->default_val(2);
  gen->add_option("--seed", seed, "RNG seed")->default_val(1);
  gen->add_option("--out", out_path, "Output file, default stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }

  try {
    if (inv->parsed()) return cmd_invariants(file, in, out);
    if (norm->parsed()) return cmd_normalize(file, strategy, in, out);
    if (dec->parsed()) {
      if (pairing.empty() == coord.empty()) {
        err << "error: decouple needs exactly one of --pairing or --coord\n";
        return invalid_input;
      }
      return cmd_decouple(file, pairing, coord, in, out);
    }
    if (diag->parsed()) return cmd_diagonalize(file, strategy, in, out);
    if (render->parsed()) return cmd_render(file, out_path, in, out);
    if (gen->parsed()) return cmd_gen(dof, seed, out_path, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_of(e.kind());
  }
  return invalid_input;
}

}  // namespace symplectica::cli
