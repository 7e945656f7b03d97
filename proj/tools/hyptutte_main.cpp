// Command-line surface: mesh generation, solving, MVC extraction, morphing,
// verification, and Poincare-disk SVG rendering.
//
// Exit codes: 0 ok, 1 I/O or bad input, 2 verification failure,
// 3 solver failure, 4 label mismatch.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hyptutte/balance.hpp"
#include "hyptutte/io.hpp"
#include "hyptutte/meshing.hpp"
#include "hyptutte/mvc.hpp"
#include "hyptutte/render.hpp"
#include "hyptutte/verify.hpp"

namespace ht = hyptutte;

namespace {

struct SolverFlags {
  ht::SolverConfig cfg;
  std::string config_path;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "text config file (key value per line)");
    app->add_option("--tau", cfg.tau, "step size in (0,1]");
    app->add_option("--eps", cfg.eps, "residual tolerance");
    app->add_option("--max-iters", cfg.max_iters, "sweep budget");
    app->add_option("--backtrack", cfg.backtrack, "step multiplier on rejection");
    app->add_option("--seed", cfg.seed, "seed for perturbation utilities");
  }

  // CLI flags win over the config file.
  ht::SolverConfig resolve(const CLI::App* app) const {
    ht::SolverConfig out = cfg;
    if (config_path.empty()) return out;
    std::ifstream is(config_path);
    if (!is) throw ht::IoError("cannot open config file: " + config_path);
    std::string key;
    while (is >> key) {
      if (key == "tau") {
        double v;
        is >> v;
        if (!app->count("--tau")) out.tau = v;
      } else if (key == "eps") {
        double v;
        is >> v;
        if (!app->count("--eps")) out.eps = v;
      } else if (key == "max_iters") {
        long v;
        is >> v;
        if (!app->count("--max-iters")) out.max_iters = v;
      } else if (key == "backtrack") {
        double v;
        is >> v;
        if (!app->count("--backtrack")) out.backtrack = v;
      } else if (key == "seed") {
        std::uint64_t v;
        is >> v;
        if (!app->count("--seed")) out.seed = v;
      } else {
        throw ht::ParseError("unknown config key: " + key);
      }
      if (!is) throw ht::ParseError("malformed config value for key " + key);
    }
    return out;
  }
};

void print_mesh_stats(const ht::GeodesicMapping& m) {
  const ht::Complex& c = *m.complex;
  std::cout << "vertices " << c.n() << "\nedges " << c.edge_count() << "\nfaces "
            << c.face_count() << "\nchi " << ht::euler_char(c) << "\n";
}

void dump_trace(const ht::SolveTrace& t) {
  std::cerr << "sweeps " << t.sweeps << "\n";
  std::cerr << "final_mu " << ht::format_double(t.final_mu) << "\n";
  size_t n = t.mu_history.size();
  std::cerr << "mu tail:";
  for (size_t k = n > 8 ? n - 8 : 0; k < n; ++k)
    std::cerr << " " << ht::format_double(t.mu_history[k]);
  std::cerr << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"w-balanced geodesic mappings of closed hyperbolic surfaces"};
  app.require_subcommand(1);

  // mesh
  auto* mesh = app.add_subcommand("mesh", "generate the builtin quotient mesh");
  int genus = 2, refine = 0;
  std::string out_path;
  mesh->add_option("--genus", genus, "surface genus (>= 2)");
  mesh->add_option("--refine", refine, "midpoint subdivision rounds");
  mesh->add_option("--out", out_path, "output mapping file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "compute the w-balanced mapping");
  std::string mesh_path, weights_path, solve_out;
  bool uniform = false;
  double perturb = 0.0;
  SolverFlags sflags;
  solve->add_option("mesh", mesh_path, "input mesh/mapping file")->required();
  solve->add_option("--weights", weights_path, "weights file");
  solve->add_flag("--uniform", uniform, "use uniform weights");
  solve->add_option("--perturb", perturb, "perturb initial lifts (seeded)");
  solve->add_option("--out", solve_out, "output mapping file")->required();
  sflags.attach(solve);

  // mvc
  auto* mvc_cmd = app.add_subcommand("mvc", "mean-value-coordinate weights");
  std::string mvc_in, mvc_out;
  mvc_cmd->add_option("mapping", mvc_in, "input mapping file")->required();
  mvc_cmd->add_option("--out", mvc_out, "output weights file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "embedding certificate");
  std::string verify_in;
  bool paranoid = false;
  verify_cmd->add_option("mapping", verify_in, "input mapping file")->required();
  verify_cmd->add_flag("--paranoid", paranoid, "O(F^2) overlap scan in the cover");

  // morph
  auto* morph_cmd = app.add_subcommand("morph", "interpolate two mappings");
  std::string map0_path, map1_path, out_dir;
  int frames = 16;
  bool log_space = false;
  SolverFlags mflags;
  morph_cmd->add_option("map0", map0_path, "first mapping")->required();
  morph_cmd->add_option("map1", map1_path, "second mapping")->required();
  morph_cmd->add_option("--frames", frames, "frame count N >= 2");
  morph_cmd->add_option("--out-dir", out_dir, "output directory")->required();
  morph_cmd->add_flag("--log-space", log_space, "interpolate weights in log space");
  mflags.attach(morph_cmd);

  // render
  auto* render_cmd = app.add_subcommand("render", "Poincare-disk SVG");
  std::string render_in, render_out;
  ht::RenderStyle style;
  render_cmd->add_option("mapping", render_in, "input mapping file")->required();
  render_cmd->add_option("--out", render_out, "output SVG file")->required();
  render_cmd->add_option("--radius", style.radius_px, "disk radius in pixels");
  render_cmd->add_option("--stroke", style.stroke_width, "edge stroke width");
  render_cmd->add_flag("--polygon", style.draw_polygon, "draw the fundamental polygon");
  render_cmd->add_option("--translates", style.translate_dist,
                         "draw deck translates within this distance of the base");

  CLI11_PARSE(app, argc, argv);

  if (mesh->parsed()) {
    auto group = std::make_shared<ht::SurfaceGroup>(ht::SurfaceGroup::regular(genus));
    ht::GeodesicMapping m = ht::builtin_mesh(group);
    for (int k = 0; k < refine; ++k) m = ht::subdivide(m);
    ht::write_mapping_file(out_path, m);
    print_mesh_stats(m);
    return 0;
  }

  if (solve->parsed()) {
    ht::MappingFile in = ht::read_mapping_file(mesh_path);
    if (uniform == weights_path.empty())
      throw ht::Error("pass exactly one of --uniform or --weights");
    ht::Weights w = uniform ? ht::uniform_weights(*in.mapping.complex)
                            : ht::read_weights_file(weights_path, *in.mapping.complex);
    ht::SolverConfig cfg = sflags.resolve(solve);
    ht::GeodesicMapping start = in.mapping;
    if (perturb > 0) start = ht::perturb_lifts(start, perturb, cfg.seed);
    try {
      ht::SolveResult res = ht::solve(start, w, cfg);
      ht::write_mapping_file(solve_out, res.mapping);
      std::cout << "mu " << ht::format_double(res.trace.final_mu) << "\nsweeps "
                << res.trace.sweeps << "\n";
      return 0;
    } catch (const ht::NoConvergenceError& e) {
      std::cerr << "error: " << e.what() << "\n";
      dump_trace(e.trace);
      return 3;
    }
  }

  if (mvc_cmd->parsed()) {
    ht::MappingFile in = ht::read_mapping_file(mvc_in);
    if (!in.had_lifts) throw ht::Error("mvc needs a mapping file with lifts");
    ht::Weights w = ht::mvc(in.mapping);
    ht::write_weights_file(mvc_out, *in.mapping.complex, w);
    return 0;
  }

  if (verify_cmd->parsed()) {
    ht::MappingFile in = ht::read_mapping_file(verify_in);
    if (!in.had_lifts) throw ht::Error("verify needs a mapping file with lifts");
    ht::EmbeddingReport rep = ht::embedding_report(in.mapping, paranoid);
    std::cout << rep.to_text();
    return rep.pass ? 0 : 2;
  }

  if (morph_cmd->parsed()) {
    ht::MappingFile a = ht::read_mapping_file(map0_path);
    ht::MappingFile b = ht::read_mapping_file(map1_path);
    if (!a.had_lifts || !b.had_lifts)
      throw ht::Error("morph needs mapping files with lifts");
    ht::MorphPlan plan;
    plan.m0 = a.mapping;
    plan.m1 = b.mapping;
    plan.frames = frames;
    plan.cfg = mflags.resolve(morph_cmd);
    plan.log_space = log_space;
    std::filesystem::create_directories(out_dir);
    try {
      ht::MorphResult res = ht::morph(plan);
      for (int k = 0; k < frames; ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%03d", k);
        std::string base = out_dir + "/" + name;
        ht::write_mapping_file(base + ".map", res.frames[size_t(k)]);
        std::ofstream svg(base + ".svg");
        svg << ht::render_svg(res.frames[size_t(k)], ht::RenderStyle{});
      }
      return 0;
    } catch (const ht::NoConvergenceError& e) {
      std::cerr << "error: " << e.what() << "\n";
      dump_trace(e.trace);
      return 3;
    }
  }

  if (render_cmd->parsed()) {
    ht::MappingFile in = ht::read_mapping_file(render_in);
    if (!in.had_lifts) throw ht::Error("render needs a mapping file with lifts");
    std::ofstream os(render_out);
    if (!os) throw ht::IoError("cannot open for writing: " + render_out);
    os << ht::render_svg(in.mapping, style);
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ht::LabelMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ht::NotEmbeddedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
