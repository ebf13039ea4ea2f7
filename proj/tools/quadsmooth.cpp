// Batch front end: generate test meshes, smooth them, score them and
// compare algorithms in a Table-style report.
//
// Exit codes: 0 success, 1 usage error, 2 data/geometry error.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tbase/mesh_io.hpp"
#include "tbase/meshgen.hpp"
#include "tbase/quality.hpp"
#include "tbase/surface_smoother.hpp"

using namespace tbase;

namespace {

struct SurfaceOpts {
  std::string surface = "none";  // none | paraboloid | kriging
  std::string kriging_samples;   // CSV path; empty -> input mesh nodes
  std::string variogram = "linear";
  double slope = 1.0, sill = 1.0, range = 1.0;
  int neighborhood = 16;
};

void add_surface_opts(CLI::App* cmd, SurfaceOpts& s) {
  cmd->add_option("--surface", s.surface, "Surface binding: none|paraboloid|kriging")
      ->check(CLI::IsMember({"none", "paraboloid", "kriging"}));
  cmd->add_option("--kriging-samples", s.kriging_samples,
                  "CSV of x,y,z kriging samples (default: input mesh nodes)");
  cmd->add_option("--variogram", s.variogram, "Variogram model: linear|spherical")
      ->check(CLI::IsMember({"linear", "spherical"}));
  cmd->add_option("--variogram-slope", s.slope, "Linear variogram slope");
  cmd->add_option("--variogram-sill", s.sill, "Spherical variogram sill");
  cmd->add_option("--variogram-range", s.range, "Spherical variogram range");
  cmd->add_option("--neighborhood", s.neighborhood, "Kriging neighbors per query");
}

std::optional<SurfaceBinding> make_binding(const SurfaceOpts& s, const QuadMesh& input) {
  if (s.surface == "none") return std::nullopt;
  if (s.surface == "paraboloid")
    return SurfaceBinding::parametric(paraboloid_surface());
  Variogram v;
  if (s.variogram == "spherical")
    v = {VariogramKind::Spherical, 1.0, s.sill, s.range};
  else
    v = {VariogramKind::Linear, s.slope, 1.0, 1.0};
  std::vector<Vec3> samples =
      s.kriging_samples.empty() ? input.positions : read_xyz_csv(s.kriging_samples);
  return SurfaceBinding::interpolated(KrigingModel(std::move(samples), v, s.neighborhood));
}

SmootherConfig make_config(const std::string& algo, int variant, double tol,
                           int max_iters, const std::string& order, bool fix_boundary) {
  SmootherConfig cfg;
  cfg.algorithm = algo == "laplacian" ? Algorithm::Laplacian : Algorithm::TBase;
  if (cfg.algorithm == Algorithm::TBase) cfg.scheme = WeightScheme::variant(variant);
  cfg.tolerance = tol;
  cfg.max_iterations = max_iters;
  cfg.order = order == "sequential" ? UpdateOrder::Sequential : UpdateOrder::Simultaneous;
  cfg.fix_boundary = fix_boundary;
  return cfg;
}

IterationStats run_smoother(QuadMesh& mesh, const std::optional<SurfaceBinding>& binding,
                            const SmootherConfig& cfg) {
  if (binding) return smooth_surface(mesh, *binding, cfg);
  return smooth_planar(mesh, cfg);
}

int capped_budget(const QuadMesh& mesh, const std::optional<SurfaceBinding>& binding,
                  SmootherConfig cfg) {
  cfg.algorithm = Algorithm::Laplacian;
  if (binding) return laplacian_iteration_count(mesh, *binding, cfg);
  QuadMesh copy = mesh;
  return smooth_planar(copy, cfg).iterations_run;
}

void print_stats(const IterationStats& st) {
  std::cerr << "iterations: " << st.iterations_run
            << "  converged: " << (st.converged ? "yes" : "no");
  if (!st.max_displacement_history.empty())
    std::cerr << "  first/last max displacement: "
              << st.max_displacement_history.front() << " / "
              << st.max_displacement_history.back();
  std::cerr << "\n";
}

int cmd_generate_grid(int nx, int ny, double spacing, double perturb_mag,
                      std::uint64_t seed, const std::string& lift,
                      const std::string& out) {
  QuadMesh mesh = gen_grid({nx, ny, spacing, 0.0, 0.0});
  if (perturb_mag > 0.0) perturb(mesh, {perturb_mag, seed});
  if (lift == "paraboloid") lift_to_surface(mesh, paraboloid_surface());
  write_mesh(out, mesh);
  std::cerr << "wrote " << out << ": " << mesh.node_count() << " nodes, "
            << mesh.quad_count() << " quads\n";
  return 0;
}

int cmd_generate_patch(int n, std::uint64_t seed, double jitter,
                       double disk_radius, const std::string& lift,
                       const std::string& out) {
  QuadMesh mesh = disk_radius > 0.0
                      ? gen_unstructured_disk(disk_radius, n, seed, jitter)
                      : gen_unstructured_patch(n, seed, jitter);
  if (lift == "paraboloid") {
    lift_to_surface(mesh, paraboloid_surface());
    orient_ccw(mesh);
  }
  write_mesh(out, mesh);
  std::cerr << "wrote " << out << ": " << mesh.node_count() << " nodes, "
            << mesh.quad_count() << " quads\n";
  return 0;
}

int cmd_generate_disk(double radius, int rings, const std::string& lift,
                      const std::string& out) {
  QuadMesh mesh = gen_disk_mesh(radius, rings);
  if (lift == "paraboloid") lift_to_surface(mesh, paraboloid_surface());
  write_mesh(out, mesh);
  std::cerr << "wrote " << out << ": " << mesh.node_count() << " nodes, "
            << mesh.quad_count() << " quads\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadsmooth: T-Base and Laplacian smoothing of quad meshes"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic mesh");
  gen->require_subcommand(1);
  auto* grid = gen->add_subcommand("grid", "Structured grid");
  int nx = 10, ny = 10;
  double spacing = 1.0, perturb_mag = 0.0;
  std::uint64_t seed = 0;
  std::string lift = "none", gen_out = "mesh.obj";
  grid->add_option("--nx", nx, "Cells in x");
  grid->add_option("--ny", ny, "Cells in y");
  grid->add_option("--spacing", spacing, "Cell size");
  grid->add_option("--perturb", perturb_mag, "Interior jitter as fraction of spacing");
  grid->add_option("--seed", seed, "Jitter seed");
  grid->add_option("--lift", lift, "Lift onto surface: none|paraboloid")
      ->check(CLI::IsMember({"none", "paraboloid"}));
  grid->add_option("-o,--output", gen_out, "Output mesh path");

  auto* disk = gen->add_subcommand("disk", "All-quad disk mesh");
  double radius = 100.0;
  int rings = 8;
  disk->add_option("--radius", radius, "Disk radius");
  disk->add_option("--rings", rings, "Resolution (2*rings cells across)");
  disk->add_option("--lift", lift, "Lift onto surface: none|paraboloid")
      ->check(CLI::IsMember({"none", "paraboloid"}));
  disk->add_option("-o,--output", gen_out, "Output mesh path");

  auto* patch = gen->add_subcommand(
      "patch", "Unstructured all-quad patch (irregular valences)");
  int patch_n = 8;
  double jitter = 0.25, disk_radius = 0.0;
  patch->add_option("--n", patch_n, "Lattice cells per side");
  patch->add_option("--seed", seed, "Construction seed");
  patch->add_option("--jitter", jitter, "Lattice jitter as fraction of cell size");
  patch->add_option("--disk-radius", disk_radius,
                    "Map the patch onto a disk of this radius (0 = keep square)");
  patch->add_option("--lift", lift, "Lift onto surface: none|paraboloid")
      ->check(CLI::IsMember({"none", "paraboloid"}));
  patch->add_option("-o,--output", gen_out, "Output mesh path");

  // shared smoothing options
  std::string input, output = "smoothed.obj", algo = "tbase";
  std::string order = "simultaneous", budget = "fixed", config_path, csv_path;
  std::string metric = "lambda", label = "mesh";
  int variant = 1, max_iters = 500;
  double tol = 0.0;
  bool free_boundary = false;
  SurfaceOpts sopts;

  auto* smooth = app.add_subcommand("smooth", "Smooth a mesh");
  smooth->add_option("-i,--input", input, "Input mesh")->required();
  smooth->add_option("-o,--output", output, "Output mesh");
  smooth->add_option("--algo", algo, "laplacian|tbase")
      ->check(CLI::IsMember({"laplacian", "tbase"}));
  smooth->add_option("--variant", variant, "T-Base variant 1|2|3")
      ->check(CLI::Range(1, 3));
  smooth->add_option("--tol", tol, "Displacement tolerance (0 = 1e-4 * edge length)");
  smooth->add_option("--max-iters", max_iters, "Iteration cap");
  smooth->add_option("--order", order, "simultaneous|sequential")
      ->check(CLI::IsMember({"simultaneous", "sequential"}));
  smooth->add_option("--budget", budget,
                     "fixed | laplacian-capped (cap T-Base at the Laplacian count)")
      ->check(CLI::IsMember({"fixed", "laplacian-capped"}));
  smooth->add_flag("--free-boundary", free_boundary, "Also move boundary nodes");
  smooth->add_option("--config", config_path, "JSON config mirroring the run options");
  add_surface_opts(smooth, sopts);

  auto* quality = app.add_subcommand("quality", "Score a mesh");
  quality->add_option("-i,--input", input, "Input mesh")->required();
  quality->add_option("--metric", metric, "lambda|gamma")
      ->check(CLI::IsMember({"lambda", "gamma"}));
  quality->add_option("--csv", csv_path, "Also write a CSV row");
  quality->add_option("--label", label, "Row label");

  auto* compare = app.add_subcommand(
      "compare", "Run LS and all T-Base variants from the same input");
  compare->add_option("-i,--input", input, "Input mesh")->required();
  compare->add_option("--tol", tol, "Displacement tolerance");
  compare->add_option("--max-iters", max_iters, "Iteration cap");
  compare->add_option("--budget", budget, "fixed | laplacian-capped")
      ->check(CLI::IsMember({"fixed", "laplacian-capped"}));
  compare->add_option("--order", order, "simultaneous|sequential")
      ->check(CLI::IsMember({"simultaneous", "sequential"}));
  compare->add_option("--csv", csv_path, "Also write CSV rows");
  add_surface_opts(compare, sopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (grid->parsed())
      return cmd_generate_grid(nx, ny, spacing, perturb_mag, seed, lift, gen_out);
    if (disk->parsed()) return cmd_generate_disk(radius, rings, lift, gen_out);
    if (patch->parsed())
      return cmd_generate_patch(patch_n, seed, jitter, disk_radius, lift, gen_out);

    if (smooth->parsed()) {
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw MeshError("cannot open config: " + config_path);
        nlohmann::json j;
        f >> j;
        // CLI flags that were given explicitly win over the config file.
        auto set = [&](const char* key, auto& target, const CLI::Option* opt) {
          if (j.contains(key) && opt->count() == 0) target = j[key].template get<std::decay_t<decltype(target)>>();
        };
        set("algorithm", algo, smooth->get_option("--algo"));
        set("variant", variant, smooth->get_option("--variant"));
        set("tolerance", tol, smooth->get_option("--tol"));
        set("max_iterations", max_iters, smooth->get_option("--max-iters"));
        set("order", order, smooth->get_option("--order"));
        set("budget", budget, smooth->get_option("--budget"));
        set("surface", sopts.surface, smooth->get_option("--surface"));
        set("kriging_samples", sopts.kriging_samples,
            smooth->get_option("--kriging-samples"));
        set("output", output, smooth->get_option("--output"));
      }
      QuadMesh mesh = read_mesh(input);
      const auto binding = make_binding(sopts, mesh);
      SmootherConfig cfg =
          make_config(algo, variant, tol, max_iters, order, !free_boundary);
      if (budget == "laplacian-capped" && cfg.algorithm == Algorithm::TBase) {
        cfg.max_iterations = capped_budget(mesh, binding, cfg);
        std::cerr << "laplacian-capped budget: " << cfg.max_iterations << "\n";
      }
      const IterationStats st = run_smoother(mesh, binding, cfg);
      print_stats(st);
      write_mesh(output, mesh);
      std::cerr << "wrote " << output << "\n";
      return 0;
    }

    if (quality->parsed()) {
      const QuadMesh mesh = read_mesh(input);
      const Metric m = metric == "gamma" ? Metric::Gamma : Metric::Lambda;
      const QualityReport rep = mesh_quality_report(mesh, m);
      std::cout << rep.to_table(label);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw MeshError("cannot open for writing: " + csv_path);
        f << QualityReport::csv_header() << "\n" << rep.to_csv_row(label) << "\n";
      }
      return 0;
    }

    if (compare->parsed()) {
      const QuadMesh original = read_mesh(input);
      const auto binding = make_binding(sopts, original);
      const Metric m = binding ? Metric::Gamma : Metric::Lambda;

      struct Row {
        std::string name;
        QualityReport rep;
      };
      std::vector<Row> rows;
      rows.push_back({"Original", mesh_quality_report(original, m)});

      int cap = max_iters;
      if (budget == "laplacian-capped") {
        SmootherConfig probe = make_config("laplacian", 1, tol, max_iters, order, true);
        cap = capped_budget(original, binding, probe);
        std::cerr << "laplacian-capped budget: " << cap << "\n";
      }
      const std::vector<std::pair<std::string, SmootherConfig>> runs = {
          {"LS", make_config("laplacian", 1, tol, max_iters, order, true)},
          {"Vari.1", make_config("tbase", 1, tol, cap, order, true)},
          {"Vari.2", make_config("tbase", 2, tol, cap, order, true)},
          {"Vari.3", make_config("tbase", 3, tol, cap, order, true)},
      };
      for (const auto& [name, cfg] : runs) {
        QuadMesh mesh = original;
        const IterationStats st = run_smoother(mesh, binding, cfg);
        std::cerr << name << ": ";
        print_stats(st);
        rows.push_back({name, mesh_quality_report(mesh, m)});
      }
      for (size_t i = 0; i < rows.size(); ++i) {
        const std::string table = rows[i].rep.to_table(rows[i].name);
        // print the header line once
        std::cout << (i == 0 ? table : table.substr(table.find('\n') + 1));
      }
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw MeshError("cannot open for writing: " + csv_path);
        f << QualityReport::csv_header() << "\n";
        for (const Row& r : rows) f << r.rep.to_csv_row(r.name) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
