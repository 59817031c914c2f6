#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "bennett/error.hpp"
#include "bennett/io/commands.hpp"
#include "bennett/io/service.hpp"

namespace fs = std::filesystem;
using namespace bennett;
using namespace bennett::io;

namespace {

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("bennett-forge");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("BENNETT_FORGE_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

void emit(const fs::path& path, const std::string& text) {
  write_text_file(path, text);
  spdlog::info("wrote {}", path.string());
}

int synth_stroke(const fs::path& config, const fs::path& out) {
  const ProjectConfig cfg = load_project(config);
  if (!cfg.stroke.poses) throw Error(ErrorCode::InvalidConfig, "stroke.poses is required");
  const StrokeSynthesis s = synthesize_stroke(*cfg.stroke.poses);
  emit(out / "stroke_mechanism.json", dump(s.mechanism));
  emit(out / "stroke_report.json", dump(s.report));
  std::cout << "stroke linkage: a0 " << format12(s.linkage.dh.a0) << " mm, alpha0 "
            << s.mechanism["dh"]["alpha0_deg"] << " deg, a1 " << format12(s.linkage.dh.a1)
            << " mm, alpha1 " << s.mechanism["dh"]["alpha1_deg"] << " deg, residual "
            << s.report["bennett_residual"] << "\n";
  return 0;
}

int synth_fold(const fs::path& config, const fs::path& out) {
  const ProjectConfig cfg = load_project(config);
  if (!cfg.folding.spec) throw Error(ErrorCode::InvalidConfig, "folding quad spec is required");
  const FoldSynthesis f = synthesize_fold(*cfg.folding.spec);
  emit(out / "fold_mechanism.json", dump(f.mechanism));
  emit(out / "configurations.json", dump(f.configurations));
  emit(out / "fold_report.json", dump(f.report));
  std::cout << "folding linkage: alpha1 " << f.report["alpha1_deg"] << " deg, area ratio "
            << f.report["area_ratio"] << "\n";
  return 0;
}

int simulate_cmd(const fs::path& config, const fs::path& out, int samples, bool nearest) {
  ProjectConfig cfg = load_project(config);
  if (samples != 0) {
    if (samples < 8) throw Error(ErrorCode::SamplesTooFew, "samples too few (minimum 8)");
    cfg.samples = samples;
  }
  cfg.wing.allow_nearest_stop = cfg.wing.allow_nearest_stop || nearest;
  const Simulation sim = simulate(build_assembly(cfg), cfg.samples);
  emit(out / "trajectory.csv", sim.csv);
  emit(out / "simulation_summary.json", dump(sim.summary));
  std::cout << "trajectory: " << sim.summary["samples"] << " samples, "
            << sim.summary["transitions"] << " fold transitions\n";
  return 0;
}

int export_cmd(const fs::path& mechanism, const std::vector<std::string>& ts, int cycle,
               const fs::path& out) {
  const BennettLinkage link = mechanism_from_json(read_json_file(mechanism));
  std::vector<MotionParameter> params;
  for (const auto& t : ts) params.push_back(motion_parameter_from_text(t));
  for (int k = 0; k < cycle; ++k) {
    params.push_back(parameter_at_drive_angle(link, 2.0 * 3.14159265358979323846 * k / cycle));
  }
  if (params.empty()) params.push_back(MotionParameter::infinity());
  emit(out, export_obj(link, params));
  return 0;
}

int serve_cmd(const std::string& bind, int port) {
  Service service;
  const bool ok = service.listen(bind, port, [&](int p) {
    std::cout << "listening on http://" << bind << ":" << p << std::endl;
  });
  if (!ok) throw Error(ErrorCode::Io, "cannot bind " + bind + ":" + std::to_string(port));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Bennett linkage synthesis and flapping-wing simulation"};
  app.require_subcommand(1);

  fs::path config, out_dir = ".";
  auto* stroke = app.add_subcommand("synth-stroke", "Synthesize the stroke linkage from three poses");
  stroke->add_option("config", config, "Project JSON")->required();
  stroke->add_option("-o,--out", out_dir, "Output directory");

  auto* fold = app.add_subcommand("synth-fold", "Build the folding linkage from a quad spec");
  fold->add_option("config", config, "Project JSON")->required();
  fold->add_option("-o,--out", out_dir, "Output directory");

  int samples = 0;
  bool nearest = false;
  auto* sim = app.add_subcommand("simulate", "Sample one stroke cycle of the wing assembly");
  sim->add_option("config", config, "Project JSON")->required();
  sim->add_option("-o,--out", out_dir, "Output directory");
  sim->add_option("-n,--samples", samples, "Samples per cycle (overrides the project)");
  sim->add_flag("--allow-nearest-stop", nearest, "Fall back to the nearest closable fold angle");

  fs::path mechanism, obj_out = "linkage.obj";
  std::vector<std::string> ts;
  int cycle = 0;
  auto* exp = app.add_subcommand("export-obj", "Write linkage configurations as Wavefront OBJ");
  exp->add_option("mechanism", mechanism, "mechanism.json")->required();
  exp->add_option("-t,--t", ts, "Motion parameter values (\"inf\" allowed)");
  exp->add_option("--cycle", cycle, "Add this many frames uniform in the drive angle");
  exp->add_option("-o,--out", obj_out, "Output OBJ file");

  std::string bind = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve the synthesis API over HTTP");
  serve->add_option("--bind", bind, "Interface to bind");
  serve->add_option("--port", port, "TCP port (0 picks a free one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*stroke) return synth_stroke(config, out_dir);
    if (*fold) return synth_fold(config, out_dir);
    if (*sim) return simulate_cmd(config, out_dir, samples, nearest);
    if (*exp) return export_cmd(mechanism, ts, cycle, obj_out);
    if (*serve) return serve_cmd(bind, port);
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << std::endl;
    return 1;
  }
  return 1;
}
