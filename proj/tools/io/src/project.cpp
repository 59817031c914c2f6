#include "bennett/io/project.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include "bennett/error.hpp"

namespace bennett::io {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

json resolve(const json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_string()) return read_json_file(base_dir / ref.get<std::string>());
  return ref;
}

bool boolean_at(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) throw Error(ErrorCode::SchemaViolation, std::string(key) + " must be a boolean");
  return j[key].get<bool>();
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaViolation, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
}

ProjectConfig parse_project(const json& j, const std::filesystem::path& base_dir,
                            const Tolerances& tol) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaViolation, "project must be a JSON object");
  ProjectConfig cfg;

  if (j.contains("units") && j["units"] != "mm") {
    throw Error(ErrorCode::InvalidConfig, "units must be \"mm\"");
  }

  if (j.contains("stroke")) {
    const json& s = j["stroke"];
    if (s.contains("poses") && s.contains("mechanism")) {
      throw Error(ErrorCode::InvalidConfig, "stroke takes either poses or a mechanism, not both");
    }
    if (s.contains("poses")) {
      const json& p = s["poses"];
      if (!p.is_array() || p.size() != 3) {
        throw Error(ErrorCode::SchemaViolation, "stroke.poses must hold three poses");
      }
      cfg.stroke.poses = {pose_from_json(p[0]), pose_from_json(p[1]), pose_from_json(p[2])};
    } else if (s.contains("mechanism")) {
      cfg.stroke.mechanism = mechanism_from_json(resolve(s["mechanism"], base_dir), tol);
    } else {
      throw Error(ErrorCode::SchemaViolation, "stroke needs poses or a mechanism");
    }
  }

  if (j.contains("folding")) {
    const json& f = j["folding"];
    if (f.contains("mechanism") && f.size() > 1) {
      throw Error(ErrorCode::InvalidConfig, "folding takes either a quad spec or a mechanism, not both");
    }
    if (f.contains("mechanism")) {
      cfg.folding.mechanism = mechanism_from_json(resolve(f["mechanism"], base_dir), tol);
    } else if (f.contains("quadspec")) {
      cfg.folding.spec = quadspec_from_json(resolve(f["quadspec"], base_dir));
    } else {
      cfg.folding.spec = quadspec_from_json(f);
    }
  }

  if (j.contains("mount")) cfg.mount = pose_from_json(j["mount"]);
  if (j.contains("stop_limit_deg")) cfg.wing.stop_limit = number_at(j, "stop_limit_deg") / kDeg;
  if (!(cfg.wing.stop_limit > 0.0 && cfg.wing.stop_limit < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidConfig, "stop_limit_deg must lie in (0, 180)");
  }
  if (j.contains("forward_axis")) cfg.wing.forward_axis = vec3_from_json(j["forward_axis"]);
  if (!(cfg.wing.forward_axis.norm() > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "forward_axis must be non-zero");
  }
  if (j.contains("sweep_reach_mm")) cfg.wing.sweep_reach = number_at(j, "sweep_reach_mm");
  if (j.contains("fold_lag")) cfg.wing.fold_lag = number_at(j, "fold_lag");
  if (!(cfg.wing.fold_lag >= 0.0)) throw Error(ErrorCode::InvalidConfig, "fold_lag must be >= 0");
  cfg.wing.allow_nearest_stop = boolean_at(j, "allow_nearest_stop", false);

  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer()) {
      throw Error(ErrorCode::SchemaViolation, "samples must be an integer");
    }
    cfg.samples = j["samples"].get<int>();
  }
  if (cfg.samples < 8) throw Error(ErrorCode::SamplesTooFew, "samples too few (minimum 8)");

  if (j.contains("export_t")) {
    const json& e = j["export_t"];
    if (!e.is_array() || e.empty()) {
      throw Error(ErrorCode::SchemaViolation, "export_t must be a non-empty array");
    }
    cfg.export_params.clear();
    for (const auto& v : e) {
      if (v.is_string()) {
        cfg.export_params.push_back(motion_parameter_from_text(v.get<std::string>()));
      } else if (v.is_number()) {
        cfg.export_params.push_back(MotionParameter::at(v.get<double>()));
      } else {
        throw Error(ErrorCode::SchemaViolation, "export_t entries must be numbers or \"inf\"");
      }
    }
  }
  return cfg;
}

ProjectConfig load_project(const std::filesystem::path& path, const Tolerances& tol) {
  return parse_project(read_json_file(path), path.parent_path(), tol);
}

}  // namespace bennett::io
