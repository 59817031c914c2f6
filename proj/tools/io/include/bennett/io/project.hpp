#pragma once

#include <array>
#include <filesystem>
#include <optional>

#include "bennett/io/json_codec.hpp"

namespace bennett::io {

struct StrokeSource {
  std::optional<std::array<Pose, 3>> poses;   // synthesize from T0, T1, T2
  std::optional<BennettLinkage> mechanism;     // or use a stored linkage
};

struct FoldingSource {
  std::optional<QuadSpec> spec;
  std::optional<BennettLinkage> mechanism;
};

struct ProjectConfig {
  StrokeSource stroke;
  FoldingSource folding;
  Pose mount;
  WingOptions wing;
  int samples = 256;
  std::vector<MotionParameter> export_params{MotionParameter::infinity(), MotionParameter::at(1.0),
                                             MotionParameter::at(0.0)};
};

// Mechanism and quad spec references may be inline objects or file paths
// relative to `base_dir`. Violations raise SchemaViolation, InvalidConfig or
// SamplesTooFew.
ProjectConfig parse_project(const json& j, const std::filesystem::path& base_dir = {},
                            const Tolerances& tol = {});
ProjectConfig load_project(const std::filesystem::path& path, const Tolerances& tol = {});

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bennett::io
