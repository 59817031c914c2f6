#pragma once

#include "bennett/error.hpp"
#include "bennett/io/project.hpp"

namespace bennett::io {

struct StrokeSynthesis {
  MotionPolynomial motion;  // interpolating motion as synthesized
  BennettLinkage linkage;
  json mechanism;
  json report;
};

StrokeSynthesis synthesize_stroke(const std::array<Pose, 3>& poses, const Tolerances& tol = {});

struct FoldSynthesis {
  PlanarQuads planar;
  TwistedQuad twisted;
  BennettLinkage linkage;
  FoldedSearch folded;
  json mechanism;
  json configurations;
  json report;
};

FoldSynthesis synthesize_fold(const QuadSpec& spec, const Tolerances& tol = {});

// Stroke and folding linkages from the project, synthesizing where needed.
// InvalidConfig when either source is missing.
WingAssembly build_assembly(const ProjectConfig& cfg, const Tolerances& tol = {});

struct Simulation {
  std::vector<WingState> states;
  std::string csv;
  json summary;
};

Simulation simulate(const WingAssembly& wing, int samples, const Tolerances& tol = {});

// {"error": code, "message": text}
json error_json(const Error& e);

}  // namespace bennett::io
