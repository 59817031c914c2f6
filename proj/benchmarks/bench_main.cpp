#include <benchmark/benchmark.h>

#include <numbers>

#include "bennett/kinematics/wing.hpp"
#include "bennett/quad/quad_linkage.hpp"
#include "bennett/synthesis/interpolation.hpp"

namespace {

using namespace bennett;

constexpr double kDeg = std::numbers::pi / 180.0;

std::array<Pose, 3> stroke_poses() {
  Pose t1, t2;
  t1.rotation << 0.592, -0.103, -0.799, 0.571, 0.753, 0.326, 0.569, -0.649, 0.505;
  t1.translation << 30, 18, -12;
  t2.rotation << 1, 0, 0, 0, 0.28, 0.96, 0, -0.96, 0.28;
  t2.translation << 65, 0, 0;
  return {Pose::identity(), t1, t2};
}

const QuadSpec kFold{80.0, 0.5, {10.0, 40.0, -50.0}, 10.0 * kDeg};

void BM_Interpolate(benchmark::State& state) {
  const auto p = stroke_poses();
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_three_poses(p[0], p[1], p[2]));
}
BENCHMARK(BM_Interpolate);

void BM_StrokeSynthesis(benchmark::State& state) {
  const auto p = stroke_poses();
  for (auto _ : state) {
    benchmark::DoNotOptimize(linkage_from_motion(interpolate_three_poses(p[0], p[1], p[2])));
  }
}
BENCHMARK(BM_StrokeSynthesis);

void BM_ApplyTwist(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(apply_twist(kFold));
}
BENCHMARK(BM_ApplyTwist);

void BM_FoldingLinkage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quad_to_linkage(apply_twist(kFold), kFold));
}
BENCHMARK(BM_FoldingLinkage)->Unit(benchmark::kMillisecond);

void BM_ConfigurationAt(benchmark::State& state) {
  const auto p = stroke_poses();
  const BennettLinkage l = linkage_from_motion(interpolate_three_poses(p[0], p[1], p[2]));
  double chi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(configuration_at(l, parameter_at_drive_angle(l, chi)));
    chi += 0.01;
  }
}
BENCHMARK(BM_ConfigurationAt);

void BM_Sweep(benchmark::State& state) {
  const auto p = stroke_poses();
  const WingAssembly wing =
      make_wing_assembly(linkage_from_motion(interpolate_three_poses(p[0], p[1], p[2])),
                         DualQuaternion::identity(), quad_to_linkage(apply_twist(kFold), kFold), {});
  for (auto _ : state) benchmark::DoNotOptimize(sweep_trajectory(wing, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
