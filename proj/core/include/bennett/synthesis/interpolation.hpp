#pragma once

#include "bennett/dq/motion_polynomial.hpp"
#include "bennett/dq/pose.hpp"

namespace bennett {

// Quadratic motion on the Study quadric with C(inf) ~ x0, C(1) ~ x1, C(0) ~ x2.
// Leading coefficient is x0 as given. CollinearPoses when the three points do
// not span a plane, NoBennettMotion when no such quadratic exists.
MotionPolynomial interpolate_three_poses(const DualQuaternion& x0, const DualQuaternion& x1,
                                         const DualQuaternion& x2, const Tolerances& tol = {});

MotionPolynomial interpolate_three_poses(const Pose& t0, const Pose& t1, const Pose& t2,
                                         const Tolerances& tol = {});

}  // namespace bennett
