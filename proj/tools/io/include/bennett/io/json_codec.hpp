#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bennett/kinematics/wing.hpp"
#include "bennett/quad/quad_linkage.hpp"

namespace bennett::io {

using nlohmann::json;

// Every number written by the tools is rounded to 12 significant digits.
double round12(double v);
std::string format12(double v);
// Two-space indented JSON followed by a newline.
std::string dump(const json& j);

// Parse helpers throw Error(SchemaViolation) naming the offending key.
double number_at(const json& j, const char* key);
const json& field(const json& j, const char* key);

json dq_to_json(const DualQuaternion& h);
DualQuaternion dq_from_json(const json& j);
json motion_to_json(const MotionPolynomial& c);
MotionPolynomial motion_from_json(const json& j);
json vec3_to_json(const Eigen::Vector3d& v);
Eigen::Vector3d vec3_from_json(const json& j);
// 4x4 row-major homogeneous matrix; 3x4 is accepted on input.
json pose_to_json(const Pose& p);
Pose pose_from_json(const json& j);
json line_to_json(const LinePlucker& l);
LinePlucker line_from_json(const json& j);
json dh_to_json(const BennettDH& dh);
BennettDH dh_from_json(const json& j);

// mechanism.json: axes, dh, home_coupler, base_link, attachments_mm, motion.
json mechanism_to_json(const BennettLinkage& link);
BennettLinkage mechanism_from_json(const json& j, const Tolerances& tol = {});

// quadspec.json: a0_mm, bennett_ratio, z_mm, alpha0_deg.
json quadspec_to_json(const QuadSpec& spec);
QuadSpec quadspec_from_json(const json& j);

json points_to_json(const std::array<Eigen::Vector3d, 4>& pts);
std::array<Eigen::Vector3d, 4> points_from_json(const json& j);

std::string motion_parameter_text(MotionParameter t);
MotionParameter motion_parameter_from_text(const std::string& s);

// Trajectory CSV with a header row.
std::string trajectory_csv(const std::vector<WingState>& states);

// Wavefront OBJ: per parameter value, the four attachment points, the four
// link edges and the quad face.
std::string export_obj(const BennettLinkage& link, const std::vector<MotionParameter>& params,
                       const Tolerances& tol = {});

}  // namespace bennett::io
