#include "bennett/io/json_codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "bennett/error.hpp"

namespace bennett::io {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, what);
}

std::vector<double> numbers(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) {
    schema(std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
  }
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) schema(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const char* phase_name(StrokePhase p) {
  return p == StrokePhase::Downstroke ? "downstroke" : "upstroke";
}

const char* fold_name(FoldState s) { return s == FoldState::Extended ? "extended" : "folded"; }

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

double number_at(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) schema(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

json dq_to_json(const DualQuaternion& h) {
  json out = json::array();
  for (double v : h.study()) out.push_back(round12(v));
  return out;
}

DualQuaternion dq_from_json(const json& j) {
  const auto v = numbers(j, 8, "dual quaternion");
  std::array<double, 8> s{};
  std::copy(v.begin(), v.end(), s.begin());
  return DualQuaternion::from_study(s);
}

json motion_to_json(const MotionPolynomial& c) {
  json out = json::array();
  for (const auto& k : c.coefficients) out.push_back(dq_to_json(k));
  return out;
}

MotionPolynomial motion_from_json(const json& j) {
  if (!j.is_array() || j.empty()) schema("motion must be a non-empty array of coefficients");
  MotionPolynomial c;
  for (const auto& k : j) c.coefficients.push_back(dq_from_json(k));
  return c;
}

json vec3_to_json(const Eigen::Vector3d& v) {
  return json::array({round12(v.x()), round12(v.y()), round12(v.z())});
}

Eigen::Vector3d vec3_from_json(const json& j) {
  const auto v = numbers(j, 3, "vector");
  return {v[0], v[1], v[2]};
}

json pose_to_json(const Pose& p) {
  const Eigen::Matrix4d m = p.matrix();
  json out = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(round12(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Pose pose_from_json(const json& j) {
  if (!j.is_array() || (j.size() != 3 && j.size() != 4)) {
    schema("pose must be a 3x4 or 4x4 row-major matrix");
  }
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  for (std::size_t r = 0; r < 3; ++r) {
    const auto row = numbers(j[r], 4, "pose row");
    for (int c = 0; c < 4; ++c) m(static_cast<int>(r), c) = row[c];
  }
  return Pose::from_matrix(m);
}

json line_to_json(const LinePlucker& l) {
  return {{"dir", vec3_to_json(l.direction)}, {"moment", vec3_to_json(l.moment)}};
}

LinePlucker line_from_json(const json& j) {
  const Eigen::Vector3d d = vec3_from_json(field(j, "dir"));
  const Eigen::Vector3d m = vec3_from_json(field(j, "moment"));
  if (!(d.norm() > 1e-9)) schema("axis direction must be non-zero");
  // Values that already satisfy the line invariants to rounding are kept as
  // written so a read-write cycle reproduces the file.
  if (std::abs(d.norm() - 1.0) < 1e-10 && std::abs(d.dot(m)) < 1e-10 * (1.0 + m.norm())) {
    return {d, m};
  }
  const Eigen::Vector3d u = d.normalized();
  const Eigen::Vector3d mu = m / d.norm();
  return {u, mu - u * u.dot(mu)};
}

json dh_to_json(const BennettDH& dh) {
  return {{"a0", round12(dh.a0)},
          {"alpha0_deg", round12(dh.alpha0 * kDeg)},
          {"a1", round12(dh.a1)},
          {"alpha1_deg", round12(dh.alpha1 * kDeg)}};
}

BennettDH dh_from_json(const json& j) {
  return {number_at(j, "a0"), number_at(j, "alpha0_deg") / kDeg, number_at(j, "a1"),
          number_at(j, "alpha1_deg") / kDeg};
}

json points_to_json(const std::array<Eigen::Vector3d, 4>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(vec3_to_json(p));
  return out;
}

std::array<Eigen::Vector3d, 4> points_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) schema("expected four points");
  return {vec3_from_json(j[0]), vec3_from_json(j[1]), vec3_from_json(j[2]), vec3_from_json(j[3])};
}

json mechanism_to_json(const BennettLinkage& link) {
  json axes = json::array();
  for (const auto& a : link.axes) axes.push_back(line_to_json(a));
  return {{"axes", axes},
          {"dh", dh_to_json(link.dh)},
          {"home_coupler", dq_to_json(link.home_coupler)},
          {"base_link", link.base_link},
          {"attachments_mm", points_to_json(link.attachments)},
          {"motion", motion_to_json(link.motion)}};
}

BennettLinkage mechanism_from_json(const json& j, const Tolerances& tol) {
  const json& axes_j = field(j, "axes");
  if (!axes_j.is_array() || axes_j.size() != 4) schema("mechanism needs exactly four axes");
  std::array<LinePlucker, 4> axes;
  for (std::size_t i = 0; i < 4; ++i) axes[i] = line_from_json(axes_j[i]);

  const DualQuaternion home = dq_from_json(field(j, "home_coupler"));
  int base = 3;
  if (j.contains("base_link")) {
    if (!j["base_link"].is_number_integer()) schema("base_link must be an integer");
    base = j["base_link"].get<int>();
    if (base < 0 || base > 3) schema("base_link must be 0..3");
  }
  std::array<Eigen::Vector3d, 4> attachments = axes_to_dh(axes, tol).joint_centers;
  if (j.contains("attachments_mm")) attachments = points_from_json(j["attachments_mm"]);
  std::optional<MotionPolynomial> motion;
  if (j.contains("motion")) motion = motion_from_json(j["motion"]);

  BennettLinkage link = linkage_from_axes(axes, base, home, attachments, motion, tol);
  if (j.contains("dh")) {
    const BennettDH stored = dh_from_json(j["dh"]);
    const double gap = std::max({std::abs(stored.a0 - link.dh.a0), std::abs(stored.a1 - link.dh.a1),
                                 std::abs(stored.alpha0 - link.dh.alpha0),
                                 std::abs(stored.alpha1 - link.dh.alpha1)});
    if (gap > 1e-6) schema("dh table does not match the axes");
    link.dh = stored;
  }
  return link;
}

json quadspec_to_json(const QuadSpec& spec) {
  return {{"a0_mm", round12(spec.a0)},
          {"bennett_ratio", round12(spec.bennett_ratio)},
          {"z_mm", json::array({round12(spec.z[0]), round12(spec.z[1]), round12(spec.z[2])})},
          {"alpha0_deg", round12(spec.alpha0 * kDeg)}};
}

QuadSpec quadspec_from_json(const json& j) {
  QuadSpec spec;
  spec.a0 = number_at(j, "a0_mm");
  spec.bennett_ratio = number_at(j, "bennett_ratio");
  const auto z = numbers(field(j, "z_mm"), 3, "z_mm");
  spec.z = {z[0], z[1], z[2]};
  spec.alpha0 = number_at(j, "alpha0_deg") / kDeg;
  return spec;
}

std::string motion_parameter_text(MotionParameter t) {
  return t.is_infinite() ? "inf" : format12(t.value());
}

MotionParameter motion_parameter_from_text(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "+inf") return MotionParameter::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "not a motion parameter: " + s);
  }
  return MotionParameter::at(v);
}

std::string trajectory_csv(const std::vector<WingState>& states) {
  std::ostringstream out;
  out << "t,theta_drive_rad,phase,fold_state,fold_angle_rad";
  for (int i = 0; i < 4; ++i) out << ",x" << i << ",y" << i << ",z" << i;
  out << ",area_mm2\n";
  for (const auto& s : states) {
    out << motion_parameter_text(s.stroke_t) << ',' << format12(s.drive_angle) << ','
        << phase_name(s.phase) << ',' << fold_name(s.fold_state) << ',' << format12(s.fold_angle);
    for (const auto& p : s.wing_points) {
      out << ',' << format12(p.x()) << ',' << format12(p.y()) << ',' << format12(p.z());
    }
    out << ',' << format12(s.swept_area) << '\n';
  }
  return out.str();
}

std::string export_obj(const BennettLinkage& link, const std::vector<MotionParameter>& params,
                       const Tolerances& tol) {
  std::ostringstream out;
  out << "# bennett-forge linkage export\n";
  int base = 1;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const LoopConfiguration cfg = configuration_at(link, params[k], tol);
    out << "o frame_" << k << " t=" << motion_parameter_text(params[k]) << '\n';
    for (const auto& p : cfg.attachments) {
      out << "v " << format12(p.x()) << ' ' << format12(p.y()) << ' ' << format12(p.z()) << '\n';
    }
    for (int i = 0; i < 4; ++i) out << "l " << base + i << ' ' << base + (i + 1) % 4 << '\n';
    out << "f " << base << ' ' << base + 1 << ' ' << base + 2 << ' ' << base + 3 << '\n';
    base += 4;
  }
  return out.str();
}

}  // namespace bennett::io
