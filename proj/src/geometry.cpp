#include "slg/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace slg {

Angle normalize_angle(double raw_radians) {
  if (!std::isfinite(raw_radians)) {
    throw std::invalid_argument("normalize_angle: non-finite input");
  }
  double r = std::fmod(raw_radians + kPi, kTwoPi);
  if (r <= 0.0) {
    r += kTwoPi;
  }
  double v = r - kPi;
  if (v <= -kPi) {  // r - kPi can round down onto -pi when r is denormal-small
    v = kPi;
  }
  return Angle(v);
}

Angle Angle::from_normalized(double v) {
  if (!(v > -kPi && v <= kPi)) {
    throw std::invalid_argument("Angle::from_normalized: value outside (-pi, pi]");
  }
  return Angle(v);
}

double angular_distance(Angle a, Angle b) {
  const double d = std::fabs(a.radians() - b.radians());
  return d > kPi ? kTwoPi - d : d;
}

double signed_angle_difference(Angle a, Angle b) {
  return normalize_angle(a.radians() - b.radians()).radians();
}

Angle rotate(Angle a, double delta_radians) {
  return normalize_angle(a.radians() + delta_radians);
}

Distance Distance::meters(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument("Distance::meters: value must be finite and >= 0");
  }
  return Distance(v);
}

void validate_pose(const Pose& pose, const char* what) {
  if (!std::isfinite(pose.x) || !std::isfinite(pose.y)) {
    throw std::invalid_argument(std::string(what) + ": non-finite pose");
  }
}

void transform_point(const Pose& frame, double x, double y, double& out_x, double& out_y) {
  const double c = std::cos(frame.heading.radians());
  const double s = std::sin(frame.heading.radians());
  const double dx = x - frame.x;
  const double dy = y - frame.y;
  out_x = c * dx + s * dy;
  out_y = -s * dx + c * dy;
}

Pose inverse_pose(const Pose& pose) {
  Pose inv;
  transform_point(pose, 0.0, 0.0, inv.x, inv.y);
  inv.heading = normalize_angle(-pose.heading.radians());
  return inv;
}

std::string to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::block:
      return "block";
    case ObjectKind::robot:
      return "robot";
    case ObjectKind::wall_marker:
      return "wall-marker";
  }
  return "block";
}

ObjectKind object_kind_from_string(const std::string& name) {
  if (name == "block") return ObjectKind::block;
  if (name == "robot") return ObjectKind::robot;
  if (name == "wall-marker") return ObjectKind::wall_marker;
  throw std::invalid_argument("unknown object kind: " + name);
}

const PerceivedObject* WorldModel::find(const std::string& id) const noexcept {
  for (const auto& obj : objects) {
    if (obj.id == id) {
      return &obj;
    }
  }
  return nullptr;
}

const PerceivedObject& WorldModel::object(const std::string& id) const {
  const PerceivedObject* obj = find(id);
  if (obj == nullptr) {
    throw std::out_of_range("object not found in world model of " + owner + ": " + id);
  }
  return *obj;
}

EgocentricFeatures egocentric_features(const WorldModel& wm, const std::string& object_id) {
  const PerceivedObject& obj = wm.object(object_id);
  EgocentricFeatures f;
  f.angle = normalize_angle(std::atan2(obj.y, obj.x));
  f.distance = Distance::meters(std::hypot(obj.x, obj.y));
  return f;
}

WorldModel transform_perspective(const WorldModel& wm, const Pose& target_pose) {
  validate_pose(target_pose, "transform_perspective");
  WorldModel out;
  out.owner = wm.owner;
  out.objects.reserve(wm.objects.size());
  for (const auto& obj : wm.objects) {
    PerceivedObject moved = obj;
    transform_point(target_pose, obj.x, obj.y, moved.x, moved.y);
    out.objects.push_back(std::move(moved));
  }
  transform_point(target_pose, wm.other_robot.x, wm.other_robot.y, out.other_robot.x,
                  out.other_robot.y);
  out.other_robot.heading =
      rotate(wm.other_robot.heading, -target_pose.heading.radians());
  out.wall_bearing = rotate(wm.wall_bearing, -target_pose.heading.radians());
  return out;
}

}  // namespace slg
