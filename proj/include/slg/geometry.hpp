#pragma once

#include <string>
#include <vector>

namespace slg {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Angle in radians, normalized to the half-open interval (-pi, pi].
// -pi is outside the domain and maps to +pi.
class Angle {
 public:
  Angle() = default;
  double radians() const { return value_; }

  // Validates v is already in (-pi, pi] and wraps it without re-normalizing,
  // so values deserialized from a file stay bit-identical.
  static Angle from_normalized(double v);

  friend Angle normalize_angle(double raw_radians);

 private:
  explicit Angle(double normalized) : value_(normalized) {}
  double value_ = 0.0;
};

// Reduces an arbitrary finite angle mod 2*pi into (-pi, pi].
// Throws std::invalid_argument on non-finite input.
Angle normalize_angle(double raw_radians);

// Circular distance, in [0, pi].
double angular_distance(Angle a, Angle b);

// a - b wrapped to (-pi, pi]; sign carries which side of b the angle a lies on.
double signed_angle_difference(Angle a, Angle b);

Angle rotate(Angle a, double delta_radians);

// Non-negative range in meters.
class Distance {
 public:
  Distance() = default;
  // Throws std::invalid_argument if v is negative or non-finite.
  static Distance meters(double v);
  double value() const { return value_; }

 private:
  explicit Distance(double v) : value_(v) {}
  double value_ = 0.0;
};

// Position plus facing direction. heading is the direction of the front.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  Angle heading;
};

// Checks x, y and heading for finiteness; throws std::invalid_argument.
void validate_pose(const Pose& pose, const char* what);

// Re-expresses point (x, y) in the frame anchored at `frame` (origin at the
// pose, x-axis along its heading).
void transform_point(const Pose& frame, double x, double y, double& out_x, double& out_y);

// Pose of the current frame as seen from `pose`'s frame. Transforming by a
// pose and then by its inverse restores the original coordinates.
Pose inverse_pose(const Pose& pose);

enum class ObjectKind { block, robot, wall_marker };

std::string to_string(ObjectKind kind);
ObjectKind object_kind_from_string(const std::string& name);

struct PerceivedObject {
  std::string id;
  ObjectKind kind = ObjectKind::block;
  double x = 0.0;  // egocentric frame of the perceiver
  double y = 0.0;
};

struct EgocentricFeatures {
  Angle angle;
  Distance distance;
};

// One agent's private view of a scene. Positions are egocentric: the owner
// sits at the origin facing +x.
struct WorldModel {
  std::string owner;
  std::vector<PerceivedObject> objects;
  Pose other_robot;    // perceived pose of the interlocutor
  Angle wall_bearing;  // egocentric direction of the global wall marker

  const PerceivedObject* find(const std::string& id) const noexcept;
  // Throws std::out_of_range when the id is not present.
  const PerceivedObject& object(const std::string& id) const;
};

// Bearing/range of one object; throws std::out_of_range on unknown id.
EgocentricFeatures egocentric_features(const WorldModel& wm, const std::string& object_id);

// Every object position re-expressed in target_pose's frame; wall bearing and
// interlocutor pose rotated accordingly. Ids are preserved.
WorldModel transform_perspective(const WorldModel& wm, const Pose& target_pose);

}  // namespace slg
