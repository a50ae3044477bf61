#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "slg/geometry.hpp"

namespace slg {

// Conceptualization strategy: how a scalar feature is read off an object.
//   projective - egocentric angle relative to the reference pose's front
//   absolute   - angle relative to the wall marker's global direction
//   proximal   - distance to the reference origin
enum class Strategy { projective, absolute, proximal };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);
inline bool is_angular(Strategy s) { return s != Strategy::proximal; }

// Scalar feature tagged with the strategy it was construed under. Angular
// strategies carry radians in (-pi, pi], proximal carries meters.
struct FeatureValue {
  Strategy strategy = Strategy::projective;
  double value = 0.0;
};

FeatureValue angular_feature(Strategy s, Angle a);
FeatureValue distance_feature(Distance d);

// Prototype category: a central value, a width sigma, and the bounded memory
// of feature samples it was learned from.
struct SpatialCategory {
  std::string id;
  Strategy strategy = Strategy::projective;
  double prototype = 0.0;
  double sigma = 0.1;
  std::vector<double> samples;  // oldest first
};

// Distance between a feature and the category prototype: circular for
// angular strategies, |d_o - d_c| for proximal.
double feature_distance(const FeatureValue& feature, const SpatialCategory& category);

// exp(-d / (2 sigma)); the exponent is linear in d, not quadratic.
// Throws std::invalid_argument on a strategy mismatch.
double similarity(const FeatureValue& feature, const SpatialCategory& category);

// New category centered on the topic's feature, seeded with it as the sole
// sample. The narrow initial sigma focuses the category on the topic.
SpatialCategory invent_category(std::string id, Strategy s, const FeatureValue& topic_feature,
                                double initial_sigma = 0.1);

// sim(c, topic) minus the best distractor similarity; the empty context
// leaves the topic perfectly discriminated.
double discrimination_score(const SpatialCategory& category, const FeatureValue& topic,
                            std::span<const FeatureValue> context);

// Direction of the mean resultant vector of a set of angles (radians).
double circular_mean(std::span<const double> angles);

// Standard deviation of samples about the prototype with the |S|-1
// denominator; angular samples deviate by the signed wrapped difference.
double sample_sd_about(double prototype, std::span<const double> samples, bool angular);

// Features of all blocks of one world model as seen from a reference pose.
// Built once per interaction step and shared by every category evaluation.
struct ConstrualFrame {
  std::vector<std::string> ids;
  std::vector<double> angles;     // radians, reference frame
  std::vector<double> distances;  // meters from the reference origin
  double wall_bearing = 0.0;      // radians, reference frame

  std::size_t index_of(const std::string& id) const;  // throws std::out_of_range
  double feature(std::size_t i, Strategy s) const;
};

ConstrualFrame construe_blocks(const WorldModel& wm, const Pose& reference_pose);

// Single-object construal; identical arithmetic to the batch path.
// Throws std::out_of_range on an unknown id.
FeatureValue construe(const WorldModel& wm, const std::string& object_id, Strategy s,
                      const Pose& reference_pose);

// --- tutor inventories -----------------------------------------------------

struct InventoryEntry {
  std::string word;
  SpatialCategory category;
};

struct InventoryDefaults {
  double angular_sigma = 0.4;
  double proximal_near = 0.6;  // meters
  double proximal_far = 2.0;
  double proximal_sigma = 0.5;
};

// The built-in English system: front/left/back/right, north/west/south/east
// (relative to the wall direction) and near/far.
std::vector<InventoryEntry> english_inventory(const std::vector<Strategy>& strategies,
                                              const InventoryDefaults& defaults = {});

// One entry per line: word strategy prototype sigma. '#' starts a comment.
std::vector<InventoryEntry> load_inventory(const std::filesystem::path& path);

}  // namespace slg
