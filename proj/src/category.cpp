#include "slg/category.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slg {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::projective:
      return "projective";
    case Strategy::absolute:
      return "absolute";
    case Strategy::proximal:
      return "proximal";
  }
  return "projective";
}

Strategy strategy_from_string(const std::string& name) {
  if (name == "projective") return Strategy::projective;
  if (name == "absolute") return Strategy::absolute;
  if (name == "proximal") return Strategy::proximal;
  throw std::invalid_argument("unknown strategy: " + name);
}

FeatureValue angular_feature(Strategy s, Angle a) {
  if (!is_angular(s)) {
    throw std::invalid_argument("angular_feature: proximal is not an angular strategy");
  }
  return FeatureValue{s, a.radians()};
}

FeatureValue distance_feature(Distance d) {
  return FeatureValue{Strategy::proximal, d.value()};
}

double feature_distance(const FeatureValue& feature, const SpatialCategory& category) {
  if (feature.strategy != category.strategy) {
    throw std::invalid_argument("feature_distance: strategy mismatch (" +
                                to_string(feature.strategy) + " vs " +
                                to_string(category.strategy) + ")");
  }
  if (is_angular(category.strategy)) {
    return angular_distance(normalize_angle(feature.value), normalize_angle(category.prototype));
  }
  return std::fabs(feature.value - category.prototype);
}

double similarity(const FeatureValue& feature, const SpatialCategory& category) {
  const double d = feature_distance(feature, category);
  return std::exp(-d / (2.0 * category.sigma));
}

SpatialCategory invent_category(std::string id, Strategy s, const FeatureValue& topic_feature,
                                double initial_sigma) {
  if (topic_feature.strategy != s) {
    throw std::invalid_argument("invent_category: feature does not match strategy");
  }
  SpatialCategory c;
  c.id = std::move(id);
  c.strategy = s;
  c.prototype = topic_feature.value;
  c.sigma = initial_sigma;
  c.samples = {topic_feature.value};
  return c;
}

double discrimination_score(const SpatialCategory& category, const FeatureValue& topic,
                            std::span<const FeatureValue> context) {
  const double topic_sim = similarity(topic, category);
  double best_other = 0.0;
  for (const FeatureValue& other : context) {
    const double sim = similarity(other, category);
    if (sim > best_other) {
      best_other = sim;
    }
  }
  return topic_sim - best_other;
}

double circular_mean(std::span<const double> angles) {
  double sin_sum = 0.0;
  double cos_sum = 0.0;
  for (double a : angles) {
    sin_sum += std::sin(a);
    cos_sum += std::cos(a);
  }
  const double n = static_cast<double>(angles.size());
  return std::atan2(sin_sum / n, cos_sum / n);
}

double sample_sd_about(double prototype, std::span<const double> samples, bool angular) {
  if (samples.size() < 2) {
    throw std::invalid_argument("sample_sd_about: need at least two samples");
  }
  const Angle proto = angular ? normalize_angle(prototype) : Angle{};
  double sum_sq = 0.0;
  for (double s : samples) {
    const double dev = angular ? signed_angle_difference(normalize_angle(s), proto)
                               : s - prototype;
    sum_sq += dev * dev;
  }
  return std::sqrt(sum_sq / static_cast<double>(samples.size() - 1));
}

std::size_t ConstrualFrame::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) {
      return i;
    }
  }
  throw std::out_of_range("construal frame has no block: " + id);
}

double ConstrualFrame::feature(std::size_t i, Strategy s) const {
  switch (s) {
    case Strategy::projective:
      return angles[i];
    case Strategy::absolute:
      return normalize_angle(angles[i] - wall_bearing).radians();
    case Strategy::proximal:
      return distances[i];
  }
  return angles[i];
}

namespace {

void features_in_frame(const Pose& reference, double x, double y, double& angle,
                       double& distance) {
  double rx = 0.0;
  double ry = 0.0;
  transform_point(reference, x, y, rx, ry);
  angle = normalize_angle(std::atan2(ry, rx)).radians();
  distance = std::hypot(rx, ry);
}

}  // namespace

ConstrualFrame construe_blocks(const WorldModel& wm, const Pose& reference_pose) {
  validate_pose(reference_pose, "construe_blocks");
  ConstrualFrame frame;
  frame.wall_bearing = rotate(wm.wall_bearing, -reference_pose.heading.radians()).radians();
  for (const auto& obj : wm.objects) {
    if (obj.kind != ObjectKind::block) {
      continue;
    }
    double a = 0.0;
    double d = 0.0;
    features_in_frame(reference_pose, obj.x, obj.y, a, d);
    frame.ids.push_back(obj.id);
    frame.angles.push_back(a);
    frame.distances.push_back(d);
  }
  return frame;
}

FeatureValue construe(const WorldModel& wm, const std::string& object_id, Strategy s,
                      const Pose& reference_pose) {
  validate_pose(reference_pose, "construe");
  const PerceivedObject& obj = wm.object(object_id);
  double a = 0.0;
  double d = 0.0;
  features_in_frame(reference_pose, obj.x, obj.y, a, d);
  switch (s) {
    case Strategy::projective:
      return FeatureValue{s, a};
    case Strategy::absolute: {
      const double wall =
          rotate(wm.wall_bearing, -reference_pose.heading.radians()).radians();
      return FeatureValue{s, normalize_angle(a - wall).radians()};
    }
    case Strategy::proximal:
      return FeatureValue{s, d};
  }
  return FeatureValue{s, a};
}

std::vector<InventoryEntry> english_inventory(const std::vector<Strategy>& strategies,
                                              const InventoryDefaults& defaults) {
  std::vector<InventoryEntry> entries;
  auto add = [&entries](const std::string& word, Strategy s, double prototype, double sigma) {
    SpatialCategory c;
    c.id = word;
    c.strategy = s;
    c.prototype = prototype;
    c.sigma = sigma;
    entries.push_back(InventoryEntry{word, std::move(c)});
  };
  for (Strategy s : strategies) {
    switch (s) {
      case Strategy::projective:
        add("front", s, 0.0, defaults.angular_sigma);
        add("left", s, kPi / 2.0, defaults.angular_sigma);
        add("back", s, kPi, defaults.angular_sigma);
        add("right", s, -kPi / 2.0, defaults.angular_sigma);
        break;
      case Strategy::absolute:
        add("north", s, 0.0, defaults.angular_sigma);
        add("west", s, kPi / 2.0, defaults.angular_sigma);
        add("south", s, kPi, defaults.angular_sigma);
        add("east", s, -kPi / 2.0, defaults.angular_sigma);
        break;
      case Strategy::proximal:
        add("near", s, defaults.proximal_near, defaults.proximal_sigma);
        add("far", s, defaults.proximal_far, defaults.proximal_sigma);
        break;
    }
  }
  return entries;
}

std::vector<InventoryEntry> load_inventory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open inventory file: " + path.string());
  }
  std::vector<InventoryEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string word;
    std::string strategy_name;
    double prototype = 0.0;
    double sigma = 0.0;
    if (!(fields >> word)) {
      continue;  // blank line
    }
    if (!(fields >> strategy_name >> prototype >> sigma)) {
      throw std::runtime_error("inventory parse error at " + path.string() + ":" +
                               std::to_string(line_no));
    }
    if (sigma <= 0.0) {
      throw std::runtime_error("inventory sigma must be > 0 at " + path.string() + ":" +
                               std::to_string(line_no));
    }
    SpatialCategory c;
    c.id = word;
    c.strategy = strategy_from_string(strategy_name);
    c.prototype = is_angular(c.strategy) ? normalize_angle(prototype).radians() : prototype;
    c.sigma = sigma;
    entries.push_back(InventoryEntry{word, std::move(c)});
  }
  return entries;
}

}  // namespace slg
