#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slg/geometry.hpp"

namespace slg {

struct GroundTruthObject {
  std::string id;
  ObjectKind kind = ObjectKind::block;
  double x = 0.0;  // global frame
  double y = 0.0;
};

struct GroundTruthScene {
  std::vector<GroundTruthObject> objects;
  Pose tutor_pose;
  Pose learner_pose;
  Angle wall_direction;  // global frame
};

// Perception noise applied independently per agent and per object:
// bearing += N(0, sigma_angle), range *= 1 + N(0, sigma_dist_rel).
// The perceived interlocutor pose and wall bearing get the same treatment.
struct NoiseModel {
  double sigma_angle = 0.05;     // radians
  double sigma_dist_rel = 0.05;  // relative
};

struct SceneConfig {
  NoiseModel noise;
  int min_blocks = 4;
  int max_blocks = 6;
  double area_size = 3.0;        // blocks land in a square this wide, centered between the robots
  double min_separation = 0.3;   // pairwise block distance and block-robot clearance
  double robot_distance_min = 1.0;
  double robot_distance_max = 2.0;
  double heading_jitter = 0.3;   // radians around facing each other
  int max_layout_retries = 1000;
};

// Two private world models of one ground truth plus the block-identity
// correspondence between their naming schemes. World models are never shared
// between the agents; only the correspondence resolves pointing.
struct Scene {
  std::int64_t id = 0;
  GroundTruthScene truth;
  WorldModel tutor_wm;
  WorldModel learner_wm;
  std::vector<std::pair<std::string, std::string>> correspondence;  // tutor id -> learner id

  const std::string& to_learner_id(const std::string& tutor_id) const;
  const std::string& to_tutor_id(const std::string& learner_id) const;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& message, int line) : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Deterministic in (corpus_seed, scene_id): the per-scene stream is derived
// from both, so corpus generation can run in any order.
Scene generate_scene(const SceneConfig& config, std::uint64_t corpus_seed, std::int64_t scene_id);

std::vector<Scene> generate_corpus(const SceneConfig& config, std::uint64_t corpus_seed,
                                   int scene_count);

// Line-delimited corpus file: a version header line followed by one
// self-describing scene record per line. Values round-trip exactly.
void save_corpus(const std::vector<Scene>& scenes, const std::filesystem::path& path);
std::vector<Scene> load_corpus(const std::filesystem::path& path);

std::string scene_to_line(const Scene& scene);
Scene scene_from_line(const std::string& line, int line_no);

}  // namespace slg
