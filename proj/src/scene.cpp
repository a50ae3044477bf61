#include "slg/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "slg/rng.hpp"

namespace slg {

using nlohmann::json;

namespace {

constexpr int kCorpusVersion = 1;
constexpr const char* kCorpusFormat = "scene-corpus";

struct Perceiver {
  std::string owner;
  Pose pose;          // true pose, global frame
  std::string other_owner;
  Pose other_pose;    // true pose of the interlocutor
};

double noisy_range_factor(Rng& rng, double sigma_rel) {
  // keep perceived range positive even in extreme tails
  return std::max(0.05, 1.0 + rng.gaussian(0.0, sigma_rel));
}

PerceivedObject perceive_point(Rng& rng, const NoiseModel& noise, const Pose& self, double gx,
                               double gy, std::string id, ObjectKind kind) {
  double lx = 0.0;
  double ly = 0.0;
  transform_point(self, gx, gy, lx, ly);
  const double bearing = std::atan2(ly, lx) + rng.gaussian(0.0, noise.sigma_angle);
  const double range = std::hypot(lx, ly) * noisy_range_factor(rng, noise.sigma_dist_rel);
  PerceivedObject obj;
  obj.id = std::move(id);
  obj.kind = kind;
  obj.x = range * std::cos(bearing);
  obj.y = range * std::sin(bearing);
  return obj;
}

WorldModel perceive(Rng& rng, const NoiseModel& noise, const Perceiver& who,
                    const GroundTruthScene& truth, const std::vector<std::string>& block_ids) {
  WorldModel wm;
  wm.owner = who.owner;
  std::size_t block_index = 0;
  for (const auto& obj : truth.objects) {
    if (obj.kind != ObjectKind::block) {
      continue;
    }
    wm.objects.push_back(
        perceive_point(rng, noise, who.pose, obj.x, obj.y, block_ids[block_index], obj.kind));
    ++block_index;
  }
  // interlocutor estimate: position through the same bearing/range channel,
  // heading with bearing noise
  PerceivedObject other = perceive_point(rng, noise, who.pose, who.other_pose.x,
                                         who.other_pose.y, "robot-" + who.other_owner,
                                         ObjectKind::robot);
  wm.other_robot.x = other.x;
  wm.other_robot.y = other.y;
  const double rel_heading =
      who.other_pose.heading.radians() - who.pose.heading.radians();
  wm.other_robot.heading =
      normalize_angle(rel_heading + rng.gaussian(0.0, noise.sigma_angle));
  wm.objects.push_back(std::move(other));
  wm.wall_bearing = normalize_angle(truth.wall_direction.radians() -
                                    who.pose.heading.radians() +
                                    rng.gaussian(0.0, noise.sigma_angle));
  return wm;
}

}  // namespace

const std::string& Scene::to_learner_id(const std::string& tutor_id) const {
  for (const auto& [t, l] : correspondence) {
    if (t == tutor_id) {
      return l;
    }
  }
  throw std::out_of_range("no correspondence for tutor object " + tutor_id);
}

const std::string& Scene::to_tutor_id(const std::string& learner_id) const {
  for (const auto& [t, l] : correspondence) {
    if (l == learner_id) {
      return t;
    }
  }
  throw std::out_of_range("no correspondence for learner object " + learner_id);
}

Scene generate_scene(const SceneConfig& config, std::uint64_t corpus_seed,
                     std::int64_t scene_id) {
  if (config.min_blocks < 1 || config.max_blocks < config.min_blocks) {
    throw std::invalid_argument("generate_scene: invalid block count bounds");
  }
  Rng rng(mix_seed(corpus_seed, static_cast<std::uint64_t>(scene_id)));

  Scene scene;
  scene.id = scene_id;

  // robots face each other across the block field, with heading jitter
  const double separation = rng.uniform(config.robot_distance_min, config.robot_distance_max);
  GroundTruthScene& truth = scene.truth;
  truth.tutor_pose = Pose{-separation / 2.0, 0.0,
                          normalize_angle(rng.uniform(-config.heading_jitter, config.heading_jitter))};
  truth.learner_pose = Pose{separation / 2.0, 0.0,
                            normalize_angle(kPi + rng.uniform(-config.heading_jitter,
                                                              config.heading_jitter))};
  truth.wall_direction = normalize_angle(rng.uniform(-kPi, kPi));

  const int n_blocks = rng.uniform_int(config.min_blocks, config.max_blocks);
  const double half = config.area_size / 2.0;
  int retries = 0;
  while (static_cast<int>(truth.objects.size()) < n_blocks) {
    const double x = rng.uniform(-half, half);
    const double y = rng.uniform(-half, half);
    bool clear = std::hypot(x - truth.tutor_pose.x, y - truth.tutor_pose.y) >=
                     config.min_separation &&
                 std::hypot(x - truth.learner_pose.x, y - truth.learner_pose.y) >=
                     config.min_separation;
    for (const auto& placed : truth.objects) {
      clear = clear && std::hypot(x - placed.x, y - placed.y) >= config.min_separation;
    }
    if (clear) {
      GroundTruthObject obj;
      obj.id = "block-" + std::to_string(truth.objects.size());
      obj.kind = ObjectKind::block;
      obj.x = x;
      obj.y = y;
      truth.objects.push_back(std::move(obj));
    } else if (++retries > config.max_layout_retries) {
      throw GenerationError("scene layout unsatisfiable after " +
                            std::to_string(config.max_layout_retries) + " retries");
    }
  }

  // per-agent naming schemes; the learner sees the blocks in shuffled order
  std::vector<std::string> tutor_ids;
  for (int i = 0; i < n_blocks; ++i) {
    tutor_ids.push_back("obj-" + std::to_string(300 + i));
  }
  std::vector<int> perm(n_blocks);
  for (int i = 0; i < n_blocks; ++i) {
    perm[i] = i;
  }
  for (int i = n_blocks - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  }
  std::vector<std::string> learner_ids(n_blocks);
  for (int k = 0; k < n_blocks; ++k) {
    learner_ids[perm[k]] = "obj-" + std::to_string(90 + k);
  }

  const Perceiver tutor{"tutor", truth.tutor_pose, "learner", truth.learner_pose};
  const Perceiver learner{"learner", truth.learner_pose, "tutor", truth.tutor_pose};
  scene.tutor_wm = perceive(rng, config.noise, tutor, truth, tutor_ids);
  scene.learner_wm = perceive(rng, config.noise, learner, truth, learner_ids);

  for (int i = 0; i < n_blocks; ++i) {
    scene.correspondence.emplace_back(tutor_ids[i], learner_ids[i]);
  }
  return scene;
}

std::vector<Scene> generate_corpus(const SceneConfig& config, std::uint64_t corpus_seed,
                                   int scene_count) {
  std::vector<Scene> scenes;
  scenes.reserve(static_cast<std::size_t>(scene_count));
  for (int i = 0; i < scene_count; ++i) {
    scenes.push_back(generate_scene(config, corpus_seed, i));
  }
  return scenes;
}

namespace {

json pose_to_json(const Pose& p) {
  return json{{"x", p.x}, {"y", p.y}, {"heading", p.heading.radians()}};
}

Pose pose_from_json(const json& j) {
  Pose p;
  p.x = j.at("x").get<double>();
  p.y = j.at("y").get<double>();
  p.heading = Angle::from_normalized(j.at("heading").get<double>());
  return p;
}

json objects_to_json(const std::vector<PerceivedObject>& objects) {
  json arr = json::array();
  for (const auto& o : objects) {
    arr.push_back(json{{"id", o.id}, {"kind", to_string(o.kind)}, {"x", o.x}, {"y", o.y}});
  }
  return arr;
}

json wm_to_json(const WorldModel& wm) {
  return json{{"owner", wm.owner},
              {"objects", objects_to_json(wm.objects)},
              {"other_pose", pose_to_json(wm.other_robot)},
              {"wall_bearing", wm.wall_bearing.radians()}};
}

WorldModel wm_from_json(const json& j) {
  WorldModel wm;
  wm.owner = j.at("owner").get<std::string>();
  for (const auto& jo : j.at("objects")) {
    PerceivedObject o;
    o.id = jo.at("id").get<std::string>();
    o.kind = object_kind_from_string(jo.at("kind").get<std::string>());
    o.x = jo.at("x").get<double>();
    o.y = jo.at("y").get<double>();
    wm.objects.push_back(std::move(o));
  }
  wm.other_robot = pose_from_json(j.at("other_pose"));
  wm.wall_bearing = Angle::from_normalized(j.at("wall_bearing").get<double>());
  return wm;
}

}  // namespace

std::string scene_to_line(const Scene& scene) {
  json truth_objects = json::array();
  for (const auto& o : scene.truth.objects) {
    truth_objects.push_back(
        json{{"id", o.id}, {"kind", to_string(o.kind)}, {"x", o.x}, {"y", o.y}});
  }
  json pairs = json::array();
  for (const auto& [t, l] : scene.correspondence) {
    pairs.push_back(json::array({t, l}));
  }
  const json j{{"id", scene.id},
               {"truth",
                json{{"objects", truth_objects},
                     {"tutor_pose", pose_to_json(scene.truth.tutor_pose)},
                     {"learner_pose", pose_to_json(scene.truth.learner_pose)},
                     {"wall_direction", scene.truth.wall_direction.radians()}}},
               {"tutor_wm", wm_to_json(scene.tutor_wm)},
               {"learner_wm", wm_to_json(scene.learner_wm)},
               {"correspondence", pairs}};
  return j.dump();
}

Scene scene_from_line(const std::string& line, int line_no) {
  try {
    const json j = json::parse(line);
    Scene scene;
    scene.id = j.at("id").get<std::int64_t>();
    const json& jt = j.at("truth");
    for (const auto& jo : jt.at("objects")) {
      GroundTruthObject o;
      o.id = jo.at("id").get<std::string>();
      o.kind = object_kind_from_string(jo.at("kind").get<std::string>());
      o.x = jo.at("x").get<double>();
      o.y = jo.at("y").get<double>();
      scene.truth.objects.push_back(std::move(o));
    }
    scene.truth.tutor_pose = pose_from_json(jt.at("tutor_pose"));
    scene.truth.learner_pose = pose_from_json(jt.at("learner_pose"));
    scene.truth.wall_direction =
        Angle::from_normalized(jt.at("wall_direction").get<double>());
    scene.tutor_wm = wm_from_json(j.at("tutor_wm"));
    scene.learner_wm = wm_from_json(j.at("learner_wm"));
    for (const auto& jp : j.at("correspondence")) {
      scene.correspondence.emplace_back(jp.at(0).get<std::string>(),
                                        jp.at(1).get<std::string>());
    }
    return scene;
  } catch (const CorpusError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorpusError("corpus parse error at line " + std::to_string(line_no) + ": " + e.what(),
                      line_no);
  }
}

void save_corpus(const std::vector<Scene>& scenes, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open corpus file for writing: " + path.string());
  }
  const json header{{"format", kCorpusFormat}, {"version", kCorpusVersion}};
  out << header.dump() << '\n';
  for (const auto& scene : scenes) {
    out << scene_to_line(scene) << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed while writing corpus file: " + path.string());
  }
}

std::vector<Scene> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open corpus file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw CorpusError("corpus parse error at line 1: missing header", 1);
  }
  try {
    const json header = json::parse(line);
    if (header.at("format").get<std::string>() != kCorpusFormat) {
      throw CorpusError("unsupported corpus format at line 1", 1);
    }
    if (header.at("version").get<int>() != kCorpusVersion) {
      throw CorpusError("unsupported corpus version at line 1 (expected " +
                            std::to_string(kCorpusVersion) + ")",
                        1);
    }
  } catch (const CorpusError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorpusError("corpus parse error at line 1: " + std::string(e.what()), 1);
  }
  std::vector<Scene> scenes;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    scenes.push_back(scene_from_line(line, line_no));
  }
  return scenes;
}

}  // namespace slg
