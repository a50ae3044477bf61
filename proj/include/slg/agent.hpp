#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slg/category.hpp"
#include "slg/geometry.hpp"
#include "slg/rng.hpp"

namespace slg {

// Bijective word <-> category-id map. The one-to-one shape is a structural
// invariant: bind() rejects any second use of either side.
class Lexicon {
 public:
  bool contains_word(const std::string& word) const;
  const std::string* category_of(const std::string& word) const;
  const std::string* word_of(const std::string& category_id) const;
  void bind(const std::string& word, const std::string& category_id);
  std::size_t size() const { return word_to_category_.size(); }
  const std::map<std::string, std::string>& entries() const { return word_to_category_; }

 private:
  std::map<std::string, std::string> word_to_category_;
  std::map<std::string, std::string> category_to_word_;
};

enum class RoleCapability { tutor, learner };

// What to do when invented candidates discriminate equally well.
enum class TiePolicy { fixed_priority, random_pick, reject };

std::string to_string(TiePolicy p);
TiePolicy tie_policy_from_string(const std::string& name);

struct LearningParams {
  double alpha_sigma = 0.1;
  std::size_t sample_window = 30;
  double initial_sigma = 0.1;
  TiePolicy tie_policy = TiePolicy::fixed_priority;
  double epsilon_unique = 0.0;  // interpretation margin over the runner-up
  bool sigma_mirror = false;    // sign-flipped sigma update, for comparison runs
};

struct Agent {
  std::string id;
  RoleCapability capability = RoleCapability::learner;
  Lexicon lexicon;
  std::vector<SpatialCategory> categories;
  std::vector<Strategy> enabled_strategies;  // candidate order doubles as tie priority
  LearningParams params;
  int invention_count = 0;

  const SpatialCategory* category(const std::string& category_id) const;
  SpatialCategory* category(const std::string& category_id);
};

Agent make_tutor(std::string id, const std::vector<InventoryEntry>& inventory);
Agent make_learner(std::string id, std::vector<Strategy> enabled_strategies,
                   LearningParams params = {});

struct ConceptualizationResult {
  std::string word;
  std::string category_id;
  double score = 0.0;  // discrimination score of the winning category
};

// Picks the category that discriminates the topic best against the other
// blocks, construed from reference_pose. Empty when no category scores > 0.
std::optional<ConceptualizationResult> conceptualize(const Agent& agent, const WorldModel& wm,
                                                     const std::string& topic_id,
                                                     const Pose& reference_pose);

struct InterpretOutcome {
  enum class Status { ok, unknown_word, ambiguous_reference };
  Status status = Status::unknown_word;
  std::string object_id;    // best block, when ok
  std::string category_id;  // set whenever the word is known
};

// Resolves a word to the block with the highest similarity; the best block
// must beat the runner-up by more than epsilon_unique.
InterpretOutcome interpret(const Agent& agent, const WorldModel& wm, const std::string& word,
                           const Pose& reference_pose);

struct AdoptOutcome {
  bool adopted = false;
  Strategy strategy = Strategy::projective;
  double score = 0.0;
  std::string category_id;
};

// Repair for an unknown word: invent one candidate per enabled strategy from
// the pointed-at topic, keep the most discriminating one and bind it to the
// word. Ties between candidates fall to the agent's tie policy; under
// `reject` a cross-strategy tie defers adoption entirely.
AdoptOutcome adopt(Agent& agent, const std::string& word, const std::string& topic_id,
                   const WorldModel& wm, const Pose& reference_pose, Rng& rng);

// One sigma step: sigma moved toward the sample sd by alpha (or mirrored
// away from it when `mirror` is set). Never drops below a small floor.
double sigma_update(double sigma, double sample_sd, double alpha, bool mirror = false);

// Appends the sample to the category memory (window eviction), recomputes the
// prototype as the (circular) mean of the memory, then steps sigma toward the
// sample sd. The sigma step is skipped while there is only one sample.
void align(Agent& agent, const std::string& category_id, const FeatureValue& sample);

// Successful use feeds the learner's alignment; a tutor never changes.
void record_success(Agent& agent, const std::string& category_id, const FeatureValue& topic_feature);

struct CategorySnapshot {
  std::string word;
  Strategy strategy = Strategy::projective;
  double prototype = 0.0;
  double sigma = 0.0;
  std::size_t sample_count = 0;
};

// Word-sorted dump of the agent's category system.
std::vector<CategorySnapshot> snapshot(const Agent& agent);

}  // namespace slg
