#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cedm::episode {

struct TurnRecord {
  int index = 0;
  std::string role;  // "sys" or "usr"
  std::string act;   // rendered act
  std::vector<std::pair<double, std::string>> observation;  // usr turns only
  std::string focus;
};

struct ObjectOutcome {
  std::string id;
  int position = 0;  // 1-based order within this dialogue
  bool success = false;
  int turns = 0;          // system policy actions charged to this object
  double dialogue_return = 0.0;  // 30 * success - turns under default rewards
  std::string final_offer;       // empty if none
};

// Full turn-by-turn record of one dialogue.
struct EpisodeLog {
  std::uint64_t seed = 0;
  std::uint64_t episode_index = 0;
  std::string config_hash;
  std::vector<TurnRecord> turns;
  std::vector<ObjectOutcome> outcomes;
  bool system_relation_act = false;
  std::vector<std::string> notes;  // goal changes etc.

  const ObjectOutcome* outcome_of(const std::string& id) const {
    for (const auto& o : outcomes)
      if (o.id == id) return &o;
    return nullptr;
  }

  // Line-oriented dump (docs/formats.md); byte-stable for fixed inputs.
  std::string serialize() const;
};

}  // namespace cedm::episode
