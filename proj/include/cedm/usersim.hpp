#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cedm/acts.hpp"
#include "cedm/episode.hpp"
#include "cedm/ontology.hpp"
#include "cedm/util.hpp"

namespace cedm::usersim {

// Static description of the conversational world the user talks about.
struct WorldSpec {
  std::vector<std::pair<std::string, const ontology::ObjectTypeDef*>> objects;

  const ontology::ObjectTypeDef* type_of(const std::string& id) const;
};

struct ObjectGoal {
  std::map<std::string, std::string> constraints;  // slot -> value or dontcare
  std::set<std::string> requests;                  // requestable slots beyond name
  // Slots marked at generation time as shared through a relation; the user
  // keeps the habit of addressing the relation for them until corrected.
  std::set<std::string> relation_marked;
};

struct GoalChange {
  std::string entity;
  std::string slot;
  std::string old_value;
  std::string new_value;
  bool voided_relation = false;
};

struct UserGoal {
  std::vector<std::string> order;  // entity ids in dialogue order
  std::map<std::string, ObjectGoal> objects;
  // Still-intended equalities: (relation entity a~b, attribute name).
  std::set<std::pair<std::string, std::string>> active_relations;
  std::vector<GoalChange> change_log;
};

enum class OrderMode { kFixed, kAlternating };

struct GoalConfig {
  double dontcare_prob = 0.25;       // non-shared informables
  double extra_request_prob = 0.3;   // request a non-name requestable
};

// Goals are drawn from actual record pairs agreeing on the shared slot(s),
// so they are satisfiable by construction. At least one of the concept-shared
// slots is forced equal across the two objects.
UserGoal sample_goal(Rng& rng, const ontology::Ontology& ont, const WorldSpec& world,
                     OrderMode order_mode, const GoalConfig& cfg = {});

struct ErrorModelConfig {
  double ser = 0.0;  // probability the top hypothesis is corrupted
  int nbest_len = 1;
  // Confusion mix: value substitution / act-type confusion / slot deletion.
  double w_value_sub = 0.70;
  double w_act_type = 0.15;
  double w_slot_del = 0.15;
  // Within value substitution, chance a relation filler collapses to the
  // user's resolved literal value.
  double rel_to_literal = 0.5;
};

inline ErrorModelConfig env1() { return ErrorModelConfig{0.0, 1}; }
inline ErrorModelConfig env3() { return ErrorModelConfig{0.15, 3}; }

// Simulates the semantic error rate of the speech channel on one user act.
class ErrorModel {
 public:
  ErrorModel(ErrorModelConfig cfg, const ontology::Ontology& ont, const WorldSpec& world)
      : cfg_(cfg), ont_(&ont), world_(&world) {}

  // relation_literal: the value the user would have said instead of the
  // relation, when the true act carries a relation filler.
  acts::Observation observe(Rng& rng, const acts::DialogueAct& act,
                            const std::optional<std::string>& relation_literal = std::nullopt) const;

  const ErrorModelConfig& config() const { return cfg_; }

 private:
  std::optional<acts::DialogueAct> confuse(Rng& rng, const acts::DialogueAct& act,
                                           const std::optional<std::string>& relation_literal) const;

  ErrorModelConfig cfg_;
  const ontology::Ontology* ont_;
  const WorldSpec* world_;
};

// Behavior constants of the agenda-based user.
struct UserBehavior {
  double relation_prob = 0.0;  // r: address the relation instead of the value
  int patience = 5;            // consecutive unhelpful turns before hanging up
  double browse_reqalts_prob = 0.25;       // ask for an alternative after a good offer
  double change_after_failed_browse = 0.7; // change a constraint when the browse found nothing
  double spontaneous_change_on_none = 0.05;  // per name=none turn
  double confirm_prob = 0.1;   // double-check one constraint after a good offer
  int max_initial_informs = 3;
};

// Agenda-based simulated user: owns the goal, answers system acts, pushes
// pending informs, corrects bad offers, requests its request slots, and
// moves to the next object when satisfied.
class UserSimulator {
 public:
  UserSimulator(const ontology::Ontology& ont, const WorldSpec& world, UserGoal goal,
                UserBehavior behavior, Rng* rng);

  acts::DialogueAct respond(const acts::DialogueAct& system_act);

  bool finished() const { return finished_; }
  bool hung_up() const { return hung_up_; }
  const UserGoal& goal() const { return goal_; }
  // Literal the last emitted relation filler stands for (error-model hint).
  const std::optional<std::string>& last_relation_literal() const {
    return last_relation_literal_;
  }
  const std::string& current_object() const;
  // Forces the user to abandon the current object (turn cap).
  void force_move_on();

 private:
  struct ObjState {
    std::deque<std::string> pending_informs;
    std::vector<std::string> pending_requests;
    std::optional<std::string> accepted_offer;
    bool browsed = false;
    bool confirmed = false;
    bool done = false;
  };

  acts::DialogueAct volunteer();
  acts::DialogueAct answer_request(const std::string& entity, const std::string& slot);
  acts::SlotFiller value_filler(const std::string& entity, const std::string& slot);
  acts::DialogueAct correction_act(const std::string& entity, const std::string& slot);
  acts::DialogueAct advance_or_bye();
  acts::DialogueAct handle_inform(const acts::DialogueAct& system_act);
  acts::DialogueAct handle_confirm(const acts::DialogueAct& system_act);
  std::optional<GoalChange> change_constraint(const std::string& entity,
                                              const std::optional<std::string>& slot_hint);
  void void_relations_touching(const std::string& entity, const std::string& slot,
                               GoalChange& change);
  bool relation_consistent(const std::string& rel_id, const std::string& attr) const;
  bool discussed(const std::string& entity) const { return discussed_.count(entity) > 0; }
  const ObjectGoal& obj_goal(const std::string& id) const { return goal_.objects.at(id); }
  ObjectGoal& obj_goal(const std::string& id) { return goal_.objects.at(id); }

  const ontology::Ontology* ont_;
  const WorldSpec* world_;
  UserGoal goal_;
  UserBehavior behavior_;
  Rng* rng_;

  std::size_t phase_ = 0;
  std::map<std::string, ObjState> state_;
  std::set<std::string> discussed_;
  std::map<std::string, std::set<std::string>> corrected_;  // entity -> slots
  int patience_left_ = 5;
  std::string prev_system_render_;
  bool finished_ = false;
  bool hung_up_ = false;
  std::optional<std::string> last_relation_literal_;
};

// Success per object: the final offered record satisfies all (post-change)
// constraints, still-active relation constraints hold between the two final
// offers, and every requested slot was answered against the final offer.
std::map<std::string, bool> evaluate_success(const UserGoal& goal,
                                             const episode::EpisodeLog& log,
                                             const ontology::Ontology& ont,
                                             const WorldSpec& world);

}  // namespace cedm::usersim
