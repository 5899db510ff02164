#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cedm/gp_sarsa.hpp"
#include "cedm/tracking.hpp"

namespace cedm::policy {

enum class PolicyKind { kCedmFeudal, kMddmBaseline, kHandcrafted };
const char* policy_kind_name(PolicyKind k);
std::optional<PolicyKind> policy_kind_from_name(const std::string& s);

// Abstract system action; rendered into a concrete dialogue act per turn.
struct SummaryAction {
  enum class Kind {
    kRequest,
    kConfirm,
    kInformByConstraints,
    kInformAlternatives,
    kBye,
    kConfirmRel,
    kSelectObject,    // master: delegate to the object sub-policy
    kSelectRelation,  // master: delegate to a relation sub-policy
  };
  Kind kind;
  std::string slot;         // request/confirm slot or relation attribute
  std::string relation_id;  // confirm_rel / select_relation target

  // Canonical name; action spaces are sorted by it and ties break on it.
  std::string name() const;
  bool operator==(const SummaryAction&) const = default;
};

// Deterministic function of (world, focus, merged state); fixed dimension
// per policy.
struct BeliefSummary {
  Eigen::VectorXd features;
};

// Fixed, sorted action inventories.
std::vector<SummaryAction> object_action_space(const ontology::ObjectTypeDef& type);
std::vector<SummaryAction> relation_action_space(const entities::ConversationalRelation& rel);
std::vector<SummaryAction> master_action_space(
    const std::string& object_id, const entities::ConversationalWorld& world);

// Per-slot features (top/second/none/dontcare probability, conflict bit,
// requested/informed history) plus bias, offer/pending flags and the KB
// match-count bucket under top-value constraints.
BeliefSummary summarize_object(const entities::ConversationalWorld& world,
                               const entities::ConversationalObject& obj,
                               const tracking::FocusStateResult& focus_state,
                               const ontology::Ontology& ont);
// Object features plus each relation attribute's {equals, none} mass and the
// aggregate conflict bit.
BeliefSummary summarize_master(const entities::ConversationalWorld& world,
                               const entities::ConversationalObject& obj,
                               const tracking::FocusStateResult& focus_state,
                               const ontology::Ontology& ont);
// Per attribute {equals, none, context sign, matched-slot conflict} plus bias.
BeliefSummary summarize_relation(const entities::ConversationalRelation& rel,
                                 const entities::ConversationalObject& focus_obj,
                                 const tracking::FocusStateResult& focus_state);

int object_summary_dim(const ontology::ObjectTypeDef& type);
int master_summary_dim(const std::string& object_id,
                       const entities::ConversationalWorld& world,
                       const ontology::ObjectTypeDef& type);
int relation_summary_dim(const entities::ConversationalRelation& rel);

// Constraints implied by the merged state: every slot whose argmax is a
// concrete value (not none, not dontcare).
std::map<std::string, std::string> constraints_from_state(
    const tracking::FocusStateResult& focus_state);

// Action masks; masked actions are never selectable.
std::vector<bool> object_action_mask(const std::vector<SummaryAction>& space,
                                     const entities::ConversationalObject& obj,
                                     const tracking::FocusStateResult& focus_state);
std::vector<bool> relation_action_mask(const std::vector<SummaryAction>& space,
                                       const entities::ConversationalRelation& rel);
std::vector<bool> master_action_mask(const std::vector<SummaryAction>& space,
                                     const entities::ConversationalWorld& world);

enum class SelectMode { kExploit, kExplore };

// Exploit: argmax posterior mean, lexicographic tie-break via the sorted
// space. Explore: epsilon-uniform floor plus posterior (Thompson) sampling.
int select_action(const QFunction& q, const Eigen::VectorXd& summary,
                  const std::vector<SummaryAction>& space, const std::vector<bool>& mask,
                  SelectMode mode, Rng* rng, double epsilon);

// Renders a summary action into a concrete system act. inform actions query
// the knowledge base with the merged-state constraints and establish the
// offer (context update); pending user requests are answered from the
// current offer.
acts::DialogueAct realize_action(const SummaryAction& action,
                                 entities::ConversationalWorld& world,
                                 entities::ConversationalObject& obj,
                                 const tracking::FocusStateResult& focus_state,
                                 const ontology::Ontology& ont);

// Deterministic rule chain used for the first object in Experiment 1.
SummaryAction handcrafted_decide(const entities::ConversationalObject& obj,
                                 const tracking::FocusStateResult& focus_state,
                                 const ontology::Ontology& ont);

// Per-object dialogue policy driving one conversational object, including
// its learner bookkeeping during training.
class DialoguePolicy {
 public:
  virtual ~DialoguePolicy() = default;

  virtual PolicyKind kind() const = 0;
  virtual bool trainable() const { return false; }

  virtual void begin_dialogue() {}
  // Every policy in the stack receives the same reward signal.
  virtual void add_reward(double r) { (void)r; }
  virtual void end_dialogue(double terminal_bonus) { (void)terminal_bonus; }
  virtual void finish_episode_counter() {}

  virtual acts::DialogueAct decide(entities::ConversationalWorld& world,
                                   entities::ConversationalObject& obj, Rng& rng,
                                   SelectMode mode, const ontology::Ontology& ont) = 0;

  virtual void save(const std::string& dir, const std::string& entity_id) const {
    (void)dir;
    (void)entity_id;
  }
  virtual void load(const std::string& dir, const std::string& entity_id) {
    (void)dir;
    (void)entity_id;
  }
};

std::unique_ptr<DialoguePolicy> make_policy(PolicyKind kind, const std::string& object_id,
                                            const entities::ConversationalWorld& world_template,
                                            const GpSarsaConfig& cfg);

}  // namespace cedm::policy
