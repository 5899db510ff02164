#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cedm/acts.hpp"
#include "cedm/ontology.hpp"

namespace cedm::entities {

// Probability of "no information shared yet" lives under this key.
inline const std::string kNoneValue = "<none>";
// Relation attributes take values over {kNoneValue, kEquals}.
inline const std::string kEquals = "equals";

// Per-attribute probability distribution over a fixed value domain plus
// kNoneValue (and kDontcare for object slots). Keys are fixed at
// construction; probabilities sum to 1.
class Marginal {
 public:
  Marginal() = default;
  // Domain = values + dontcare (if with_dontcare) + none; mass starts on none.
  explicit Marginal(const std::vector<std::string>& values, bool with_dontcare = true);

  double prob(const std::string& value) const;
  void set(const std::string& value, double p);
  bool has(const std::string& value) const { return p_.count(value) != 0; }

  double none_prob() const { return prob(kNoneValue); }
  // Highest-probability entry excluding kNoneValue; lexicographic tie-break.
  std::pair<std::string, double> top_non_none() const;
  std::pair<std::string, double> second_non_none() const;

  double sum() const;
  void normalize();

  const std::map<std::string, double>& entries() const { return p_; }
  std::map<std::string, double>& entries() { return p_; }

  std::string dump() const;  // value:prob pairs at 4 decimals, sorted

 private:
  std::map<std::string, double> p_;
};

// Most recent real-world match offered by the system; empty if none yet.
struct ContextState {
  std::optional<ontology::Record> offered;

  bool empty() const { return !offered.has_value(); }
  const std::string* value_of(const std::string& slot) const {
    return offered ? offered->value_of(slot) : nullptr;
  }
};

// Derived relation context: per attribute, equality of the two endpoints'
// offered values. NOT-EQUALS is representable here (ground truth from
// offers) while the user-goal marginal only covers {none, equals}.
enum class RelationContextValue { kEmpty, kEquals, kNotEquals };

struct RelationContext {
  std::map<std::string, RelationContextValue> attrs;  // attr name -> value

  RelationContextValue value(const std::string& attr) const {
    auto it = attrs.find(attr);
    return it == attrs.end() ? RelationContextValue::kEmpty : it->second;
  }
};

// Per-slot dialogue history flags.
struct SlotHistory {
  bool system_requested = false;
  bool user_informed = false;
  bool system_informed = false;
  // Set when the user affirms a system confirm for this slot; cleared by any
  // newer evidence.
  bool user_confirmed = false;
};

struct ConversationalObject {
  std::string id;
  const ontology::ObjectTypeDef* type = nullptr;

  std::map<std::string, Marginal> user_goal;  // slot -> marginal (s_u)
  ContextState context;                       // s_c
  std::map<std::string, SlotHistory> history; // h_e, keyed by requestable slot
  std::optional<acts::DialogueAct> last_user_act;  // u
  // Requestable slots the user asked for and the name of the offer they were
  // answered against (empty until answered).
  std::map<std::string, std::string> answered_requests;

  const Marginal& belief(const std::string& slot) const;
  Marginal& belief(const std::string& slot);
};

struct ConversationalRelation {
  std::string id;
  std::string endpoint_a;  // object ids; attribute slot_a lives on endpoint_a
  std::string endpoint_b;
  std::vector<ontology::RelationAttributeDef> attributes;

  std::map<std::string, Marginal> user_goal;  // attr name -> marginal over {none, equals}
  RelationContext context;
  std::map<std::string, SlotHistory> history;  // keyed by attr name
  std::optional<acts::DialogueAct> last_user_act;
  // Set once the user addresses the relation; gates merging and the
  // relation sub-policy.
  bool active = false;

  const ontology::RelationAttributeDef* find_attribute(const std::string& name) const;
  // Attributes whose slot on `object_id` equals `slot`.
  std::vector<const ontology::RelationAttributeDef*> attributes_for_slot(
      const std::string& object_id, const std::string& slot) const;
  std::string other_endpoint(const std::string& object_id) const;
  const std::string& slot_on(const ontology::RelationAttributeDef& attr,
                             const std::string& object_id) const;
};

// Minimal world-level state: greeting history and dialogue-open flag.
struct WorldState {
  bool greeted = false;
  bool closing = false;
};

struct ConversationalWorld {
  std::vector<ConversationalObject> objects;     // declaration order
  std::vector<ConversationalRelation> relations; // sorted by id
  WorldState world_state;
  std::set<std::string> focus;  // entity ids (objects); singleton in practice

  const ConversationalObject* find_object(const std::string& id) const;
  ConversationalObject* find_object(const std::string& id);
  const ConversationalRelation* find_relation(const std::string& id) const;
  ConversationalRelation* find_relation(const std::string& id);
  const ConversationalRelation* find_relation_between(const std::string& a,
                                                      const std::string& b) const;
  ConversationalRelation* find_relation_between(const std::string& a, const std::string& b);
  std::vector<const ConversationalRelation*> relations_of(const std::string& object_id) const;
  bool has_entity(const std::string& id) const;

  std::string dump() const;  // debugging snapshot for episode logs
};

std::string relation_id(const std::string& a, const std::string& b);

// Builds objects with fresh beliefs (mass on none) and auto-creates one
// relation per object pair sharing at least one concept.
ConversationalWorld new_world(
    const std::vector<std::pair<std::string, const ontology::ObjectTypeDef*>>& objects);

// Replaces the context with the offered record (most recent offer wins).
void update_context(ConversationalObject& obj, const ontology::Record& offered);

// Recomputes a relation's context from its endpoints' contexts.
RelationContext update_relation_context(const ConversationalRelation& rel,
                                        const ConversationalWorld& world);

void set_focus(ConversationalWorld& world, const std::set<std::string>& entity_ids);
const std::set<std::string>& current_focus(const ConversationalWorld& world);

}  // namespace cedm::entities
