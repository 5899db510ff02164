#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cedm::entities {
struct ConversationalWorld;
}

namespace cedm::acts {

enum class ActType { kHello, kInform, kRequest, kConfirm, kSelect, kReqalts, kNegate, kAffirm, kBye };

const char* act_type_name(ActType t);
std::optional<ActType> act_type_from_name(const std::string& name);

// A slot reference qualified by the conversational entity it belongs to,
// e.g. CamRestaurants#area.
struct QualifiedSlot {
  std::string entity;
  std::string slot;
  bool operator==(const QualifiedSlot&) const = default;
  std::string str() const { return entity + "#" + slot; }
};

// Filler value: literal, dontcare (a reserved literal), a reference to
// another entity's slot (relation), or a negated literal.
struct SlotFiller {
  enum class Kind { kLiteral, kDontcare, kRelationRef, kNegated, kBare };
  Kind kind = Kind::kBare;
  QualifiedSlot slot;
  std::string value;        // literal / negated value
  QualifiedSlot other;      // relation target when kind == kRelationRef

  bool operator==(const SlotFiller&) const = default;

  static SlotFiller literal(QualifiedSlot s, std::string v);
  static SlotFiller dontcare(QualifiedSlot s);
  static SlotFiller relation(QualifiedSlot s, QualifiedSlot other);
  static SlotFiller negated(QualifiedSlot s, std::string v);
  static SlotFiller bare(QualifiedSlot s);
};

struct DialogueAct {
  ActType type = ActType::kHello;
  std::vector<SlotFiller> fillers;

  bool operator==(const DialogueAct&) const = default;
  bool has_relation_filler() const;
};

// One noisy user turn: n-best list of (act, confidence), sorted by
// descending confidence; confidences sum to <= 1 and any remainder is
// unusable input.
struct Observation {
  std::vector<std::pair<DialogueAct, double>> hypotheses;

  const DialogueAct* top() const {
    return hypotheses.empty() ? nullptr : &hypotheses.front().first;
  }
  double total_confidence() const;
  void sort_and_check();
};

struct ActParseError : std::runtime_error {
  ActParseError(const std::string& what, std::size_t pos);
  std::size_t position;
};

// Grammar (docs/formats.md):
//   acttype(entity#slot="value", entity#slot!="value", entity#slot=entity#slot, entity#slot)
DialogueAct parse_act(const std::string& text);
std::string render_act(const DialogueAct& act);

// Id of the conversational entity an act addresses, or kWorldEntity for acts
// with no entity content. Relation-valued fillers map to the relation entity
// between the two referenced objects.
inline const std::string kWorldEntity = "WORLD";
std::string addressed_entity_of(const DialogueAct& act,
                                const entities::ConversationalWorld& world);

}  // namespace cedm::acts
