#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cedm/acts.hpp"
#include "cedm/entities.hpp"

namespace cedm::tracking {

// Threshold both sides of a slot must exceed before disagreeing top values
// raise the conflict bit. 0.5 guarantees each side's top value is unique.
inline constexpr double kConflictThreshold = 0.5;

// Merged focus state b-hat for one object, with per-slot conflict flags and
// the contributing weights that entered each slot's average.
struct FocusStateResult {
  std::map<std::string, entities::Marginal> merged;  // slot -> b-hat
  std::map<std::string, bool> slot_conflict;
  bool conflict = false;  // aggregate bit
  // slot -> weights, object's own weight first, then one per contribution.
  std::map<std::string, std::vector<double>> contributing_weights;

  const entities::Marginal& slot(const std::string& s) const { return merged.at(s); }
};

// Focus-rule update: b'(v) = e(v) + (1 - sum(e)) * b(v), for all v including
// none. Normalization holds analytically.
entities::Marginal focus_rule_update(const entities::Marginal& prior,
                                     const std::map<std::string, double>& evidence);

// Multiplies the rejected value's mass by (1-confidence) and moves the
// removed mass to none.
entities::Marginal apply_rejection_discount(const entities::Marginal& prior,
                                            const std::string& rejected, double confidence);

// Tracking configuration: the baseline (MDDM reduction) drops relation-valued
// evidence entirely.
struct TrackOptions {
  bool accept_relation_evidence = true;
};

// Belief update for one entity from an n-best observation: evidence is
// aggregated per (slot, value) by summed confidence across hypotheses, then
// the focus rule is applied once per slot; negations route through the
// rejection discount. The system act provides the context that bare
// affirm/negate answers refer to.
void track_entity(entities::ConversationalObject& obj,
                  const entities::ConversationalWorld& world,
                  const acts::DialogueAct& system_act, const acts::Observation& obs,
                  const TrackOptions& opts = {});
void track_relation(entities::ConversationalRelation& rel,
                    const acts::DialogueAct& system_act, const acts::Observation& obs);

// World-level flags: greeting and closing.
void track_world(entities::ConversationalWorld& world, const acts::DialogueAct& system_act,
                 const acts::Observation& obs);

// Routes every hypothesis to the entity it addresses, updates relation
// contexts and activity, and moves the focus to the addressed object
// (relation acts focus the referencing object and mark the relation active).
// Returns the id of the focused object after the update, if any.
std::optional<std::string> track_turn(entities::ConversationalWorld& world,
                                      const acts::DialogueAct& system_act,
                                      const acts::Observation& obs,
                                      const TrackOptions& opts = {});

// Relation-weighted contribution b-tilde of the related object o' for one
// slot: if o's context for the matched slot is non-empty it replaces the
// belief with a point mass at the context value, then
//   b~(v) = rel(=) * b(v)            for v != none
//   b~(none) = rel(=) * b(none) + rel(none).
entities::Marginal weighted_relation_belief(const entities::Marginal& rel_marginal,
                                            const entities::Marginal& other_belief,
                                            const std::optional<std::string>& other_context);

// Eq.-style merge of the object belief with the relation-weighted
// contributions: b^(v) = sum_i w_i b_i(v) / sum_i w_i with w_i = 1 - b_i(none).
// A zero total weight falls back to all mass on none.
entities::Marginal merge_marginals(const entities::Marginal& object_belief,
                                   const std::vector<entities::Marginal>& contributions,
                                   bool* conflict_out = nullptr,
                                   std::vector<double>* weights_out = nullptr);

// Full focus state of an object: merges every slot with the b-tilde
// contributions of all active relations touching it.
FocusStateResult merge_focus_state(const entities::ConversationalObject& obj,
                                   const entities::ConversationalWorld& world,
                                   bool use_relations = true);

}  // namespace cedm::tracking
