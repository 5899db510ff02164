#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cedm/util.hpp"

namespace cedm::ontology {

// Distinguished value accepted in constraints/goals but never stored in a
// knowledge-base record.
inline const std::string kDontcare = "dontcare";

struct SlotDef {
  std::string name;
  std::string concept_tag;          // e.g. "area"; drives relation derivation
  std::vector<std::string> values;  // declared finite value set
};

struct ObjectTypeDef {
  std::string name;
  std::vector<SlotDef> informable;      // declaration order is fixed
  std::vector<std::string> extra_requestable;  // free-valued, e.g. price

  const SlotDef* find_slot(const std::string& slot) const;
  bool is_informable(const std::string& slot) const { return find_slot(slot) != nullptr; }
  bool is_requestable(const std::string& slot) const;
  // informables + "name" + extras, in that order.
  std::vector<std::string> requestable_slots() const;
};

struct Record {
  std::string name;
  std::map<std::string, std::string> values;  // slot -> value (informable + extras)

  const std::string* value_of(const std::string& slot) const {
    auto it = values.find(slot);
    return it == values.end() ? nullptr : &it->second;
  }
};

struct KnowledgeBase {
  // type name -> records, in file/generation order; record names unique per type.
  std::map<std::string, std::vector<Record>> records;

  const Record* find(const std::string& type, const std::string& name) const;
};

// A derivable connection between two slots carrying the same concept tag.
// Only the "equals" relation value is modelled.
struct RelationAttributeDef {
  std::string name;    // "<slot_a>2<slot_b>"
  std::string slot_a;  // slot on the first endpoint
  std::string slot_b;  // slot on the second endpoint
};

struct Ontology {
  std::vector<ObjectTypeDef> types;
  KnowledgeBase kb;

  const ObjectTypeDef* find_type(const std::string& name) const;
  const ObjectTypeDef& type(const std::string& name) const;
};

struct OntologyError : std::runtime_error {
  explicit OntologyError(const std::string& what) : std::runtime_error(what) {}
};

// Loads and validates the sectioned key-value ontology+KB document
// (grammar in docs/formats.md). Unknown keys are rejected with a line number.
Ontology load_ontology(const std::string& path);
Ontology parse_ontology(const std::string& text, const std::string& origin);
std::string render_ontology(const Ontology& ont);

// One RelationAttributeDef per slot pair with equal concept tags, sorted by name.
std::vector<RelationAttributeDef> derive_relations(const ObjectTypeDef& a,
                                                   const ObjectTypeDef& b);

// Exact filter; kDontcare constraint values match anything.
std::vector<const Record*> query_kb(const Ontology& ont, const std::string& type,
                                    const std::map<std::string, std::string>& constraints);

// Deterministic synthetic database with the Cambridge tourist slot schema.
// Every (area, pricerange) combination gets at least one record per type so
// relation-constrained goals stay satisfiable.
Ontology generate_kb(std::uint64_t seed, const std::map<std::string, int>& sizes);

}  // namespace cedm::ontology
