#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cedm/episode.hpp"
#include "cedm/gp_sarsa.hpp"
#include "cedm/policy.hpp"
#include "cedm/stats.hpp"
#include "cedm/usersim.hpp"

namespace cedm::harness {

struct WorldObjectSpec {
  std::string id;
  std::string type;
  policy::PolicyKind policy = policy::PolicyKind::kCedmFeudal;
};

struct RunConfig {
  std::string name = "run";
  usersim::ErrorModelConfig env;           // environment (ser, nbest)
  double relation_prob = 1.0;              // r
  std::vector<WorldObjectSpec> objects;    // dialogue world
  int train_dialogues = 4000;
  int test_dialogues = 1000;
  std::vector<std::uint64_t> seeds = {101, 102, 103, 104, 105};
  usersim::OrderMode order = usersim::OrderMode::kFixed;
  int max_turns_per_object = 25;
  double success_reward = 30.0;
  double turn_penalty = 1.0;
  std::string ontology_path;
  std::string out_dir = "out";
  policy::GpSarsaConfig learner;

  std::string hash() const;
};

// Sectioned key-value config file (docs/formats.md). The CEDM_OUT_ROOT
// environment variable prefixes out_dir when set.
RunConfig parse_config_text(const std::string& text, const std::string& origin);
RunConfig load_config(const std::string& path);

// One row per (entity, position, seed) aggregate.
struct MetricsRow {
  std::string entity;
  int position = 0;
  std::uint64_t seed = 0;
  double reward_mean = 0.0;
  double success_rate = 0.0;
  long n = 0;
  double relation_act_rate = 0.0;
};

struct MetricsTable {
  std::vector<MetricsRow> rows;

  std::vector<double> reward_samples(const std::string& entity, int position) const;
  std::vector<double> success_samples(const std::string& entity, int position) const;
  // Pooled success counts across seeds for one dialogue position.
  std::pair<long, long> pooled_success(int position) const;
  std::pair<long, long> pooled_success_entity(const std::string& entity, int position) const;
  double pooled_relation_act_rate(int position) const;

  std::string to_csv() const;  // documented schema, one row per entry
  static MetricsTable from_csv(const std::string& text);
  std::string summary_table() const;
};

// Everything a running dialogue needs; construct once per seed/worker.
struct DialogueContext {
  const ontology::Ontology* ont = nullptr;
  const RunConfig* config = nullptr;
  usersim::WorldSpec world_spec;
  std::map<std::string, policy::DialoguePolicy*> policies;  // by entity id
};

// Runs one dialogue: scripted world-level hello/bye, user turns through the
// error model, tracking, per-object policies, reward accounting and success
// evaluation.
episode::EpisodeLog run_dialogue(DialogueContext& ctx, Rng& rng, policy::SelectMode mode,
                                 std::uint64_t episode_index);

// Trains per-seed policy stacks and writes checkpoints under
// <out>/checkpoints/seed<k>/. Returns the checkpoint root.
std::string train(const RunConfig& config);

// Evaluates checkpoints (exploration off); writes per-seed episode logs and
// metrics.csv under the config's out_dir, and returns the table.
MetricsTable evaluate(const RunConfig& config, const std::string& checkpoint_root);

// Trains when checkpoints are missing, then evaluates.
MetricsTable train_and_evaluate(const RunConfig& config);

// Fraction of dialogues containing at least one system relation act.
double relation_act_rate(const std::vector<episode::EpisodeLog>& logs);

// Reward comparison via Welch t-test on per-seed means plus success via the
// pooled two-proportion z-test.
struct Comparison {
  stats::Verdict reward;
  stats::Verdict success;
};
Comparison compare(const MetricsTable& a, const MetricsTable& b, int position);

int cli(int argc, char** argv);

}  // namespace cedm::harness
