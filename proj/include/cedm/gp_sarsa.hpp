#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "cedm/util.hpp"

namespace cedm::policy {

struct QPosterior {
  double mean = 0.0;
  double variance = 0.0;
};

// Q-value estimate provider; lets action selection be tested against stubs.
class QFunction {
 public:
  virtual ~QFunction() = default;
  virtual QPosterior posterior(const Eigen::VectorXd& summary, int action) const = 0;
};

struct GpSarsaConfig {
  double gamma = 0.99;  // discount inside the learner
  double sigma = 5.0;   // observation noise std deviation
  double nu = 0.01;     // kernel-span sparsification threshold
};

// Online sparse GP-SARSA over (summary, action) points with a Kronecker
// delta kernel on actions times a linear kernel on summaries. The dictionary
// holds representative points; alpha/C carry the posterior mean and
// covariance corrections over the dictionary.
class GpSarsa : public QFunction {
 public:
  GpSarsa(int summary_dim, int num_actions, GpSarsaConfig cfg = {});

  // Episode protocol: begin with the first visited point, then one step per
  // SARSA transition, then end with the terminal reward.
  void begin_episode(const Eigen::VectorXd& summary, int action);
  void step(double reward, const Eigen::VectorXd& summary, int action);
  void end_episode(double reward);
  bool episode_active() const { return episode_active_; }

  QPosterior posterior(const Eigen::VectorXd& summary, int action) const override;

  int summary_dim() const { return dim_; }
  int num_actions() const { return num_actions_; }
  int dictionary_size() const { return static_cast<int>(actions_.size()); }
  const GpSarsaConfig& config() const { return cfg_; }

  // Versioned text container; hexfloat payload round-trips bit-exact.
  void save(std::ostream& os) const;
  static GpSarsa load(std::istream& is);

  bool operator==(const GpSarsa& other) const;

 private:
  double kernel(const Eigen::VectorXd& xa, int aa, const Eigen::VectorXd& xb, int ab) const;
  Eigen::VectorXd ktilde(const Eigen::VectorXd& x, int a) const;
  // Adds (x, a) to the dictionary given its projection coefficients and
  // novelty; extends alpha/C with zeros.
  void grow_dictionary(const Eigen::VectorXd& x, int a, const Eigen::VectorXd& proj,
                       double delta);

  int dim_;
  int num_actions_;
  GpSarsaConfig cfg_;

  std::vector<Eigen::VectorXd> points_;
  std::vector<int> actions_;
  Eigen::MatrixXd kinv_;   // inverse dictionary Gram matrix
  Eigen::VectorXd alpha_;  // posterior mean weights
  Eigen::MatrixXd cmat_;   // posterior covariance correction

  // Per-episode temporaries.
  bool episode_active_ = false;
  Eigen::VectorXd prev_proj_;    // projection coefficients of the previous point
  Eigen::VectorXd prev_ktilde_;  // k~ of the previous point
  double prev_kxx_ = 0.0;
  Eigen::VectorXd cvec_;
  double dscalar_ = 0.0;
  double svar_ = 0.0;  // infinity encodes 1/s = 0 at episode start
};

}  // namespace cedm::policy
