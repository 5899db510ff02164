#pragma once

#include <string>
#include <vector>

namespace cedm::stats {

enum class Better { kA, kB, kNoDifference };

struct Verdict {
  Better result = Better::kNoDifference;
  double statistic = 0.0;
  double p_value = 1.0;

  std::string str() const;
};

// Two-sided Welch t-test on per-seed means. Requires at least 2 samples per
// side; degenerate zero-variance ties report no difference.
Verdict welch_t_test(const std::vector<double>& a, const std::vector<double>& b,
                     double alpha = 0.05);

// Two-sided two-proportion z-test on pooled successes.
Verdict two_proportion_z_test(long successes_a, long n_a, long successes_b, long n_b,
                              double alpha = 0.05);

double mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);

}  // namespace cedm::stats
