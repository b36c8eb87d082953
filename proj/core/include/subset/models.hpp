#ifndef SUBSET_MODELS_HPP
#define SUBSET_MODELS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subset/types.hpp"

namespace subset {

// ---------------------------------------------------------------------------
// 1-way ANOVA with conjugate normal--inverse-gamma priors.
//
// Model: y_gi ~ N(mu_g, sigma2_g), mu_g | sigma2_g ~ N(0, sigma2_g / a)
// (precision a / sigma2_g), sigma2_g ~ InvGamma(b/2, c/2).  The
// homoscedastic variant pools one sigma2 across groups.
// ---------------------------------------------------------------------------

struct AnovaSpec {
  Eigen::Index groups = 6;
  Eigen::Index n_per_group = 20;
  Eigen::VectorXd true_means;
  Eigen::VectorXd true_variances;
  double a = 1.0;
  double b = 1.0;
  double c = 2.0;

  void validate() const;  // variances > 0, n >= 2
};

// groups x n matrix of responses.
Eigen::MatrixXd anova_generate(const AnovaSpec& spec, std::uint64_t seed);

// Exact conjugate draws over (mu_1..mu_G, sigma2_1..sigma2_G); 2G columns.
// pool_variance draws a single sigma2 and repeats it across the G variance
// columns.  data may have zero columns (prior-only draws).
DrawMatrix anova_posterior_draws(const AnovaSpec& spec,
                                 const Eigen::MatrixXd& data, Eigen::Index k,
                                 std::uint64_t seed, bool pool_variance = false);

// Draws from the heteroscedastic prior itself (for Bayes factors).
DrawMatrix anova_prior_draws(const AnovaSpec& spec, Eigen::Index k,
                             std::uint64_t seed);

// ---------------------------------------------------------------------------
// Ordinal-covariate regression with a Zellner g prior.
//
// y = X beta + eps, X one-hot over `levels` ordinal groups,
// beta | sigma2 ~ N(0, g sigma2 (X'X)^{-1}), sigma2 ~ InvGamma(a0/2, b0/2).
// ---------------------------------------------------------------------------

struct ZellnerSpec {
  Eigen::Index levels = 9;
  Eigen::Index per_level = 5;
  double g = 45.0;  // = sample size
  Eigen::VectorXd true_coefficients;
  double residual_sd = 1.0;
  // Proper prior on sigma2 so that prior draws of beta exist.
  double sigma2_shape = 1.0;
  double sigma2_scale = 1.0;

  Eigen::Index sample_size() const { return levels * per_level; }
  void validate() const;
};

Eigen::VectorXd zellner_generate(const ZellnerSpec& spec, std::uint64_t seed);

// Conjugate posterior draws of the `levels` regression coefficients.
DrawMatrix zellner_posterior_draws(const ZellnerSpec& spec,
                                   const Eigen::VectorXd& y, Eigen::Index k,
                                   std::uint64_t seed);

DrawMatrix zellner_prior_draws(const ZellnerSpec& spec, Eigen::Index k,
                               std::uint64_t seed);

// ---------------------------------------------------------------------------
// Two-sample binomial with Jeffreys Beta(1/2, 1/2) priors (Example-3 setup).
// ---------------------------------------------------------------------------

struct TwoBinomialSpec {
  Eigen::Index n1 = 100;
  Eigen::Index n2 = 100;
  double p1 = 0.5;
  double p2 = 0.5;

  void validate() const;
};

// Independent Beta posterior draws of (p1, p2) given successes (y1, y2).
DrawMatrix two_binomial_draws(const TwoBinomialSpec& spec, Eigen::Index y1,
                              Eigen::Index y2, Eigen::Index k,
                              std::uint64_t seed);

// ---------------------------------------------------------------------------
// Simulation-study harness.
// ---------------------------------------------------------------------------

struct MethodMetrics {
  double mean_ci_width = 0.0;
  double coverage = 0.0;  // in [0, 1]
  double mse = 0.0;
};

struct StudyResult {
  std::vector<std::pair<std::string, MethodMetrics>> methods;
  Eigen::Index replications = 0;
  double level = 0.95;

  const MethodMetrics& method(const std::string& name) const;
};

enum class AnovaScenario { Homoscedastic, Mild, Strong };

AnovaScenario anova_scenario_from_string(const std::string& s);
std::string to_string(AnovaScenario s);

// Group-variance estimation study: homoscedastic model, heteroscedastic
// model, and the heteroscedastic model tilted toward equal variances with nu
// chosen by Bayes factor.  Replications run with derived per-rep seeds and
// aggregate order-independently.
StudyResult run_anova_study(AnovaScenario scenario, Eigen::Index replications,
                            Eigen::Index draws, std::uint64_t seed);

// Coefficient-estimation study: Zellner base posterior vs. tilting toward a
// power-law or geometric shape with unknown exponent (two-block Gibbs).
StudyResult run_ordinal_study(Eigen::Index replications, Eigen::Index draws,
                              std::uint64_t seed);

}  // namespace subset

#endif  // SUBSET_MODELS_HPP
