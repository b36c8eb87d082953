#ifndef SUBSET_TILT_HPP
#define SUBSET_TILT_HPP

#include <Eigen/Dense>

#include "subset/subspace.hpp"
#include "subset/types.hpp"

namespace subset {

// Draws with importance log-weights under exponential tilting.  log_w1 holds
// -(1/2) theta'(I-P)theta per draw; the weights at any other tilt strength
// follow from the power identity w(nu) = w(1)^nu, i.e. log_w = nu * log_w1,
// without touching the draws or the projection again.
struct WeightedDraws {
  DrawMatrix base;
  Eigen::VectorXd log_w1;  // <= 0 elementwise
  double nu = 0.0;
  Eigen::VectorXd log_w;   // = nu * log_w1

  static WeightedDraws make(DrawMatrix draws, const Projection& P, double nu);
};

// log_w1 entries for every draw: entry k = -(1/2) theta_k'(I-P)theta_k.
// Data-parallel over draws; output identical to sequential evaluation.
Eigen::VectorXd compute_log_w1(const DrawMatrix& draws, const Projection& P);

// O(K) rescale to a new tilt strength.  nu_new must be finite and >= 0.
WeightedDraws reweight(const WeightedDraws& wd, double nu_new);

// Softmax of log_w via max subtraction.  Sums to 1 within 1e-12.  Throws
// DegenerateWeightsError when no finite log-weight exists.
Eigen::VectorXd normalized_weights(const WeightedDraws& wd);

// Effective sample size (sum w)^2 / sum w^2, in [1, K].
double ess(const WeightedDraws& wd);

// ESS fraction below which the CLI warns about weight degeneracy.
inline constexpr double kEssWarnFraction = 0.10;

// log(sum_i exp(v_i)) with max subtraction; -inf for an all-(-inf) input.
double log_sum_exp(const Eigen::VectorXd& v);

}  // namespace subset

#endif  // SUBSET_TILT_HPP
