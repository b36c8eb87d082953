#ifndef SUBSET_SAMPLER_GIBBS_HPP
#define SUBSET_SAMPLER_GIBBS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>

#include "subset/evidence.hpp"
#include "subset/gaussian.hpp"
#include "subset/subspace.hpp"
#include "subset/types.hpp"

namespace subset {

struct GibbsTrace {
  Eigen::MatrixXd theta_draws;  // K_nu x p
  Eigen::VectorXd phi_draws;    // K_nu
  double accept_rate = 0.0;     // accepted phi proposals / K_nu
  double nu = 0.0;
  std::uint64_t seed = 0;

  // Default reporting burn-in: first 10% of the trace.
  Eigen::Index default_burn_in() const { return theta_draws.rows() / 10; }
};

// Two-block MH-within-Gibbs with a discrete phi support (a continuous prior
// is quantile-discretized first).  Per phi value the sampler precomputes the
// normalizer estimate, the per-draw importance weights, and an alias table,
// so each iteration costs O(1): resample a posterior atom given phi, then
// propose phi* from its prior and accept with
// min{1, exp(-nu/2 theta'(P_curr - P*)theta) * Zhat_curr / Zhat*}.
//
// Throws NormalizerUnderflowError if any Zhat falls below 1e-300.
GibbsTrace gibbs_discrete(const DrawMatrix& post_draws,
                          const DrawMatrix& prior_draws,
                          const SubspaceFamily& family, double nu,
                          Eigen::Index k_nu,
                          std::optional<double> init_phi,  // default: prior mode
                          std::uint64_t seed);

// Large-sample variant: theta is drawn exactly from the tilted normal
// N(m~, Omega~^{-1}) with Omega~ = Omega + nu(I - P(phi_curr)); the phi block
// uses surrogate normalizer values.  Requires a continuous phi support and a
// surrogate fitted at the same nu.
GibbsTrace gibbs_gaussian(const GaussianApprox& g, const SubspaceFamily& family,
                          double nu, const ZSurrogate& surrogate,
                          Eigen::Index k_nu,
                          std::optional<double> init_phi,
                          std::uint64_t seed);

}  // namespace subset

#endif  // SUBSET_SAMPLER_GIBBS_HPP
