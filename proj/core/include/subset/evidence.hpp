#ifndef SUBSET_EVIDENCE_HPP
#define SUBSET_EVIDENCE_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subset/gaussian.hpp"
#include "subset/spline.hpp"
#include "subset/subspace.hpp"
#include "subset/tilt.hpp"
#include "subset/types.hpp"

namespace subset {

// Predictions of the normalizer are clamped to (kZFloor, 1].
inline constexpr double kZFloor = 1e-300;

// Monte Carlo estimate of the tilting normalizer Z = E_prior[w(nu)].
// log_value is always finite; value may underflow for extreme nu, which the
// Gibbs samplers reject explicitly.
struct ZEstimate {
  double nu = 0.0;
  std::optional<double> phi;
  double value = 1.0;      // in (0, 1]; exp(log_value)
  double log_value = 0.0;  // <= 0
  double mc_se = 0.0;
  Eigen::Index k0 = 0;     // prior draws used
};

ZEstimate z_hat(const DrawMatrix& prior_draws, const Projection& P, double nu);

struct BayesFactor {
  double value = 1.0;
  double mc_se = 0.0;
  double log_value = 0.0;
};

// Eq-style ratio of mean tilt weights: posterior-draw mean over prior-draw
// mean, both at the same nu.  Exactly 1 at nu = 0.  The MC standard error is
// the delta-method combination of the two relative errors.
BayesFactor bayes_factor(const WeightedDraws& post_wd,
                         const WeightedDraws& prior_wd, double nu);

// Analytic Bayes-factor numerator under the normal approximation:
// |Omega|^{1/2} |Omega~|^{-1/2} exp{-(m'Omega m - m~'Omega~ m~)/2}.
double bf_numerator_gaussian(const GaussianApprox& g, const Projection& P,
                             double nu);

enum class SelectionWarning { BoundaryMaximum, FlatProfile };

std::string to_string(SelectionWarning w);

struct NuSelection {
  double nu_star = 0.0;
  BayesFactor bf_at_star;
  std::vector<std::pair<double, double>> profile;  // (nu, BF) scan points
  std::vector<SelectionWarning> warnings;
};

// Maximize the MC Bayes factor over [lo, hi]: 50-point log-spaced scan, then
// golden-section refinement around the best scan point.  A maximum at hi is
// reported via BoundaryMaximum (nu_star = hi, caller decides); an identically
// flat profile returns lo with FlatProfile.
NuSelection select_nu(const WeightedDraws& post_wd,
                      const WeightedDraws& prior_wd,
                      std::pair<double, double> nu_bounds = {0.0, 1e3},
                      double tolerance = 1e-4);

inline constexpr int kNuScanPoints = 50;

struct SurrogateDiagnostics {
  double max_heldout_rel_error = 0.0;
};

// Spline surrogate for Z over phi (Algorithm-3 precompute).  Continuous
// support: natural cubic spline through (phi_s, log Zhat_s) on a quantile
// grid; predictions are exponentiated and clamped to (kZFloor, 1].  Discrete
// support: an exact lookup table, no interpolation.
class ZSurrogate {
 public:
  double nu() const { return nu_; }
  const Eigen::VectorXd& phi_grid() const { return phi_grid_; }
  const Eigen::VectorXd& zhat_values() const { return zhat_; }
  const SurrogateDiagnostics& diagnostics() const { return diagnostics_; }
  bool is_table() const { return table_; }

  double log_predict(double phi) const;
  double predict(double phi) const;

  friend ZSurrogate zhat_spline_fit(const SubspaceFamily& family,
                                    const DrawMatrix& prior_draws, double nu,
                                    Eigen::Index grid_size);

 private:
  double nu_ = 0.0;
  bool table_ = false;
  Eigen::VectorXd phi_grid_;
  Eigen::VectorXd zhat_;      // Z values at the grid
  Eigen::VectorXd log_zhat_;
  NaturalCubicSpline spline_;  // over log Z, unused in table mode
  SurrogateDiagnostics diagnostics_;
};

ZSurrogate zhat_spline_fit(const SubspaceFamily& family,
                           const DrawMatrix& prior_draws, double nu,
                           Eigen::Index grid_size);

}  // namespace subset

#endif  // SUBSET_EVIDENCE_HPP
