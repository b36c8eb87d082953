#ifndef SUBSET_SAMPLER_IS_HPP
#define SUBSET_SAMPLER_IS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "subset/evidence.hpp"
#include "subset/subspace.hpp"
#include "subset/tilt.hpp"
#include "subset/types.hpp"

namespace subset {

// A user probe: any functional of a single draw, reported as its weighted
// posterior mean.  Indicator-valued probes yield posterior probabilities.
struct Probe {
  std::string name;
  std::function<double(Eigen::Ref<const Eigen::RowVectorXd>)> fn;
};

// Built-in probe: strictly monotone ordering of the coordinates in
// [first, last] (inclusive; last = -1 means the final coordinate).
Probe monotone_probe(bool decreasing, Eigen::Index first = 0,
                     Eigen::Index last = -1);

struct PosteriorSummary {
  Eigen::VectorXd mean;
  Eigen::VectorXd sd;
  Eigen::VectorXd ci_lo;
  Eigen::VectorXd ci_hi;
  double level = 0.95;
  double ess = 0.0;
  double nu = 0.0;
  std::vector<std::pair<std::string, double>> probes;
};

// Weighted means/sds and credible intervals from the weighted quantiles
// ((1-level)/2, (1+level)/2), using the left-continuous inverse of the
// weighted ECDF.  Requires K >= 2.
PosteriorSummary summarize(const WeightedDraws& wd, double level = 0.95,
                           const std::vector<Probe>& probes = {});

// Weighted quantile of one coordinate (left-continuous ECDF inverse).
double weighted_quantile(const Eigen::VectorXd& values,
                         const Eigen::VectorXd& weights_on_simplex, double p);

// Multinomial importance resampling via an alias table: k_out draws with
// replacement from the weighted atoms.  Provenance: TiltedPosterior.
DrawMatrix resample(const WeightedDraws& wd, Eigen::Index k_out,
                    std::uint64_t seed);

struct Algorithm1Result {
  WeightedDraws weighted;  // posterior draws carrying weights at nu_star
  NuSelection selection;
};

// End-to-end importance sampler with Bayes-factor selection of nu: compute
// log_w1 for both draw sets, maximize the weight-ratio helper over
// nu_bounds, attach the nu_star weights to the posterior draws.
Algorithm1Result run_algorithm1(const DrawMatrix& post_draws,
                                const DrawMatrix& prior_draws,
                                const Projection& P,
                                std::pair<double, double> nu_bounds = {0.0, 1e3},
                                double tolerance = 1e-4);

}  // namespace subset

#endif  // SUBSET_SAMPLER_IS_HPP
