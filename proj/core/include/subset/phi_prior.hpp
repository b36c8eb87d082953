#ifndef SUBSET_PHI_PRIOR_HPP
#define SUBSET_PHI_PRIOR_HPP

#include <string>

#include "subset/subspace.hpp"

namespace subset {

// Parses the phi-prior mini-language used on the command line:
//
//   gamma:<shape>,<rate>[:Q=<n>]
//   beta:<a>,<b>[:Q=<n>]
//   lognormal:<mulog>,<sdlog>[:Q=<n>]
//   uniform:<lo>,<hi>[:Q=<n>]
//   table:<csv-path>            (discrete: CSV with value,mass columns)
//
// Continuous priors come back as a ContinuousSpec (density + quantile)
// with default_q grid points; table priors as an explicit DiscreteGrid.
std::variant<DiscreteGrid, ContinuousSpec> parse_phi_prior(const std::string& spec);

// Convenience constructors (quantile/density via Boost.Math).
ContinuousSpec gamma_phi_prior(double shape, double rate, Eigen::Index q = 15);
ContinuousSpec beta_phi_prior(double a, double b, Eigen::Index q = 15);
ContinuousSpec lognormal_phi_prior(double mulog, double sdlog, Eigen::Index q = 15);
ContinuousSpec uniform_phi_prior(double lo, double hi, Eigen::Index q = 15);

}  // namespace subset

#endif  // SUBSET_PHI_PRIOR_HPP
