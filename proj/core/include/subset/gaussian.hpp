#ifndef SUBSET_GAUSSIAN_HPP
#define SUBSET_GAUSSIAN_HPP

#include <Eigen/Dense>

#include <cstdint>

#include "subset/subspace.hpp"
#include "subset/types.hpp"

namespace subset {

// Large-sample normal approximation to the base posterior: mode and the
// Hessian of the negative log posterior at the mode (a precision matrix).
struct GaussianApprox {
  Eigen::VectorXd mode;        // m_n, length p
  Eigen::MatrixXd precision;   // Omega_n, p x p symmetric positive definite

  Eigen::Index dim() const { return mode.size(); }

  // Symmetry within 1e-10 and positive definiteness (via Cholesky).
  void validate() const;
};

// Exact tilted normal: precision Omega + nu (I - P), mode solved from
// (Omega + nu(I-P)) m_tilde = Omega m via Cholesky, never an explicit
// inverse.  nu >= 0 keeps the result positive definite.
GaussianApprox tilt_gaussian(const GaussianApprox& g, const Projection& P,
                             double nu);

// K draws from N(mode, precision^{-1}): factor the precision as L L', solve
// L' x = z for standard-normal z, shift by the mode.  Deterministic per seed.
DrawMatrix sample_gaussian(const GaussianApprox& g, Eigen::Index k,
                           std::uint64_t seed,
                           Provenance provenance = Provenance::BasePosterior);

// Moment-matched approximation from posterior draws: mode = sample mean,
// precision = inverse of the sample covariance after a ridge of
// 1e-8 * trace/p toward the diagonal.  Requires K > p + 1.
GaussianApprox mode_hessian_from_draws(const DrawMatrix& draws);

}  // namespace subset

#endif  // SUBSET_GAUSSIAN_HPP
