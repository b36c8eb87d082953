#ifndef SUBSET_SUBSPACE_HPP
#define SUBSET_SUBSPACE_HPP

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "subset/types.hpp"

namespace subset {

// A p x q matrix whose column span defines the linear subspace of interest.
// Full column rank is not enforced at construction; it is checked (with a
// pivoted-QR rank test) when a projection is formed, so that a degenerate
// member of a user-supplied parameter grid fails exactly where it is used.
struct Basis {
  Eigen::MatrixXd matrix;            // p x q, q <= p
  std::vector<std::string> labels;   // optional per-row names

  Eigen::Index dim() const { return matrix.rows(); }
  Eigen::Index rank_requested() const { return matrix.cols(); }
};

// Symmetric idempotent projection onto a q-dimensional subspace of R^p.
struct Projection {
  Eigen::MatrixXd matrix;  // p x p
  Eigen::Index dim = 0;          // p
  Eigen::Index subspace_dim = 0; // q = trace

  static Projection identity(Eigen::Index p);
};

// Relative tolerance for the pivoted-QR rank decision in
// projection_from_basis.
inline constexpr double kRankTolerance = 1e-10;

// P = Q1 Q1' where L = Q R (column-pivoted QR).  Equivalent to the textbook
// L(L'L)^{-1}L' but better conditioned.  Throws RankDeficiencyError when the
// numerical rank of L falls short of its column count.
Projection projection_from_basis(const Basis& basis);

// Block-diagonal projection: leading identity of size identity_dim
// (coordinates exempt from shrinkage) followed by the given blocks.
Projection block_projection(Eigen::Index identity_dim,
                            const std::vector<Projection>& blocks);

// theta'(I - P)theta, evaluated as the squared norm of the residual
// theta - P theta so the result is nonnegative by construction.
double residual_quadform(const Eigen::VectorXd& theta, const Projection& P);

// Two-column power-law basis: intercept plus a level^phi column.
//
//   Direct:     x_i = levels_i ^ phi         (ordinal levels, e.g. 1..9)
//   Reciprocal: x_i = levels_i ^ -phi        (dose denominators, e.g. 4,3,2;
//                                             a zero level maps to 0, the
//                                             no-drug row)
enum class PowerBasisMode { Direct, Reciprocal };

Basis power_basis(double phi, const Eigen::VectorXd& levels,
                  PowerBasisMode mode = PowerBasisMode::Direct);

// Two-column geometric basis: intercept plus (1/phi, 1/phi^2, ..., 1/phi^depth).
// phi = 1 is accepted here and fails at projection time (rank).
Basis geometric_basis(double phi, Eigen::Index depth);

// Natural cubic spline basis evaluated at `points`: df columns spanning the
// natural cubic splines on df knots placed at evenly spaced quantiles of the
// points (endpoints included).  The span always contains constants and
// linear trends; df = 2 gives exactly {1, x}.
Basis natural_cubic_spline_basis(const Eigen::VectorXd& points, Eigen::Index df);

// Prior over the subspace parameter phi: either an explicit discrete grid
// with masses, or a continuous density to be discretized through quantiles.
struct DiscreteGrid {
  std::vector<double> values;
  std::vector<double> masses;  // positive, sum to 1

  void validate() const;
  Eigen::Index size() const { return static_cast<Eigen::Index>(values.size()); }
  Eigen::Index mode_index() const;  // argmax mass
};

struct ContinuousSpec {
  std::function<double(double)> density;
  std::function<double(double)> quantile;  // inverse CDF on (0,1)
  Eigen::Index default_q = 15;             // grid size when discretized
};

// phi |-> basis, plus the prior over phi.
struct SubspaceFamily {
  std::function<Basis(double)> generator;
  std::variant<DiscreteGrid, ContinuousSpec> phi_support;

  bool is_discrete() const {
    return std::holds_alternative<DiscreteGrid>(phi_support);
  }
};

// Quantile discretization of a continuous phi prior: values at the
// probabilities q/(Q+1) for q = 1..Q, masses proportional to the density at
// those values.
DiscreteGrid discretize(const ContinuousSpec& spec, Eigen::Index q_points);

// The discrete grid backing a family: the grid itself, or the quantile
// discretization of the continuous spec (with its default_q).
DiscreteGrid family_grid(const SubspaceFamily& family);

// Prior mode of phi.  Discrete: the highest-mass grid value.  Continuous:
// the density argmax over a fine quantile grid.
double phi_prior_mode(const SubspaceFamily& family);

}  // namespace subset

#endif  // SUBSET_SUBSPACE_HPP
