#include "subset/subspace.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numeric>

#include "subset/spline.hpp"

namespace subset {

Projection Projection::identity(Eigen::Index p) {
  return Projection{Eigen::MatrixXd::Identity(p, p), p, p};
}

Projection projection_from_basis(const Basis& basis) {
  const Eigen::Index p = basis.matrix.rows();
  const Eigen::Index q = basis.matrix.cols();
  if (p < 1 || q < 1) throw DomainError("basis must be a nonempty p x q matrix");
  if (q > p) throw DomainError("basis has more columns than rows");
  if (!basis.matrix.allFinite())
    throw DomainError("basis contains non-finite entries");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis.matrix);
  qr.setThreshold(kRankTolerance);
  const Eigen::Index rank = qr.rank();
  if (rank < q)
    throw RankDeficiencyError("basis is rank deficient: numerical rank " +
                              std::to_string(rank) + " of " + std::to_string(q) +
                              " columns");

  // Thin Q spans col(L); accumulate P = Q1 Q1' symmetrically.
  Eigen::MatrixXd q1 = qr.householderQ() * Eigen::MatrixXd::Identity(p, q);
  Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(p, p);
  pm.selfadjointView<Eigen::Lower>().rankUpdate(q1);
  pm.triangularView<Eigen::StrictlyUpper>() =
      pm.triangularView<Eigen::StrictlyLower>().transpose();
  return Projection{std::move(pm), p, q};
}

Projection block_projection(Eigen::Index identity_dim,
                            const std::vector<Projection>& blocks) {
  if (identity_dim < 0) throw DomainError("identity_dim must be >= 0");
  Eigen::Index total = identity_dim;
  Eigen::Index rank = identity_dim;
  for (const auto& b : blocks) {
    if (b.matrix.rows() != b.dim || b.matrix.cols() != b.dim)
      throw DimensionError("projection block has inconsistent dimensions");
    total += b.dim;
    rank += b.subspace_dim;
  }
  if (total < 1) throw DomainError("block projection has zero total dimension");

  Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(total, total);
  pm.topLeftCorner(identity_dim, identity_dim).setIdentity();
  Eigen::Index at = identity_dim;
  for (const auto& b : blocks) {
    pm.block(at, at, b.dim, b.dim) = b.matrix;
    at += b.dim;
  }
  return Projection{std::move(pm), total, rank};
}

double residual_quadform(const Eigen::VectorXd& theta, const Projection& P) {
  if (theta.size() != P.dim)
    throw DimensionError("theta has length " + std::to_string(theta.size()) +
                         ", projection expects " + std::to_string(P.dim));
  return (theta - P.matrix * theta).squaredNorm();
}

Basis power_basis(double phi, const Eigen::VectorXd& levels,
                  PowerBasisMode mode) {
  if (!(phi > 0.0) || !std::isfinite(phi))
    throw DomainError("power basis requires phi > 0");
  const Eigen::Index p = levels.size();
  if (p < 1) throw DomainError("power basis needs at least one level");
  Eigen::MatrixXd m(p, 2);
  for (Eigen::Index i = 0; i < p; ++i) {
    const double level = levels[i];
    if (!(level >= 0.0)) throw DomainError("levels must be nonnegative");
    m(i, 0) = 1.0;
    if (level == 0.0) {
      m(i, 1) = 0.0;  // zero dose contributes no drug effect either way
    } else {
      m(i, 1) = mode == PowerBasisMode::Direct ? std::pow(level, phi)
                                               : std::pow(level, -phi);
    }
  }
  return Basis{std::move(m), {}};
}

Basis geometric_basis(double phi, Eigen::Index depth) {
  if (phi == 0.0 || !std::isfinite(phi))
    throw DomainError("geometric basis requires nonzero finite phi");
  if (depth < 1) throw DomainError("geometric basis depth must be >= 1");
  Eigen::MatrixXd m(depth, 2);
  double v = 1.0;
  for (Eigen::Index i = 0; i < depth; ++i) {
    v /= phi;
    m(i, 0) = 1.0;
    m(i, 1) = v;
  }
  return Basis{std::move(m), {}};
}

Basis natural_cubic_spline_basis(const Eigen::VectorXd& points,
                                 Eigen::Index df) {
  const Eigen::Index n = points.size();
  if (df < 2) throw DomainError("spline basis needs df >= 2");
  if (df >= n)
    throw DomainError("spline basis needs df < number of evaluation points");
  for (Eigen::Index i = 1; i < n; ++i)
    if (!(points[i] > points[i - 1]))
      throw DomainError("spline points must be strictly increasing");

  // df knots at evenly spaced quantiles of the points, endpoints included;
  // columns are the cardinal interpolants through the knot indicators.
  Eigen::VectorXd probs(df);
  for (Eigen::Index j = 0; j < df; ++j)
    probs[j] = static_cast<double>(j) / static_cast<double>(df - 1);
  const Eigen::VectorXd knots = sample_quantiles(points, probs);

  Eigen::MatrixXd m(n, df);
  for (Eigen::Index j = 0; j < df; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(df);
    e[j] = 1.0;
    const NaturalCubicSpline cardinal(knots, e);
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = cardinal(points[i]);
  }
  return Basis{std::move(m), {}};
}

void DiscreteGrid::validate() const {
  if (values.empty() || values.size() != masses.size())
    throw DomainError("discrete phi grid needs matching values and masses");
  double total = 0.0;
  for (const double m : masses) {
    if (!(m > 0.0)) throw DomainError("discrete phi masses must be positive");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw DomainError("discrete phi masses must sum to 1");
}

Eigen::Index DiscreteGrid::mode_index() const {
  Eigen::Index best = 0;
  for (std::size_t i = 1; i < masses.size(); ++i)
    if (masses[i] > masses[best]) best = static_cast<Eigen::Index>(i);
  return best;
}

DiscreteGrid discretize(const ContinuousSpec& spec, Eigen::Index q_points) {
  if (q_points < 1) throw DomainError("discretization needs >= 1 point");
  if (!spec.quantile || !spec.density)
    throw DomainError("continuous phi spec lacks density or quantile");
  DiscreteGrid grid;
  grid.values.resize(q_points);
  grid.masses.resize(q_points);
  double total = 0.0;
  for (Eigen::Index q = 0; q < q_points; ++q) {
    const double prob = static_cast<double>(q + 1) / static_cast<double>(q_points + 1);
    grid.values[q] = spec.quantile(prob);
    grid.masses[q] = spec.density(grid.values[q]);
    if (!(grid.masses[q] > 0.0) || !std::isfinite(grid.masses[q]))
      throw DomainError("phi prior density must be positive and finite at its quantiles");
    total += grid.masses[q];
  }
  for (double& m : grid.masses) m /= total;
  // Renormalize once more to absorb rounding in the division pass.
  const double s = std::accumulate(grid.masses.begin(), grid.masses.end(), 0.0);
  for (double& m : grid.masses) m /= s;
  return grid;
}

DiscreteGrid family_grid(const SubspaceFamily& family) {
  if (const auto* g = std::get_if<DiscreteGrid>(&family.phi_support)) {
    g->validate();
    return *g;
  }
  const auto& spec = std::get<ContinuousSpec>(family.phi_support);
  return discretize(spec, spec.default_q);
}

double phi_prior_mode(const SubspaceFamily& family) {
  if (const auto* g = std::get_if<DiscreteGrid>(&family.phi_support))
    return g->values[static_cast<std::size_t>(g->mode_index())];
  const auto& spec = std::get<ContinuousSpec>(family.phi_support);
  // Density argmax over a fine quantile grid; adequate for an initializer.
  const DiscreteGrid fine = discretize(spec, 512);
  return fine.values[static_cast<std::size_t>(fine.mode_index())];
}

}  // namespace subset
