#include "subset/gaussian.hpp"

#include <Eigen/Cholesky>

#include <cmath>

#include "subset/rng.hpp"

namespace subset {

void GaussianApprox::validate() const {
  const Eigen::Index p = mode.size();
  if (p < 1 || precision.rows() != p || precision.cols() != p)
    throw DimensionError("gaussian approximation has inconsistent dimensions");
  if (!mode.allFinite() || !precision.allFinite())
    throw DomainError("gaussian approximation has non-finite entries");
  const double asym = (precision - precision.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10)
    throw DomainError("precision matrix is not symmetric (max asymmetry " +
                      std::to_string(asym) + ")");
  Eigen::LLT<Eigen::MatrixXd> llt(precision);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("precision matrix is not positive definite");
}

GaussianApprox tilt_gaussian(const GaussianApprox& g, const Projection& P,
                             double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");
  g.validate();
  if (P.dim != g.dim())
    throw DimensionError("projection dimension does not match the gaussian");
  if (nu == 0.0) return g;

  const Eigen::Index p = g.dim();
  Eigen::MatrixXd tilted = g.precision + nu * (Eigen::MatrixXd::Identity(p, p) - P.matrix);
  // Symmetrize: I - P carries roundoff asymmetry from the projection.
  tilted = 0.5 * (tilted + tilted.transpose()).eval();
  Eigen::LLT<Eigen::MatrixXd> llt(tilted);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("tilted precision lost positive definiteness");
  Eigen::VectorXd mode = llt.solve(g.precision * g.mode);
  return GaussianApprox{std::move(mode), std::move(tilted)};
}

DrawMatrix sample_gaussian(const GaussianApprox& g, Eigen::Index k,
                           std::uint64_t seed, Provenance provenance) {
  g.validate();
  if (k < 1) throw DomainError("need at least one draw");
  Eigen::LLT<Eigen::MatrixXd> llt(g.precision);
  const Eigen::MatrixXd l = llt.matrixL();
  const Eigen::Index p = g.dim();

  auto rng = make_rng(seed, stream::kGaussian);
  Eigen::MatrixXd draws(k, p);
  Eigen::VectorXd z(p);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) z[j] = draw_normal(rng);
    // Omega = L L'; solving L' x = z gives x with covariance Omega^{-1}.
    draws.row(i) =
        (g.mode + l.transpose().triangularView<Eigen::Upper>().solve(z))
            .transpose();
  }
  return DrawMatrix{std::move(draws), provenance, seed};
}

GaussianApprox mode_hessian_from_draws(const DrawMatrix& draws) {
  draws.validate();
  const Eigen::Index k = draws.count();
  const Eigen::Index p = draws.dim();
  if (k <= p + 1)
    throw InsufficientDrawsError("need more than p + 1 draws to moment-match");

  const Eigen::VectorXd mean = draws.draws.colwise().mean();
  const Eigen::MatrixXd centered = draws.draws.rowwise() - mean.transpose();
  Eigen::MatrixXd cov =
      centered.transpose() * centered / static_cast<double>(k - 1);
  const double ridge = 1e-8 * cov.trace() / static_cast<double>(p);
  cov.diagonal().array() += ridge;

  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("sample covariance is singular after ridge");
  Eigen::MatrixXd precision = llt.solve(Eigen::MatrixXd::Identity(p, p));
  precision = 0.5 * (precision + precision.transpose()).eval();
  return GaussianApprox{mean, std::move(precision)};
}

}  // namespace subset
