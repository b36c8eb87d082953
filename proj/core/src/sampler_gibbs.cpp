#include "subset/sampler_gibbs.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <vector>

#include "subset/alias.hpp"
#include "subset/parallel.hpp"
#include "subset/rng.hpp"
#include "subset/tilt.hpp"

namespace subset {

namespace {

Eigen::Index grid_index_of(const DiscreteGrid& grid, double phi) {
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    if (std::abs(grid.values[i] - phi) <=
        1e-12 * std::max(1.0, std::abs(grid.values[i])))
      return static_cast<Eigen::Index>(i);
  }
  throw DomainError("init_phi is not a member of the phi grid");
}

}  // namespace

GibbsTrace gibbs_discrete(const DrawMatrix& post_draws,
                          const DrawMatrix& prior_draws,
                          const SubspaceFamily& family, double nu,
                          Eigen::Index k_nu, std::optional<double> init_phi,
                          std::uint64_t seed) {
  if (post_draws.provenance != Provenance::BasePosterior)
    throw DomainError("gibbs_discrete expects base-posterior draws");
  if (prior_draws.provenance != Provenance::Prior)
    throw DomainError("gibbs_discrete expects prior draws");
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");
  if (k_nu < 1) throw DomainError("need at least one Gibbs iteration");

  const DiscreteGrid grid = family_grid(family);
  const Eigen::Index q_count = grid.size();
  const Eigen::Index ky = post_draws.count();
  const Eigen::Index p = post_draws.dim();

  // Per phi value: normalizer estimate, per-atom residual quadforms, and the
  // alias table of the atomized full conditional.  Built once, O(Q Ky).
  std::vector<double> log_z(q_count);
  std::vector<Eigen::VectorXd> resid(q_count);  // theta'(I-P(phi_q))theta per atom
  std::vector<AliasTable> tables(q_count);

  parallel_for(q_count, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t q = b; q < e; ++q) {
      const Projection proj = projection_from_basis(
          family.generator(grid.values[static_cast<std::size_t>(q)]));
      const Eigen::VectorXd lw1_prior = compute_log_w1(prior_draws, proj);
      log_z[q] = log_sum_exp((nu * lw1_prior).eval()) -
                 std::log(static_cast<double>(prior_draws.count()));
      const Eigen::VectorXd lw1_post = compute_log_w1(post_draws, proj);
      resid[q] = -2.0 * lw1_post;
      const double m = (nu * lw1_post).maxCoeff();
      tables[q] = AliasTable(((nu * lw1_post).array() - m).exp().matrix());
    }
  });
  for (Eigen::Index q = 0; q < q_count; ++q) {
    if (log_z[q] < std::log(1e-300))
      throw NormalizerUnderflowError(
          "normalizer underflow at phi = " +
          std::to_string(grid.values[static_cast<std::size_t>(q)]));
  }

  const AliasTable phi_proposal(
      Eigen::Map<const Eigen::VectorXd>(grid.masses.data(), q_count));

  Eigen::Index curr =
      init_phi ? grid_index_of(grid, *init_phi) : grid.mode_index();

  GibbsTrace trace;
  trace.theta_draws.resize(k_nu, p);
  trace.phi_draws.resize(k_nu);
  trace.nu = nu;
  trace.seed = seed;

  auto rng = make_rng(seed, stream::kGibbs);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::Index accepted = 0;

  for (Eigen::Index k = 0; k < k_nu; ++k) {
    // theta | y, phi: resample a posterior atom.
    const Eigen::Index atom = static_cast<Eigen::Index>(tables[curr].sample(rng));
    trace.theta_draws.row(k) = post_draws.draws.row(atom);

    // phi | y, theta: propose from the prior, MH-correct.
    const Eigen::Index prop = static_cast<Eigen::Index>(phi_proposal.sample(rng));
    const double log_acc = -0.5 * nu * (resid[prop][atom] - resid[curr][atom]) +
                           log_z[curr] - log_z[prop];
    if (std::log(unit(rng)) < log_acc) {
      curr = prop;
      ++accepted;
    }
    trace.phi_draws[k] = grid.values[static_cast<std::size_t>(curr)];
  }
  trace.accept_rate = static_cast<double>(accepted) / static_cast<double>(k_nu);
  return trace;
}

GibbsTrace gibbs_gaussian(const GaussianApprox& g, const SubspaceFamily& family,
                          double nu, const ZSurrogate& surrogate,
                          Eigen::Index k_nu, std::optional<double> init_phi,
                          std::uint64_t seed) {
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");
  if (k_nu < 1) throw DomainError("need at least one Gibbs iteration");
  if (std::abs(surrogate.nu() - nu) > 1e-12 * std::max(1.0, nu))
    throw DomainError("surrogate was fitted at a different nu");
  g.validate();
  const auto* spec = std::get_if<ContinuousSpec>(&family.phi_support);
  if (spec == nullptr)
    throw DomainError("gibbs_gaussian needs a continuous phi support");

  const Eigen::Index p = g.dim();

  struct ThetaBlock {
    Projection proj;
    Eigen::MatrixXd chol_upper;  // upper factor of the tilted precision
    Eigen::VectorXd mode;
  };
  auto make_block = [&](double phi) {
    ThetaBlock blk;
    blk.proj = projection_from_basis(family.generator(phi));
    const GaussianApprox tilted = tilt_gaussian(g, blk.proj, nu);
    Eigen::LLT<Eigen::MatrixXd> llt(tilted.precision);
    if (llt.info() != Eigen::Success)
      throw NotPositiveDefiniteError(
          "tilted precision not positive definite at phi = " + std::to_string(phi));
    blk.chol_upper = Eigen::MatrixXd(llt.matrixL()).transpose();
    blk.mode = tilted.mode;
    return blk;
  };

  double curr_phi = init_phi ? *init_phi : phi_prior_mode(family);
  ThetaBlock curr = make_block(curr_phi);
  double curr_log_z = surrogate.log_predict(curr_phi);

  GibbsTrace trace;
  trace.theta_draws.resize(k_nu, p);
  trace.phi_draws.resize(k_nu);
  trace.nu = nu;
  trace.seed = seed;

  auto rng = make_rng(seed, stream::kGibbs);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd z(p);
  Eigen::VectorXd theta(p);
  Eigen::Index accepted = 0;

  for (Eigen::Index k = 0; k < k_nu; ++k) {
    // theta | y, phi ~ N(m~, Omega~^{-1}) exactly.
    for (Eigen::Index j = 0; j < p; ++j) z[j] = draw_normal(rng);
    theta = curr.mode +
            curr.chol_upper.triangularView<Eigen::Upper>().solve(z);
    trace.theta_draws.row(k) = theta.transpose();

    // phi | y, theta.
    const double prop_phi = spec->quantile(unit(rng));
    const ThetaBlock prop = make_block(prop_phi);
    const double prop_log_z = surrogate.log_predict(prop_phi);
    const double log_acc =
        -0.5 * nu *
            (residual_quadform(theta, prop.proj) -
             residual_quadform(theta, curr.proj)) +
        curr_log_z - prop_log_z;
    if (std::log(unit(rng)) < log_acc) {
      curr_phi = prop_phi;
      curr = prop;
      curr_log_z = prop_log_z;
      ++accepted;
    }
    trace.phi_draws[k] = curr_phi;
  }
  trace.accept_rate = static_cast<double>(accepted) / static_cast<double>(k_nu);
  return trace;
}

}  // namespace subset
