#include "subset/models.hpp"

#include <cmath>
#include <vector>

#include "subset/parallel.hpp"
#include "subset/phi_prior.hpp"
#include "subset/rng.hpp"
#include "subset/sampler_gibbs.hpp"
#include "subset/sampler_is.hpp"
#include "subset/subspace.hpp"
#include "subset/tilt.hpp"

namespace subset {

void AnovaSpec::validate() const {
  if (groups < 1 || true_means.size() != groups ||
      true_variances.size() != groups)
    throw DimensionError("anova spec dimensions are inconsistent");
  if (n_per_group < 2) throw DomainError("anova needs n >= 2 per group");
  if ((true_variances.array() <= 0.0).any())
    throw DomainError("anova variances must be positive");
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw DomainError("anova hyperparameters must be positive");
}

Eigen::MatrixXd anova_generate(const AnovaSpec& spec, std::uint64_t seed) {
  spec.validate();
  auto rng = make_rng(seed, stream::kData);
  Eigen::MatrixXd y(spec.groups, spec.n_per_group);
  for (Eigen::Index g = 0; g < spec.groups; ++g) {
    const double sd = std::sqrt(spec.true_variances[g]);
    for (Eigen::Index i = 0; i < spec.n_per_group; ++i)
      y(g, i) = draw_normal(rng, spec.true_means[g], sd);
  }
  return y;
}

namespace {

struct GroupStats {
  double n = 0.0;
  double mean = 0.0;
  double ss = 0.0;  // sum of squared deviations from the group mean
};

GroupStats group_stats(const Eigen::MatrixXd& data, Eigen::Index g) {
  GroupStats st;
  st.n = static_cast<double>(data.cols());
  if (data.cols() == 0) return st;
  st.mean = data.row(g).mean();
  st.ss = (data.row(g).array() - st.mean).square().sum();
  return st;
}

}  // namespace

DrawMatrix anova_posterior_draws(const AnovaSpec& spec,
                                 const Eigen::MatrixXd& data, Eigen::Index k,
                                 std::uint64_t seed, bool pool_variance) {
  spec.validate();
  if (k < 1) throw DomainError("need at least one draw");
  if (data.cols() > 0 && data.rows() != spec.groups)
    throw DimensionError("data rows must match the number of groups");

  const Eigen::Index g_count = spec.groups;
  std::vector<GroupStats> stats(static_cast<std::size_t>(g_count));
  for (Eigen::Index g = 0; g < g_count; ++g)
    stats[static_cast<std::size_t>(g)] = group_stats(data, g);

  auto rng = make_rng(seed, stream::kPosterior);
  Eigen::MatrixXd draws(k, 2 * g_count);

  if (pool_variance) {
    double shape = spec.b / 2.0;
    double scale = spec.c / 2.0;
    for (const auto& st : stats) {
      shape += st.n / 2.0;
      scale += 0.5 * (st.ss + spec.a * st.n * st.mean * st.mean / (spec.a + st.n));
    }
    for (Eigen::Index i = 0; i < k; ++i) {
      const double s2 = draw_inverse_gamma(rng, shape, scale);
      for (Eigen::Index g = 0; g < g_count; ++g) {
        const auto& st = stats[static_cast<std::size_t>(g)];
        const double kappa = spec.a + st.n;
        draws(i, g) =
            draw_normal(rng, st.n * st.mean / kappa, std::sqrt(s2 / kappa));
        draws(i, g_count + g) = s2;
      }
    }
  } else {
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index g = 0; g < g_count; ++g) {
        const auto& st = stats[static_cast<std::size_t>(g)];
        const double kappa = spec.a + st.n;
        const double shape = (spec.b + st.n) / 2.0;
        const double scale =
            0.5 * (spec.c + st.ss + spec.a * st.n * st.mean * st.mean / kappa);
        const double s2 = draw_inverse_gamma(rng, shape, scale);
        draws(i, g) =
            draw_normal(rng, st.n * st.mean / kappa, std::sqrt(s2 / kappa));
        draws(i, g_count + g) = s2;
      }
    }
  }
  const Provenance prov =
      data.cols() == 0 ? Provenance::Prior : Provenance::BasePosterior;
  return DrawMatrix{std::move(draws), prov, seed};
}

DrawMatrix anova_prior_draws(const AnovaSpec& spec, Eigen::Index k,
                             std::uint64_t seed) {
  const Eigen::MatrixXd empty(spec.groups, 0);
  return anova_posterior_draws(spec, empty, k, seed, /*pool_variance=*/false);
}

void ZellnerSpec::validate() const {
  if (levels < 2 || per_level < 1)
    throw DomainError("zellner spec needs >= 2 levels and >= 1 obs per level");
  if (true_coefficients.size() != levels)
    throw DimensionError("true coefficient vector must match the level count");
  if (!(g > 0.0)) throw DomainError("zellner g must be positive");
  if (!(residual_sd >= 0.0)) throw DomainError("residual sd must be >= 0");
  if (!(sigma2_shape > 0.0 && sigma2_scale > 0.0))
    throw DomainError("sigma2 prior hyperparameters must be positive");
}

Eigen::VectorXd zellner_generate(const ZellnerSpec& spec, std::uint64_t seed) {
  spec.validate();
  auto rng = make_rng(seed, stream::kData);
  Eigen::VectorXd y(spec.sample_size());
  Eigen::Index at = 0;
  for (Eigen::Index level = 0; level < spec.levels; ++level)
    for (Eigen::Index i = 0; i < spec.per_level; ++i)
      y[at++] = draw_normal(rng, spec.true_coefficients[level], spec.residual_sd);
  return y;
}

DrawMatrix zellner_posterior_draws(const ZellnerSpec& spec,
                                   const Eigen::VectorXd& y, Eigen::Index k,
                                   std::uint64_t seed) {
  spec.validate();
  if (y.size() != spec.sample_size())
    throw DimensionError("response length must equal levels * per_level");
  if (k < 1) throw DomainError("need at least one draw");

  // One-hot design: X'X = per_level * I, the OLS fit is the group means.
  Eigen::VectorXd ols(spec.levels);
  for (Eigen::Index level = 0; level < spec.levels; ++level)
    ols[level] = y.segment(level * spec.per_level, spec.per_level).mean();

  const double n = static_cast<double>(spec.sample_size());
  const double shrink = spec.g / (1.0 + spec.g);
  const double fit_ss =
      static_cast<double>(spec.per_level) * ols.squaredNorm();
  const double shape = spec.sigma2_shape + n / 2.0;
  const double scale = spec.sigma2_scale + 0.5 * (y.squaredNorm() - shrink * fit_ss);

  auto rng = make_rng(seed, stream::kPosterior);
  Eigen::MatrixXd draws(k, spec.levels);
  const double coef_var_unit = shrink / static_cast<double>(spec.per_level);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s2 = draw_inverse_gamma(rng, shape, scale);
    const double sd = std::sqrt(s2 * coef_var_unit);
    for (Eigen::Index j = 0; j < spec.levels; ++j)
      draws(i, j) = draw_normal(rng, shrink * ols[j], sd);
  }
  return DrawMatrix{std::move(draws), Provenance::BasePosterior, seed};
}

DrawMatrix zellner_prior_draws(const ZellnerSpec& spec, Eigen::Index k,
                               std::uint64_t seed) {
  spec.validate();
  if (k < 1) throw DomainError("need at least one draw");
  auto rng = make_rng(seed, stream::kPrior);
  Eigen::MatrixXd draws(k, spec.levels);
  const double unit = spec.g / static_cast<double>(spec.per_level);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s2 = draw_inverse_gamma(rng, spec.sigma2_shape, spec.sigma2_scale);
    const double sd = std::sqrt(s2 * unit);
    for (Eigen::Index j = 0; j < spec.levels; ++j)
      draws(i, j) = draw_normal(rng, 0.0, sd);
  }
  return DrawMatrix{std::move(draws), Provenance::Prior, seed};
}

void TwoBinomialSpec::validate() const {
  if (n1 < 0 || n2 < 0) throw DomainError("binomial sizes must be >= 0");
  if (!(p1 > 0.0 && p1 < 1.0 && p2 > 0.0 && p2 < 1.0))
    throw DomainError("binomial probabilities must lie in (0,1)");
}

DrawMatrix two_binomial_draws(const TwoBinomialSpec& spec, Eigen::Index y1,
                              Eigen::Index y2, Eigen::Index k,
                              std::uint64_t seed) {
  spec.validate();
  if (y1 < 0 || y1 > spec.n1 || y2 < 0 || y2 > spec.n2)
    throw DomainError("success counts must lie in [0, n]");
  if (k < 1) throw DomainError("need at least one draw");
  auto rng = make_rng(seed, stream::kPosterior);
  Eigen::MatrixXd draws(k, 2);
  for (Eigen::Index i = 0; i < k; ++i) {
    draws(i, 0) = draw_beta(rng, 0.5 + static_cast<double>(y1),
                            0.5 + static_cast<double>(spec.n1 - y1));
    draws(i, 1) = draw_beta(rng, 0.5 + static_cast<double>(y2),
                            0.5 + static_cast<double>(spec.n2 - y2));
  }
  const Provenance prov = (spec.n1 == 0 && spec.n2 == 0)
                              ? Provenance::Prior
                              : Provenance::BasePosterior;
  return DrawMatrix{std::move(draws), prov, seed};
}

const MethodMetrics& StudyResult::method(const std::string& name) const {
  for (const auto& [n, m] : methods)
    if (n == name) return m;
  throw DomainError("no such method in study result: " + name);
}

AnovaScenario anova_scenario_from_string(const std::string& s) {
  if (s == "homo") return AnovaScenario::Homoscedastic;
  if (s == "mild") return AnovaScenario::Mild;
  if (s == "strong") return AnovaScenario::Strong;
  throw DomainError("unknown anova scenario: " + s + " (homo|mild|strong)");
}

std::string to_string(AnovaScenario s) {
  switch (s) {
    case AnovaScenario::Homoscedastic:
      return "homo";
    case AnovaScenario::Mild:
      return "mild";
    case AnovaScenario::Strong:
      return "strong";
  }
  return "unknown";
}

namespace {

struct MetricAccumulator {
  double width = 0.0;
  double covered = 0.0;
  double sq_err = 0.0;
  double count = 0.0;

  void add(const Eigen::VectorXd& mean, const Eigen::VectorXd& lo,
           const Eigen::VectorXd& hi, const Eigen::VectorXd& truth,
           Eigen::Index first, Eigen::Index n) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index c = first + j;
      width += hi[c] - lo[c];
      covered += (truth[j] >= lo[c] && truth[j] <= hi[c]) ? 1.0 : 0.0;
      sq_err += (mean[c] - truth[j]) * (mean[c] - truth[j]);
      count += 1.0;
    }
  }

  MethodMetrics finish() const {
    return MethodMetrics{width / count, covered / count, sq_err / count};
  }

  MetricAccumulator& operator+=(const MetricAccumulator& o) {
    width += o.width;
    covered += o.covered;
    sq_err += o.sq_err;
    count += o.count;
    return *this;
  }
};

WeightedDraws uniform_weights(DrawMatrix draws) {
  const Eigen::Index k = draws.count();
  return WeightedDraws{std::move(draws), Eigen::VectorXd::Zero(k), 0.0,
                       Eigen::VectorXd::Zero(k)};
}

}  // namespace

StudyResult run_anova_study(AnovaScenario scenario, Eigen::Index replications,
                            Eigen::Index draws, std::uint64_t seed) {
  if (replications < 1 || draws < 2)
    throw DomainError("study needs replications >= 1 and draws >= 2");

  AnovaSpec spec;
  spec.groups = 6;
  spec.n_per_group = 20;
  spec.true_means = Eigen::VectorXd::LinSpaced(6, 1.0, 6.0);
  switch (scenario) {
    case AnovaScenario::Homoscedastic:
      spec.true_variances = Eigen::VectorXd::Constant(6, 2.0);
      break;
    case AnovaScenario::Mild:
      spec.true_variances = Eigen::VectorXd::LinSpaced(6, 1.0, 4.0);
      break;
    case AnovaScenario::Strong:
      spec.true_variances = Eigen::VectorXd::LinSpaced(6, 1.0, 11.0);
      break;
  }

  const Eigen::Index g_count = spec.groups;
  // Tilt only the variance block toward equal variances (identity on means).
  const Projection p_equal = projection_from_basis(
      Basis{Eigen::MatrixXd::Ones(g_count, 1), {}});
  const Projection p_subset = block_projection(g_count, {p_equal});

  struct RepResult {
    MetricAccumulator homo, hetero, tilted;
  };
  std::vector<RepResult> reps(static_cast<std::size_t>(replications));

  parallel_for(replications, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t r = b; r < e; ++r) {
      const std::uint64_t rep_seed = derive_seed(seed, stream::kStudyRep, r);
      const Eigen::MatrixXd data = anova_generate(spec, rep_seed);

      DrawMatrix homo =
          anova_posterior_draws(spec, data, draws, splitmix64(rep_seed + 1), true);
      DrawMatrix hetero =
          anova_posterior_draws(spec, data, draws, splitmix64(rep_seed + 2), false);
      DrawMatrix prior =
          anova_prior_draws(spec, draws, splitmix64(rep_seed + 3));

      const Algorithm1Result tilt = run_algorithm1(hetero, prior, p_subset);

      const PosteriorSummary s_homo = summarize(uniform_weights(std::move(homo)));
      const PosteriorSummary s_tilt = summarize(tilt.weighted);
      const PosteriorSummary s_het = summarize(uniform_weights(std::move(hetero)));

      auto& rep = reps[static_cast<std::size_t>(r)];
      rep.homo.add(s_homo.mean, s_homo.ci_lo, s_homo.ci_hi, spec.true_variances,
                   g_count, g_count);
      rep.hetero.add(s_het.mean, s_het.ci_lo, s_het.ci_hi, spec.true_variances,
                     g_count, g_count);
      rep.tilted.add(s_tilt.mean, s_tilt.ci_lo, s_tilt.ci_hi,
                     spec.true_variances, g_count, g_count);
    }
  });

  MetricAccumulator homo, hetero, tilted;
  for (const auto& rep : reps) {
    homo += rep.homo;
    hetero += rep.hetero;
    tilted += rep.tilted;
  }

  StudyResult result;
  result.replications = replications;
  result.level = 0.95;
  result.methods.emplace_back("homoscedastic", homo.finish());
  result.methods.emplace_back("heteroscedastic", hetero.finish());
  result.methods.emplace_back("subset", tilted.finish());
  return result;
}

StudyResult run_ordinal_study(Eigen::Index replications, Eigen::Index draws,
                              std::uint64_t seed) {
  if (replications < 1 || draws < 2)
    throw DomainError("study needs replications >= 1 and draws >= 2");

  ZellnerSpec spec;
  spec.levels = 9;
  spec.per_level = 5;
  spec.g = static_cast<double>(spec.sample_size());
  spec.true_coefficients.resize(9);
  spec.true_coefficients[0] = 0.0;
  for (Eigen::Index j = 1; j < 9; ++j)
    spec.true_coefficients[j] = 0.005 * std::pow(static_cast<double>(j), 4.0);
  spec.residual_sd = 1.0;

  const Eigen::VectorXd levels = Eigen::VectorXd::LinSpaced(9, 1.0, 9.0);
  SubspaceFamily power_family{
      [levels](double phi) { return power_basis(phi, levels); },
      gamma_phi_prior(2.0, 1.0, 15)};
  SubspaceFamily geometric_family{
      [](double phi) { return geometric_basis(phi, 9); },
      beta_phi_prior(2.0, 2.0, 15)};
  // nu is selected with phi pinned at its prior mode: 1 for the power family,
  // 1/2 for the geometric family.
  const Projection p_power_mode =
      projection_from_basis(power_family.generator(1.0));
  const Projection p_geom_mode =
      projection_from_basis(geometric_family.generator(0.5));

  struct RepResult {
    MetricAccumulator zellner, power, geometric;
  };
  std::vector<RepResult> reps(static_cast<std::size_t>(replications));

  parallel_for(replications, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t r = b; r < e; ++r) {
      const std::uint64_t rep_seed = derive_seed(seed, stream::kStudyRep, r);
      const Eigen::VectorXd y = zellner_generate(spec, rep_seed);
      const DrawMatrix post =
          zellner_posterior_draws(spec, y, draws, splitmix64(rep_seed + 1));
      const DrawMatrix prior =
          zellner_prior_draws(spec, draws, splitmix64(rep_seed + 2));

      auto& rep = reps[static_cast<std::size_t>(r)];
      const PosteriorSummary s_base = summarize(uniform_weights(post));
      rep.zellner.add(s_base.mean, s_base.ci_lo, s_base.ci_hi,
                      spec.true_coefficients, 0, spec.levels);

      const auto run_family = [&](const SubspaceFamily& family,
                                  const Projection& p_mode,
                                  MetricAccumulator& acc,
                                  std::uint64_t gibbs_seed) {
        const NuSelection sel = select_nu(WeightedDraws::make(post, p_mode, 1.0),
                                          WeightedDraws::make(prior, p_mode, 1.0));
        const GibbsTrace trace = gibbs_discrete(post, prior, family, sel.nu_star,
                                                draws, std::nullopt, gibbs_seed);
        const Eigen::Index burn = trace.default_burn_in();
        DrawMatrix kept{trace.theta_draws.bottomRows(trace.theta_draws.rows() - burn),
                        Provenance::TiltedPosterior, gibbs_seed};
        const PosteriorSummary s = summarize(uniform_weights(std::move(kept)));
        acc.add(s.mean, s.ci_lo, s.ci_hi, spec.true_coefficients, 0, spec.levels);
      };
      run_family(power_family, p_power_mode, rep.power, splitmix64(rep_seed + 3));
      run_family(geometric_family, p_geom_mode, rep.geometric,
                 splitmix64(rep_seed + 4));
    }
  });

  MetricAccumulator zellner, power, geometric;
  for (const auto& rep : reps) {
    zellner += rep.zellner;
    power += rep.power;
    geometric += rep.geometric;
  }

  StudyResult result;
  result.replications = replications;
  result.level = 0.95;
  result.methods.emplace_back("zellner", zellner.finish());
  result.methods.emplace_back("subset-power", power.finish());
  result.methods.emplace_back("subset-geometric", geometric.finish());
  return result;
}

}  // namespace subset
