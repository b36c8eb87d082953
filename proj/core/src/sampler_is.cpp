#include "subset/sampler_is.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "subset/alias.hpp"
#include "subset/parallel.hpp"
#include "subset/rng.hpp"

namespace subset {

Probe monotone_probe(bool decreasing, Eigen::Index first, Eigen::Index last) {
  std::string name = decreasing ? "monotone:decreasing" : "monotone:increasing";
  return Probe{std::move(name),
               [decreasing, first, last](Eigen::Ref<const Eigen::RowVectorXd> draw) {
                 const Eigen::Index hi = last < 0 ? draw.size() - 1 : last;
                 for (Eigen::Index i = first; i < hi; ++i) {
                   const bool ok = decreasing ? draw[i] > draw[i + 1]
                                              : draw[i] < draw[i + 1];
                   if (!ok) return 0.0;
                 }
                 return 1.0;
               }};
}

double weighted_quantile(const Eigen::VectorXd& values,
                         const Eigen::VectorXd& weights_on_simplex, double p) {
  const Eigen::Index k = values.size();
  if (k == 0 || weights_on_simplex.size() != k)
    throw DimensionError("weighted quantile needs matching values and weights");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile prob outside [0,1]");
  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });
  double cum = 0.0;
  for (const Eigen::Index i : order) {
    cum += weights_on_simplex[i];
    if (cum >= p) return values[i];  // left-continuous ECDF inverse
  }
  return values[order.back()];
}

PosteriorSummary summarize(const WeightedDraws& wd, double level,
                           const std::vector<Probe>& probes) {
  if (wd.base.count() < 2)
    throw InsufficientDrawsError("summaries need at least two draws");
  if (!(level > 0.0 && level < 1.0))
    throw DomainError("credible level must lie in (0,1)");

  const Eigen::VectorXd w = normalized_weights(wd);
  const Eigen::MatrixXd& d = wd.base.draws;
  const Eigen::Index p = d.cols();

  PosteriorSummary s;
  s.level = level;
  s.nu = wd.nu;
  s.ess = ess(wd);
  s.mean = d.transpose() * w;
  s.sd.resize(p);
  s.ci_lo.resize(p);
  s.ci_hi.resize(p);
  const double lo_p = (1.0 - level) / 2.0;
  const double hi_p = (1.0 + level) / 2.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    const Eigen::VectorXd col = d.col(j);
    const Eigen::ArrayXd centered = col.array() - s.mean[j];
    s.sd[j] = std::sqrt((w.array() * centered.square()).sum());
    s.ci_lo[j] = weighted_quantile(col, w, lo_p);
    s.ci_hi[j] = weighted_quantile(col, w, hi_p);
  }

  s.probes.reserve(probes.size());
  for (const Probe& probe : probes) {
    Eigen::VectorXd vals(d.rows());
    parallel_for(d.rows(), [&](std::int64_t b, std::int64_t e) {
      for (std::int64_t i = b; i < e; ++i) vals[i] = probe.fn(d.row(i));
    });
    s.probes.emplace_back(probe.name, vals.dot(w));
  }
  return s;
}

DrawMatrix resample(const WeightedDraws& wd, Eigen::Index k_out,
                    std::uint64_t seed) {
  if (k_out < 1) throw DomainError("resample needs k_out >= 1");
  const Eigen::VectorXd w = normalized_weights(wd);
  const AliasTable table(w);
  auto rng = make_rng(seed, stream::kResample);
  Eigen::MatrixXd out(k_out, wd.base.dim());
  for (Eigen::Index i = 0; i < k_out; ++i)
    out.row(i) = wd.base.draws.row(static_cast<Eigen::Index>(table.sample(rng)));
  return DrawMatrix{std::move(out), Provenance::TiltedPosterior, seed};
}

Algorithm1Result run_algorithm1(const DrawMatrix& post_draws,
                                const DrawMatrix& prior_draws,
                                const Projection& P,
                                std::pair<double, double> nu_bounds,
                                double tolerance) {
  if (post_draws.provenance != Provenance::BasePosterior)
    throw DomainError("algorithm 1 expects base-posterior draws");
  if (prior_draws.provenance != Provenance::Prior)
    throw DomainError("algorithm 1 expects prior draws");

  // Weights at nu = 1 once; every candidate nu reuses them.
  WeightedDraws post_wd = WeightedDraws::make(post_draws, P, 1.0);
  const WeightedDraws prior_wd = WeightedDraws::make(prior_draws, P, 1.0);

  Algorithm1Result result;
  result.selection = select_nu(post_wd, prior_wd, nu_bounds, tolerance);
  result.weighted = reweight(post_wd, result.selection.nu_star);
  return result;
}

}  // namespace subset
