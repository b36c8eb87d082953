#include "subset/evidence.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

#include "subset/parallel.hpp"

namespace subset {

namespace {

// Mean and relative standard error of exp(lw) computed under max
// subtraction, so the answer only depends on weight ratios.
struct WeightStats {
  double log_mean;   // log( mean exp(lw) )
  double rel_se;     // sample-sd / (mean * sqrt(K))
};

WeightStats weight_stats(const Eigen::VectorXd& lw) {
  const Eigen::Index k = lw.size();
  const double m = lw.maxCoeff();
  if (!std::isfinite(m))
    throw DegenerateWeightsError("all log-weights are -inf");
  const Eigen::ArrayXd w = (lw.array() - m).exp();
  const double mean = w.mean();
  double var = 0.0;
  if (k > 1) {
    var = (w - mean).square().sum() / static_cast<double>(k - 1);
  }
  const double rel_se = std::sqrt(var) / (mean * std::sqrt(static_cast<double>(k)));
  return WeightStats{m + std::log(mean), rel_se};
}

}  // namespace

ZEstimate z_hat(const DrawMatrix& prior_draws, const Projection& P, double nu) {
  if (prior_draws.provenance != Provenance::Prior)
    throw DomainError("z_hat expects prior-provenance draws");
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");
  const Eigen::VectorXd lw1 = compute_log_w1(prior_draws, P);
  const WeightStats st = weight_stats(nu * lw1);
  ZEstimate z;
  z.nu = nu;
  z.log_value = std::min(st.log_mean, 0.0);
  z.value = std::exp(z.log_value);
  z.mc_se = z.value * st.rel_se;
  z.k0 = prior_draws.count();
  return z;
}

BayesFactor bayes_factor(const WeightedDraws& post_wd,
                         const WeightedDraws& prior_wd, double nu) {
  if (post_wd.base.provenance != Provenance::BasePosterior)
    throw DomainError("bayes_factor numerator needs base-posterior draws");
  if (prior_wd.base.provenance != Provenance::Prior)
    throw DomainError("bayes_factor denominator needs prior draws");
  if (post_wd.base.dim() != prior_wd.base.dim())
    throw DimensionError("posterior and prior draws disagree on dimension");
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");

  const Eigen::Index ky = post_wd.log_w1.size();
  const Eigen::Index k0 = prior_wd.log_w1.size();
  const WeightStats num = weight_stats(nu * post_wd.log_w1);
  const WeightStats den = weight_stats(nu * prior_wd.log_w1);
  (void)ky;
  (void)k0;

  BayesFactor bf;
  bf.log_value = num.log_mean - den.log_mean;
  bf.value = std::exp(bf.log_value);
  bf.mc_se = bf.value * std::sqrt(num.rel_se * num.rel_se + den.rel_se * den.rel_se);
  return bf;
}

std::string to_string(SelectionWarning w) {
  switch (w) {
    case SelectionWarning::BoundaryMaximum:
      return "boundary-maximum";
    case SelectionWarning::FlatProfile:
      return "flat-profile";
  }
  return "unknown";
}

namespace {

double log_bf_at(const WeightedDraws& post_wd, const WeightedDraws& prior_wd,
                 double nu) {
  const double ly = log_sum_exp((nu * post_wd.log_w1).eval()) -
                    std::log(static_cast<double>(post_wd.log_w1.size()));
  const double l0 = log_sum_exp((nu * prior_wd.log_w1).eval()) -
                    std::log(static_cast<double>(prior_wd.log_w1.size()));
  return ly - l0;
}

}  // namespace

NuSelection select_nu(const WeightedDraws& post_wd,
                      const WeightedDraws& prior_wd,
                      std::pair<double, double> nu_bounds, double tolerance) {
  const auto [lo, hi] = nu_bounds;
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw DomainError("nu bounds must satisfy 0 <= lo < hi < inf");

  // Coarse scan: log-spaced grid (plus lo itself when lo = 0).
  Eigen::VectorXd grid(kNuScanPoints);
  if (lo > 0.0) {
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < kNuScanPoints; ++i)
      grid[i] = std::exp(la + (lb - la) * i / double(kNuScanPoints - 1));
  } else {
    grid[0] = 0.0;
    const double la = std::log(hi * 1e-6), lb = std::log(hi);
    for (int i = 1; i < kNuScanPoints; ++i)
      grid[i] = std::exp(la + (lb - la) * (i - 1) / double(kNuScanPoints - 2));
  }
  grid[kNuScanPoints - 1] = hi;  // exact endpoint

  NuSelection sel;
  Eigen::VectorXd log_bf(kNuScanPoints);
  for (int i = 0; i < kNuScanPoints; ++i)
    log_bf[i] = log_bf_at(post_wd, prior_wd, grid[i]);
  sel.profile.reserve(kNuScanPoints);
  for (int i = 0; i < kNuScanPoints; ++i)
    sel.profile.emplace_back(grid[i], std::exp(log_bf[i]));

  int best = 0;
  for (int i = 1; i < kNuScanPoints; ++i)
    if (log_bf[i] > log_bf[best]) best = i;

  if (log_bf.maxCoeff() - log_bf.minCoeff() < 1e-12) {
    sel.warnings.push_back(SelectionWarning::FlatProfile);
    sel.nu_star = lo;
    sel.bf_at_star = bayes_factor(post_wd, prior_wd, sel.nu_star);
    return sel;
  }
  if (best == kNuScanPoints - 1) {
    sel.warnings.push_back(SelectionWarning::BoundaryMaximum);
    sel.nu_star = hi;
    sel.bf_at_star = bayes_factor(post_wd, prior_wd, sel.nu_star);
    return sel;
  }

  // Golden-section refinement on the bracket around the best scan point.
  double a = grid[std::max(0, best - 1)];
  double b = grid[best + 1];
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = log_bf_at(post_wd, prior_wd, x1);
  double f2 = log_bf_at(post_wd, prior_wd, x2);
  for (int iter = 0; iter < 200 && (b - a) > tolerance * (1.0 + b); ++iter) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = log_bf_at(post_wd, prior_wd, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = log_bf_at(post_wd, prior_wd, x2);
    }
  }
  sel.nu_star = 0.5 * (a + b);
  sel.bf_at_star = bayes_factor(post_wd, prior_wd, sel.nu_star);
  return sel;
}

double bf_numerator_gaussian(const GaussianApprox& g, const Projection& P,
                             double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");
  g.validate();
  if (P.dim != g.dim())
    throw DimensionError("projection dimension does not match the gaussian");
  if (nu == 0.0) return 1.0;

  const Eigen::Index p = g.dim();
  Eigen::LLT<Eigen::MatrixXd> llt_base(g.precision);
  if (llt_base.info() != Eigen::Success)
    throw NotPositiveDefiniteError("precision matrix is not positive definite");
  Eigen::MatrixXd tilted =
      g.precision + nu * (Eigen::MatrixXd::Identity(p, p) - P.matrix);
  tilted = 0.5 * (tilted + tilted.transpose()).eval();
  Eigen::LLT<Eigen::MatrixXd> llt_tilt(tilted);
  if (llt_tilt.info() != Eigen::Success)
    throw NotPositiveDefiniteError("tilted precision lost positive definiteness");

  auto half_logdet = [](const Eigen::LLT<Eigen::MatrixXd>& llt) {
    return Eigen::MatrixXd(llt.matrixL()).diagonal().array().log().sum();
  };
  const Eigen::VectorXd omega_m = g.precision * g.mode;
  const Eigen::VectorXd tilted_mode = llt_tilt.solve(omega_m);
  // m~' Omega~ m~ = m~' (Omega m), since Omega~ m~ = Omega m by construction.
  const double quad = g.mode.dot(omega_m) - tilted_mode.dot(omega_m);
  return std::exp(half_logdet(llt_base) - half_logdet(llt_tilt) - 0.5 * quad);
}

double ZSurrogate::log_predict(double phi) const {
  if (table_) {
    for (Eigen::Index i = 0; i < phi_grid_.size(); ++i) {
      if (std::abs(phi - phi_grid_[i]) <=
          1e-12 * std::max(1.0, std::abs(phi_grid_[i])))
        return log_zhat_[i];
    }
    throw DomainError("phi value not in the discrete surrogate table");
  }
  const double raw = spline_(phi);
  return std::clamp(raw, std::log(kZFloor), 0.0);
}

double ZSurrogate::predict(double phi) const { return std::exp(log_predict(phi)); }

ZSurrogate zhat_spline_fit(const SubspaceFamily& family,
                           const DrawMatrix& prior_draws, double nu,
                           Eigen::Index grid_size) {
  if (prior_draws.provenance != Provenance::Prior)
    throw DomainError("surrogate fitting expects prior-provenance draws");
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");

  ZSurrogate out;
  out.nu_ = nu;

  if (family.is_discrete()) {
    // Exact table: no interpolation over a finite support.
    const DiscreteGrid grid = family_grid(family);
    const Eigen::Index q = grid.size();
    out.table_ = true;
    out.phi_grid_.resize(q);
    out.zhat_.resize(q);
    out.log_zhat_.resize(q);
    for (Eigen::Index i = 0; i < q; ++i) {
      out.phi_grid_[i] = grid.values[static_cast<std::size_t>(i)];
      const ZEstimate z =
          z_hat(prior_draws, projection_from_basis(family.generator(out.phi_grid_[i])), nu);
      out.zhat_[i] = z.value;
      out.log_zhat_[i] = z.log_value;
    }
    return out;
  }

  if (grid_size < 8) throw DomainError("surrogate grid needs S >= 8");
  const auto& spec = std::get<ContinuousSpec>(family.phi_support);
  const Eigen::Index s_count = grid_size;
  out.phi_grid_.resize(s_count);
  out.zhat_.resize(s_count);
  out.log_zhat_.resize(s_count);
  for (Eigen::Index s = 0; s < s_count; ++s)
    out.phi_grid_[s] =
        spec.quantile(static_cast<double>(s + 1) / static_cast<double>(s_count + 1));

  parallel_for(s_count, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t s = b; s < e; ++s) {
      const ZEstimate z = z_hat(
          prior_draws, projection_from_basis(family.generator(out.phi_grid_[s])), nu);
      out.zhat_[s] = z.value;
      out.log_zhat_[s] = z.log_value;
    }
  });

  out.spline_ = NaturalCubicSpline(out.phi_grid_, out.log_zhat_);

  // Held-out diagnostic: refit without every 4th interior point, compare the
  // refit's predictions against the direct estimates there.
  std::vector<Eigen::Index> kept, held;
  for (Eigen::Index s = 0; s < s_count; ++s) {
    if (s % 4 == 3 && s != s_count - 1)
      held.push_back(s);
    else
      kept.push_back(s);
  }
  if (!held.empty()) {
    Eigen::VectorXd xk(static_cast<Eigen::Index>(kept.size()));
    Eigen::VectorXd yk(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) {
      xk[static_cast<Eigen::Index>(i)] = out.phi_grid_[kept[i]];
      yk[static_cast<Eigen::Index>(i)] = out.log_zhat_[kept[i]];
    }
    const NaturalCubicSpline refit(xk, yk);
    double worst = 0.0;
    for (const Eigen::Index s : held) {
      const double pred = std::exp(std::clamp(refit(out.phi_grid_[s]),
                                              std::log(kZFloor), 0.0));
      worst = std::max(worst, std::abs(pred - out.zhat_[s]) / out.zhat_[s]);
    }
    out.diagnostics_.max_heldout_rel_error = worst;
  }
  return out;
}

}  // namespace subset
