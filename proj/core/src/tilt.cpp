#include "subset/tilt.hpp"

#include <cmath>
#include <limits>

#include "subset/parallel.hpp"

namespace subset {

double log_sum_exp(const Eigen::VectorXd& v) {
  if (v.size() == 0) return -std::numeric_limits<double>::infinity();
  const double m = v.maxCoeff();
  if (!std::isfinite(m)) return m;  // all -inf (or a NaN propagates)
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::exp(v[i] - m);
  return m + std::log(s);
}

Eigen::VectorXd compute_log_w1(const DrawMatrix& draws, const Projection& P) {
  draws.validate();
  if (draws.dim() != P.dim)
    throw DimensionError("draws have dimension " + std::to_string(draws.dim()) +
                         ", projection expects " + std::to_string(P.dim));
  const Eigen::Index k = draws.count();
  Eigen::VectorXd out(k);
  const Eigen::MatrixXd& d = draws.draws;
  const Eigen::MatrixXd& pm = P.matrix;
  parallel_for(k, [&](std::int64_t b, std::int64_t e) {
    const Eigen::Index rows = static_cast<Eigen::Index>(e - b);
    // residual = theta - P theta per row; weights from its squared norm
    out.segment(b, rows) =
        -0.5 * (d.middleRows(b, rows) - d.middleRows(b, rows) * pm)
                   .rowwise()
                   .squaredNorm();
  });
  return out;
}

WeightedDraws WeightedDraws::make(DrawMatrix draws, const Projection& P,
                                  double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw DomainError("tilt strength nu must be finite and >= 0");
  Eigen::VectorXd lw1 = compute_log_w1(draws, P);
  Eigen::VectorXd lw = nu * lw1;
  return WeightedDraws{std::move(draws), std::move(lw1), nu, std::move(lw)};
}

WeightedDraws reweight(const WeightedDraws& wd, double nu_new) {
  if (!(nu_new >= 0.0) || !std::isfinite(nu_new))
    throw DomainError("tilt strength nu must be finite and >= 0");
  return WeightedDraws{wd.base, wd.log_w1, nu_new, nu_new * wd.log_w1};
}

Eigen::VectorXd normalized_weights(const WeightedDraws& wd) {
  const Eigen::Index k = wd.log_w.size();
  if (k == 0) throw DegenerateWeightsError("no weights to normalize");
  const double m = wd.log_w.maxCoeff();
  if (!std::isfinite(m))
    throw DegenerateWeightsError("all log-weights are -inf");
  Eigen::VectorXd w = (wd.log_w.array() - m).exp();
  return w / w.sum();
}

double ess(const WeightedDraws& wd) {
  const Eigen::VectorXd w = normalized_weights(wd);
  return 1.0 / w.squaredNorm();
}

}  // namespace subset
