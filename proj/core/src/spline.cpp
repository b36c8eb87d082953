#include "subset/spline.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "subset/types.hpp"

namespace subset {

NaturalCubicSpline::NaturalCubicSpline(Eigen::VectorXd x, Eigen::VectorXd y)
    : x_(std::move(x)), y_(std::move(y)) {
  const Eigen::Index n = x_.size();
  if (n < 2 || y_.size() != n)
    throw DomainError("spline needs >= 2 matching (x, y) pairs");
  for (Eigen::Index i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw DomainError("spline abscissae must be strictly increasing");

  // Tridiagonal system for interior second derivatives, natural boundary
  // conditions (m[0] = m[n-1] = 0).  Thomas algorithm.
  m_ = Eigen::VectorXd::Zero(n);
  if (n == 2) return;

  const Eigen::Index k = n - 2;
  std::vector<double> diag(k), rhs(k), upper(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double h0 = x_[i + 1] - x_[i];
    const double h1 = x_[i + 2] - x_[i + 1];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 2] - y_[i + 1]) / h1 - (y_[i + 1] - y_[i]) / h0);
  }
  for (Eigen::Index i = 1; i < k; ++i) {
    const double lower = x_[i + 1] - x_[i];  // subdiagonal entry
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[k] = rhs[k - 1] / diag[k - 1];
  for (Eigen::Index i = k - 1; i >= 1; --i)
    m_[i] = (rhs[i - 1] - upper[i - 1] * m_[i + 1]) / diag[i - 1];
}

double NaturalCubicSpline::operator()(double x) const {
  const Eigen::Index n = x_.size();
  // Linear continuation beyond the end knots (second derivative is zero
  // there, so slope continuity determines the extension).
  if (x <= x_[0]) {
    const double h = x_[1] - x_[0];
    const double slope = (y_[1] - y_[0]) / h - h * m_[1] / 6.0;
    return y_[0] + slope * (x - x_[0]);
  }
  if (x >= x_[n - 1]) {
    const double h = x_[n - 1] - x_[n - 2];
    const double slope = (y_[n - 1] - y_[n - 2]) / h + h * m_[n - 2] / 6.0;
    return y_[n - 1] + slope * (x - x_[n - 1]);
  }
  const double* begin = x_.data();
  const Eigen::Index i =
      std::upper_bound(begin, begin + n, x) - begin - 1;  // x in [x_i, x_{i+1})
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

Eigen::VectorXd sample_quantiles(const Eigen::VectorXd& sample,
                                 const Eigen::VectorXd& probs) {
  if (sample.size() < 1) throw DomainError("quantiles of an empty sample");
  std::vector<double> sorted(sample.data(), sample.data() + sample.size());
  std::sort(sorted.begin(), sorted.end());
  const Eigen::Index n = static_cast<Eigen::Index>(sorted.size());
  Eigen::VectorXd out(probs.size());
  for (Eigen::Index j = 0; j < probs.size(); ++j) {
    const double p = probs[j];
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile prob outside [0,1]");
    const double h = static_cast<double>(n - 1) * p;
    const Eigen::Index lo = static_cast<Eigen::Index>(std::floor(h));
    const Eigen::Index hi = std::min(lo + 1, n - 1);
    out[j] = sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  }
  return out;
}

}  // namespace subset
