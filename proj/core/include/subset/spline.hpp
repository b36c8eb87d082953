#ifndef SUBSET_SPLINE_HPP
#define SUBSET_SPLINE_HPP

#include <Eigen/Dense>

namespace subset {

// Interpolating natural cubic spline through (x_i, y_i), x strictly
// increasing, n >= 2.  Second derivatives vanish at the end knots and the
// curve extends linearly beyond them.  n = 2 degenerates to a straight line.
class NaturalCubicSpline {
 public:
  NaturalCubicSpline() = default;
  NaturalCubicSpline(Eigen::VectorXd x, Eigen::VectorXd y);

  double operator()(double x) const;

  const Eigen::VectorXd& knots() const { return x_; }
  const Eigen::VectorXd& values() const { return y_; }

 private:
  Eigen::VectorXd x_;
  Eigen::VectorXd y_;
  Eigen::VectorXd m_;  // second derivatives at knots, m[0] = m[n-1] = 0
};

// Type-7 (linear interpolation) quantiles of a sample, matching the common
// statistical-software default.  probs in [0,1].
Eigen::VectorXd sample_quantiles(const Eigen::VectorXd& sample,
                                 const Eigen::VectorXd& probs);

}  // namespace subset

#endif  // SUBSET_SPLINE_HPP
