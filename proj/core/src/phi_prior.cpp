#include "subset/phi_prior.hpp"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/lognormal.hpp>

#include <charconv>
#include <vector>

#include "subset/io.hpp"

namespace subset {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t at = 0;
  while (true) {
    const std::size_t next = s.find(sep, at);
    parts.push_back(s.substr(at, next - at));
    if (next == std::string::npos) break;
    at = next + 1;
  }
  return parts;
}

double parse_number(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("bad number in phi-prior spec: '" + s + "'");
  return v;
}

Eigen::Index parse_grid_size(const std::string& part) {
  if (part.rfind("Q=", 0) != 0)
    throw DomainError("expected Q=<n> in phi-prior spec, got '" + part + "'");
  const double q = parse_number(part.substr(2));
  if (q < 1 || q != std::floor(q))
    throw DomainError("phi grid size must be a positive integer");
  return static_cast<Eigen::Index>(q);
}

}  // namespace

ContinuousSpec gamma_phi_prior(double shape, double rate, Eigen::Index q) {
  if (!(shape > 0.0 && rate > 0.0))
    throw DomainError("gamma prior needs positive shape and rate");
  boost::math::gamma_distribution<double> dist(shape, 1.0 / rate);
  return ContinuousSpec{
      [dist](double x) { return boost::math::pdf(dist, x); },
      [dist](double p) { return boost::math::quantile(dist, p); }, q};
}

ContinuousSpec beta_phi_prior(double a, double b, Eigen::Index q) {
  if (!(a > 0.0 && b > 0.0))
    throw DomainError("beta prior needs positive shape parameters");
  boost::math::beta_distribution<double> dist(a, b);
  return ContinuousSpec{
      [dist](double x) { return boost::math::pdf(dist, x); },
      [dist](double p) { return boost::math::quantile(dist, p); }, q};
}

ContinuousSpec lognormal_phi_prior(double mulog, double sdlog, Eigen::Index q) {
  if (!(sdlog > 0.0)) throw DomainError("lognormal prior needs sdlog > 0");
  boost::math::lognormal_distribution<double> dist(mulog, sdlog);
  return ContinuousSpec{
      [dist](double x) { return boost::math::pdf(dist, x); },
      [dist](double p) { return boost::math::quantile(dist, p); }, q};
}

ContinuousSpec uniform_phi_prior(double lo, double hi, Eigen::Index q) {
  if (!(hi > lo)) throw DomainError("uniform prior needs lo < hi");
  const double dens = 1.0 / (hi - lo);
  return ContinuousSpec{[lo, hi, dens](double x) {
                          return (x >= lo && x <= hi) ? dens : 0.0;
                        },
                        [lo, hi](double p) { return lo + p * (hi - lo); }, q};
}

std::variant<DiscreteGrid, ContinuousSpec> parse_phi_prior(
    const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty() || parts[0].empty())
    throw DomainError("empty phi-prior spec");
  const std::string& name = parts[0];

  if (name == "table") {
    if (parts.size() != 2)
      throw DomainError("table phi prior: expected table:<csv-path>");
    const NamedMatrix m = read_csv_matrix(parts[1]);
    if (m.values.cols() != 2)
      throw DomainError("phi table CSV needs exactly two columns (value, mass)");
    DiscreteGrid grid;
    double total = 0.0;
    for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
      grid.values.push_back(m.values(i, 0));
      grid.masses.push_back(m.values(i, 1));
      total += m.values(i, 1);
    }
    if (!(total > 0.0)) throw DomainError("phi table masses must sum to > 0");
    for (double& mass : grid.masses) mass /= total;
    grid.validate();
    return grid;
  }

  if (parts.size() < 2 || parts.size() > 3)
    throw DomainError("phi prior spec must be name:params[:Q=<n>]");
  const auto params = split(parts[1], ',');
  if (params.size() != 2)
    throw DomainError("phi prior '" + name + "' needs exactly two parameters");
  const double p1 = parse_number(params[0]);
  const double p2 = parse_number(params[1]);
  const Eigen::Index q = parts.size() == 3 ? parse_grid_size(parts[2]) : 15;

  if (name == "gamma") return gamma_phi_prior(p1, p2, q);
  if (name == "beta") return beta_phi_prior(p1, p2, q);
  if (name == "lognormal") return lognormal_phi_prior(p1, p2, q);
  if (name == "uniform") return uniform_phi_prior(p1, p2, q);
  throw DomainError("unknown phi prior family: " + name);
}

}  // namespace subset
