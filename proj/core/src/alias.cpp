#include "subset/alias.hpp"

#include <stdexcept>

#include "subset/types.hpp"

namespace subset {

AliasTable::AliasTable(const Eigen::VectorXd& weights) {
  const std::size_t n = static_cast<std::size_t>(weights.size());
  if (n == 0) throw DomainError("alias table needs at least one weight");
  double total = 0.0;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0)) throw DomainError("alias table weights must be >= 0");
    total += w;
  }
  if (!(total > 0.0))
    throw DegenerateWeightsError("alias table weights sum to zero");

  prob_.assign(n, 0.0);
  alias_.assign(n, 0);

  // Vose's stable two-worklist construction.
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[static_cast<Eigen::Index>(i)] * static_cast<double>(n) / total;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    const std::uint32_t l = large.back();
    small.pop_back();
    large.pop_back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  for (const std::uint32_t i : large) prob_[i] = 1.0;
  for (const std::uint32_t i : small) prob_[i] = 1.0;  // numerical leftovers
}

std::size_t AliasTable::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, prob_.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t i = pick(rng);
  return unit(rng) < prob_[i] ? i : alias_[i];
}

}  // namespace subset
