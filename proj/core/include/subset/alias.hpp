#ifndef SUBSET_ALIAS_HPP
#define SUBSET_ALIAS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <vector>

namespace subset {

// Walker/Vose alias table: O(n) construction, O(1) sampling from a discrete
// distribution.  Probabilities must be nonnegative with a positive sum; they
// are normalized internally.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(const Eigen::VectorXd& weights);

  std::size_t size() const { return prob_.size(); }

  // One category index; consumes exactly two variates from the engine.
  std::size_t sample(std::mt19937_64& rng) const;

 private:
  std::vector<double> prob_;         // scaled acceptance probabilities
  std::vector<std::uint32_t> alias_;
};

}  // namespace subset

#endif  // SUBSET_ALIAS_HPP
