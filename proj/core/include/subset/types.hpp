#ifndef SUBSET_TYPES_HPP
#define SUBSET_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace subset {

// Base class for all library errors.  Subclasses exist so callers can
// distinguish usage mistakes (DimensionError, DomainError) from numeric
// degeneracies (DegenerateWeightsError, NormalizerUnderflowError, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

class NormalizerUnderflowError : public Error {
 public:
  using Error::Error;
};

class InsufficientDrawsError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Where a set of draws came from.  Several operations only make sense for a
// particular provenance (importance weights attach to base-posterior draws,
// normalizer estimates average over prior draws) and check this tag.
enum class Provenance { Prior, BasePosterior, TiltedPosterior };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// K draws of a p-dimensional parameter, one draw per row.
struct DrawMatrix {
  Eigen::MatrixXd draws;  // K x p
  Provenance provenance = Provenance::Prior;
  std::optional<std::uint64_t> seed;

  Eigen::Index count() const { return draws.rows(); }
  Eigen::Index dim() const { return draws.cols(); }

  // Throws DomainError if empty or any entry is non-finite.
  void validate() const;
};

}  // namespace subset

#endif  // SUBSET_TYPES_HPP
