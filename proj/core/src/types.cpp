#include "subset/types.hpp"

namespace subset {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Prior:
      return "prior";
    case Provenance::BasePosterior:
      return "base-posterior";
    case Provenance::TiltedPosterior:
      return "tilted-posterior";
  }
  return "unknown";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "prior") return Provenance::Prior;
  if (s == "base-posterior") return Provenance::BasePosterior;
  if (s == "tilted-posterior") return Provenance::TiltedPosterior;
  throw DomainError("unknown provenance tag: " + s);
}

void DrawMatrix::validate() const {
  if (draws.rows() < 1 || draws.cols() < 1)
    throw DomainError("draw matrix must have at least one row and column");
  if (!draws.allFinite())
    throw DomainError("draw matrix contains non-finite entries");
}

}  // namespace subset
