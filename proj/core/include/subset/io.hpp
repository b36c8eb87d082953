#ifndef SUBSET_IO_HPP
#define SUBSET_IO_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "subset/gaussian.hpp"
#include "subset/subspace.hpp"
#include "subset/tilt.hpp"
#include "subset/types.hpp"

namespace subset {

// CSV conventions (documented in the README):
//  * draw files: header row of column names, one row per draw;
//  * basis/projection files: first line "<kind>,<rows>,<cols>", then the
//    dense matrix row by row;
//  * all doubles are written round-trip exact (max_digits10), so identical
//    inputs give byte-identical outputs.

struct NamedMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> columns;
};

NamedMatrix read_csv_matrix(const std::filesystem::path& path);
void write_csv_matrix(const std::filesystem::path& path,
                      const Eigen::MatrixXd& values,
                      const std::vector<std::string>& columns);

DrawMatrix read_draws_csv(const std::filesystem::path& path,
                          Provenance provenance);
void write_draws_csv(const std::filesystem::path& path, const DrawMatrix& draws,
                     const std::vector<std::string>& columns = {});

// Weighted draws: p draw columns plus a trailing log_w1 column; nu,
// provenance, and seed go into a JSON sidecar next to the CSV
// ("<path>.meta.json").
void write_weighted_draws_csv(const std::filesystem::path& path,
                              const WeightedDraws& wd,
                              const std::vector<std::string>& columns = {});
WeightedDraws read_weighted_draws_csv(const std::filesystem::path& path);

Basis read_basis_csv(const std::filesystem::path& path);
void write_basis_csv(const std::filesystem::path& path, const Basis& basis);

Projection read_projection_csv(const std::filesystem::path& path);
void write_projection_csv(const std::filesystem::path& path, const Projection& p);

// GaussianApprox as JSON: {"m": [...], "omega": [[...], ...]}.
GaussianApprox read_gaussian_json(const std::filesystem::path& path);
void write_gaussian_json(const std::filesystem::path& path,
                         const GaussianApprox& g);

// Round-trip-exact double formatting shared by all writers.
std::string format_double(double x);

// FNV-1a 64 of a file's bytes, as fixed-width hex (manifest fingerprints).
std::string file_hash_hex(const std::filesystem::path& path);

}  // namespace subset

#endif  // SUBSET_IO_HPP
