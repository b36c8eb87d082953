#ifndef SUBSET_RNG_HPP
#define SUBSET_RNG_HPP

#include <cstdint>
#include <random>

namespace subset {

// All randomness in the library flows from one user-supplied 64-bit seed.
// Independent substreams are derived by folding a (domain, index) pair into
// the seed with splitmix64, so that e.g. prior sampling, resampling, and each
// study replication get decorrelated generators that do not depend on how
// many draws any other stream consumed.

std::uint64_t splitmix64(std::uint64_t x);

// Stream domain tags.  Values are arbitrary but fixed: changing them changes
// every seeded output.
namespace stream {
inline constexpr std::uint64_t kData = 1;
inline constexpr std::uint64_t kPrior = 2;
inline constexpr std::uint64_t kPosterior = 3;
inline constexpr std::uint64_t kResample = 4;
inline constexpr std::uint64_t kGibbs = 5;
inline constexpr std::uint64_t kGaussian = 6;
inline constexpr std::uint64_t kStudyRep = 7;
}  // namespace stream

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t domain,
                          std::uint64_t index = 0);

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t domain,
                         std::uint64_t index = 0);

// Thin draw helpers.  Distribution objects are constructed per call so no
// hidden state survives between calls (std::normal_distribution caches a
// second variate otherwise).
double draw_normal(std::mt19937_64& rng, double mean = 0.0, double sd = 1.0);
double draw_uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0);
double draw_gamma(std::mt19937_64& rng, double shape, double rate);
double draw_inverse_gamma(std::mt19937_64& rng, double shape, double scale);
double draw_beta(std::mt19937_64& rng, double a, double b);

}  // namespace subset

#endif  // SUBSET_RNG_HPP
