#include "subset/rng.hpp"

namespace subset {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t domain,
                          std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ splitmix64(domain));
  s = splitmix64(s ^ splitmix64(index));
  return s;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t domain,
                         std::uint64_t index) {
  return std::mt19937_64(derive_seed(seed, domain, index));
}

double draw_normal(std::mt19937_64& rng, double mean, double sd) {
  std::normal_distribution<double> d(mean, sd);
  return d(rng);
}

double draw_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

double draw_gamma(std::mt19937_64& rng, double shape, double rate) {
  std::gamma_distribution<double> d(shape, 1.0 / rate);
  return d(rng);
}

double draw_inverse_gamma(std::mt19937_64& rng, double shape, double scale) {
  // X ~ Gamma(shape, rate = scale)  =>  1/X ~ InvGamma(shape, scale)
  return 1.0 / draw_gamma(rng, shape, scale);
}

double draw_beta(std::mt19937_64& rng, double a, double b) {
  const double x = draw_gamma(rng, a, 1.0);
  const double y = draw_gamma(rng, b, 1.0);
  return x / (x + y);
}

}  // namespace subset
