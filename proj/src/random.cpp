#include "qrf/random.hpp"

#include <cmath>
#include <numbers>

namespace qrf {

namespace {

// splitmix64, the usual way to decorrelate nearby seeds
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
    : eng_(mix(mix(seed) ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

double TrialRng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double TrialRng::gaussian() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cxd TrialRng::complex_gaussian() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

int TrialRng::uniform_int(int n) {
  return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
}

Vec random_unit_vector(TrialRng& rng, long long dim) {
  Vec v(dim);
  for (long long i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
  v /= v.norm();
  return v;
}

PureState random_state(TrialRng& rng, const FactorSpec& spec) {
  return PureState(spec, random_unit_vector(rng, spec.total_dim()));
}

PureState random_product_state(TrialRng& rng, const FactorSpec& spec) {
  Vec amps = random_unit_vector(rng, spec.at(0).dim);
  for (int p = 1; p < spec.size(); ++p)
    amps = kron_vec(amps, random_unit_vector(rng, spec.at(p).dim));
  return PureState(spec, std::move(amps));
}

}  // namespace qrf
