#pragma once

#include <cstdint>
#include <random>

#include "qrf/hilbert.hpp"

namespace qrf {

/// Deterministic per-trial random stream: trial i under master seed s draws
/// from a generator keyed on (s, i), so trials may run in any order or
/// concurrently with identical results. Uniform and Gaussian variates use
/// fixed mappings rather than std distributions, whose algorithms are
/// implementation-defined.
class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::uint64_t stream);

  double uniform();        // [0, 1)
  double gaussian();       // standard normal, Box-Muller
  cxd complex_gaussian();  // independent standard normal parts
  int uniform_int(int n);  // 0..n-1

private:
  std::mt19937_64 eng_;
};

/// Haar-uniform unit vector: complex Gaussian amplitudes, normalized.
Vec random_unit_vector(TrialRng& rng, long long dim);

PureState random_state(TrialRng& rng, const FactorSpec& spec);

/// Independent unit vector per factor, tensored: a fully product state.
PureState random_product_state(TrialRng& rng, const FactorSpec& spec);

}  // namespace qrf
