#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

enum class SphereScheme { Grid, Fibonacci, Random };

// Uniform double in [0,1) from the top 53 bits; identical on every
// platform for a fixed seed, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng);

// n deterministic samples of the sphere S of imaginary units.
// Grid and Fibonacci ignore the seed. Grid emits i first.
std::vector<ImaginaryUnitd> sample_sphere(std::size_t n, SphereScheme scheme,
                                          std::uint64_t seed = 0);

ImaginaryUnitd random_unit(std::mt19937_64& rng);

// Components uniform in [-amplitude, amplitude].
Quaterniond random_quaternion(std::mt19937_64& rng, double amplitude = 1.0);

// The unit cos(a)*I + sin(a)*Iperp with sin(a) = d, so its Euclidean
// distance to the plane C_I is exactly d. Requires 0 <= d <= 1.
ImaginaryUnitd unit_at_distance(const ImaginaryUnitd& I, double d);

}  // namespace sliceq
