#ifndef FPLAB_RANDOM_HPP
#define FPLAB_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fplab/decreasing_set.hpp"
#include "fplab/grid.hpp"
#include "fplab/polynomial.hpp"

namespace fplab {

/// Random instances for property tests, self-tests and benchmarks. All
/// generators are deterministic functions of the engine state.
using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

FieldElement random_element(const PrimeField& field, Rng& rng);

/// Up to `max_terms` random terms of total degree <= max_degree; may be zero
/// unless `nonzero` is set.
Polynomial random_polynomial(const PrimeField& field, std::size_t num_vars, std::uint32_t max_degree,
                             std::size_t max_terms, Rng& rng, bool nonzero = true);

/// Grows {0} by random minimal-complement elements until it has `size` elements.
DecreasingSet random_decreasing_set(std::size_t num_vars, std::size_t size, Rng& rng);

/// Each S_j is a random subset of F_p with size in [1, max_size].
Grid random_grid(const PrimeField& field, std::size_t num_vars, std::size_t max_size, Rng& rng);

/// `count` distinct points of the grid (count <= #S).
std::vector<Point> random_grid_points(const Grid& grid, std::size_t count, Rng& rng);

WeightVector random_weights(std::size_t num_vars, std::uint32_t max_weight, Rng& rng);

}  // namespace fplab

#endif  // FPLAB_RANDOM_HPP
