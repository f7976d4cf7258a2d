#ifndef GENTLE_GENERATOR_HPP
#define GENTLE_GENERATOR_HPP

#include <cstddef>
#include <cstdint>

#include "gentle/bound_quiver.hpp"

namespace gentle {

// Deterministic pseudorandom gentle bound quiver with exactly
// `target_arrow_count` arrows, reproducible across platforms: all randomness
// comes from raw mt19937_64 outputs reduced by modulo (the std distributions
// are not portable).  Vertices are "v1".."v<n>", arrows "a1", "a2", ...
// Picks a feasible vertex count, builds a random connected skeleton tree,
// places the remaining arrows within the degree budget, then classifies the
// composable pairs at each vertex; retries with fresh randomness when the
// draw gets stuck or the relation set is not admissible.  Throws
// GeneratorError once the retry budget is exhausted.
BoundQuiver random_gentle(std::uint64_t seed, std::size_t target_arrow_count);

}  // namespace gentle

#endif  // GENTLE_GENERATOR_HPP
