#pragma once

/// Seeded random generation of valid path polygons for property testing and
/// benchmarks.  Slabs are emitted left to right with strictly increasing
/// x-breaks; each seam changes exactly one of the top/bottom boundaries.

#include <cstdint>

#include "pathguard/geom.hpp"

namespace pathguard {

struct GenConfig {
    std::size_t slab_count = 1;
    Coord range = 1'000'000;     // coordinates stay within [0, range]
    std::uint64_t seed = 0;
    double wind_probability = 0.5;  // chance a step changes the top boundary
    bool allow_unbalanced = false;  // force at least one corridor break
};

/// Deterministic per (seed, config).  The result always passes
/// validate_polygon and is_path and has exactly slab_count slabs
/// (n = 2*slab_count + 2 vertices).  Throws Error(ConfigInvalid).
[[nodiscard]] OrthoPolygon generate(const GenConfig& cfg);

}  // namespace pathguard
