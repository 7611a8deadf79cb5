#pragma once

/// Independent exact minimum r-guard computation on small instances via
/// branch-and-bound set cover over pixel-center candidates.  Ground truth
/// for optimality testing; deliberately independent of the guard-placement
/// pipeline.

#include <cstdint>
#include <vector>

#include "pathguard/decompose.hpp"

namespace pathguard {

inline constexpr std::size_t kDefaultPixelCap = 400;

struct OracleResult {
    std::size_t count = 0;
    std::vector<Point> guards_d;  // witness, doubled coordinates
};

/// Exact minimum cover of all pixels by pixel-center candidates.
/// Deterministic.  Throws Error(TooLarge) when pixel count exceeds cap.
[[nodiscard]] OracleResult min_rguards_exact(const OrthoPolygon& P,
                                             const PixelGrid& grid,
                                             std::size_t cap = kDefaultPixelCap);

/// Re-solves with every pixel subdivided factor x factor and candidates at
/// subcell centers; guards the pixel-center candidate assumption.  Throws
/// Error(TooLarge) when pixel count * factor^2 exceeds cap.
[[nodiscard]] std::size_t refine_and_recheck(const OrthoPolygon& P,
                                             const PixelGrid& grid, int factor,
                                             std::size_t cap = kDefaultPixelCap);

/// Effective pixel cap: PATHGUARD_PIXEL_CAP from the environment when set,
/// else the given default.
[[nodiscard]] std::size_t pixel_cap_from_env(std::size_t fallback = kDefaultPixelCap);

}  // namespace pathguard
