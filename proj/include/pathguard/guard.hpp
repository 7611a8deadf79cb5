#pragma once

/// Minimum guard placement inside each balanced part's corridor via
/// tooth-edge shadows, and whole-polygon solution assembly.

#include <cstdint>
#include <vector>

#include "pathguard/balanced.hpp"
#include "pathguard/decompose.hpp"

namespace pathguard {

/// One guard position rectangle: a tooth shadow intersected with the
/// corridor, possibly merged with one overlapping position from the other
/// chain.  The guard point is the rectangle center, kept exact in doubled
/// coordinates.
struct GuardPosition {
    AxisRect rect;
    std::uint32_t sources[2] = {0, 0};  // polygon edge ids of source teeth
    std::uint8_t source_count = 1;
    Chain chains[2] = {Chain::Lower, Chain::Lower};

    [[nodiscard]] Point guard_point_d() const noexcept { return rect.center2(); }
};

struct PartSolution {
    BalancedPart part;
    std::vector<GuardPosition> positions;
};

struct GuardSolution {
    std::vector<PartSolution> parts;
    std::vector<Point> guards_d;  // doubled coordinates, part order
    std::vector<CutReport> cuts;
    std::size_t guard_number = 0;
};

/// Positions for one balanced part: one rectangle per tooth edge of the
/// part (tooth x-range times the corridor band), upper and lower chains
/// merged in x order, each overlapping upper/lower pair replaced by its
/// intersection.  Throws Error(Internal) if three shadows ever share a
/// point, which the merge's correctness relies on being impossible.
[[nodiscard]] std::vector<GuardPosition> tooth_positions(
    const VerticalDecomposition& vd, const BalancedPart& part);

/// Full pipeline on a prebuilt decomposition (rule is test instrumentation).
[[nodiscard]] GuardSolution guard_decomposition(const VerticalDecomposition& vd,
                                                CutRule rule = CutRule::Lemma2);

/// vertical_decompose + split_balanced + per-part tooth_positions.
/// Propagates Error(NotPathPolygon).
[[nodiscard]] GuardSolution guard_path_polygon(const OrthoPolygon& P);

/// True iff the (doubled) point lies in the orthogonal shadow of horizontal
/// edge e: it shares an x with the edge and the vertical segment to the
/// edge stays inside the polygon.
[[nodiscard]] bool point_in_shadow_d(const OrthoPolygon& P, const PixelGrid& grid,
                                     std::size_t edge, const Point& p_d);

/// True iff at least one guard of the solution lies in the orthogonal
/// shadow of tooth edge `edge` (test helper for the shadow lemma).
[[nodiscard]] bool shadow_necessity_witness(const OrthoPolygon& P,
                                            const PixelGrid& grid,
                                            std::size_t edge,
                                            const std::vector<Point>& guards_d);

/// Pixels having at least one point in the orthogonal shadow of horizontal
/// edge `edge`.
[[nodiscard]] std::vector<std::uint32_t> shadow_pixels(const OrthoPolygon& P,
                                                       const PixelGrid& grid,
                                                       std::size_t edge);

}  // namespace pathguard
