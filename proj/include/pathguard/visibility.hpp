#pragma once

/// Exact r-visibility queries on the pixel grid: point-to-point visibility,
/// guard visibility regions, coverage verification, and the r-star test.

#include <cstdint>
#include <optional>
#include <vector>

#include "pathguard/decompose.hpp"

namespace pathguard {

/// Pixel set fully r-visible from a guard point (doubled coordinates).
class VisibilityRegion {
public:
    VisibilityRegion(Point guard_d, std::size_t pixel_count)
        : guard_d_(guard_d), bits_((pixel_count + 63) / 64, 0), count_(0) {}

    [[nodiscard]] const Point& guard_d() const noexcept { return guard_d_; }
    [[nodiscard]] bool covers(std::size_t pixel) const noexcept {
        return (bits_[pixel >> 6] >> (pixel & 63)) & 1;
    }
    void set(std::size_t pixel) noexcept {
        auto& w = bits_[pixel >> 6];
        std::uint64_t bit = std::uint64_t(1) << (pixel & 63);
        if (!(w & bit)) ++count_;
        w |= bit;
    }
    [[nodiscard]] std::size_t covered_count() const noexcept { return count_; }
    [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept {
        return bits_;
    }
    [[nodiscard]] std::vector<std::uint32_t> covered_pixels() const;

private:
    Point guard_d_;
    std::vector<std::uint64_t> bits_;
    std::size_t count_;
};

/// True iff the rectangle spanned by p and q lies inside the polygon.
/// Throws Error(PointOutside) when either point is not in the polygon.
[[nodiscard]] bool r_visible(const PixelGrid& grid, const Point& p, const Point& q);
/// Same, with both points in doubled coordinates.
[[nodiscard]] bool r_visible_d(const PixelGrid& grid, const Point& p_d,
                               const Point& q_d);

/// Pixels wholly r-visible from g: the bounding rectangle of {g} and the
/// pixel must be inside the polygon.  Throws Error(PointOutside).
[[nodiscard]] VisibilityRegion visibility_region(const PixelGrid& grid,
                                                 const Point& g_d);

struct CoverageResult {
    bool ok = false;
    std::vector<std::uint32_t> uncovered;  // pixel ids
};

/// Full coverage iff every pixel is wholly visible from some guard.
[[nodiscard]] CoverageResult coverage_check(const PixelGrid& grid,
                                            const std::vector<Point>& guards_d);

/// Some single point sees every pixel.  Candidates run over the closed
/// half-grid (cell centers, grid lines and their crossings), which meets
/// every face of the kernel, so degenerate kernels are decided exactly.
[[nodiscard]] bool is_rstar(const PixelGrid& grid);
/// A kernel point in doubled coordinates, when one exists.
[[nodiscard]] std::optional<Point> kernel_point(const PixelGrid& grid);

/// No dent edge in any orientation.
[[nodiscard]] bool is_orthoconvex(const OrthoPolygon& P);

/// Weak visibility of the leftmost and rightmost vertical edges via a
/// connecting horizontal segment inside P, and of the topmost and
/// bottommost horizontal edges via a vertical one.  Intended for
/// orthoconvex polygons, where those extreme edges are unique; together
/// they form the sufficient r-star criterion used as a cross-check.
[[nodiscard]] bool extreme_edges_weakly_visible(const OrthoPolygon& P,
                                                const PixelGrid& grid);

}  // namespace pathguard
