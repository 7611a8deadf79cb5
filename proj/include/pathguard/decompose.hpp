#pragma once

/// Vertical decomposition of an orthogonal polygon into path-ordered
/// rectangles (slabs), dual-graph path classification, and the full pixel
/// decomposition that backs all visibility queries.

#include <cstdint>
#include <optional>
#include <vector>

#include "pathguard/geom.hpp"

namespace pathguard {

/// Vertical segment (seam between consecutive slabs).
struct VSeg {
    Coord x;
    Coord y1, y2;  // y1 < y2
};

/// One rectangle R_i of the vertical decomposition.  top_edge/bottom_edge
/// are indices of the polygon edges containing the slab's upper segment u_i
/// and lower segment l_i.
struct Slab {
    AxisRect rect;
    std::uint32_t top_edge = 0;
    std::uint32_t bottom_edge = 0;

    [[nodiscard]] Coord top_y() const noexcept { return rect.hi.y; }
    [[nodiscard]] Coord bottom_y() const noexcept { return rect.lo.y; }
    [[nodiscard]] Coord height() const noexcept { return rect.height(); }
};

/// Slabs in path order R_1..R_m, starting from the degree-1 slab whose
/// rectangle has the lexicographically smallest (x, then y) lower corner.
class VerticalDecomposition {
public:
    VerticalDecomposition(std::vector<Slab> slabs) : slabs_(std::move(slabs)) {}

    [[nodiscard]] std::size_t m() const noexcept { return slabs_.size(); }
    [[nodiscard]] const Slab& slab(std::size_t i) const noexcept {
        return slabs_[i];
    }
    [[nodiscard]] const std::vector<Slab>& slabs() const noexcept {
        return slabs_;
    }
    /// Seam s_i = R_i ∩ R_{i+1}, for 0 <= i < m-1.
    [[nodiscard]] VSeg seam(std::size_t i) const;

private:
    std::vector<Slab> slabs_;
};

/// Decomposes P by extending vertical edges through their reflex vertices.
/// Throws Error(NotPathPolygon) when the dual graph is not a simple path.
[[nodiscard]] VerticalDecomposition vertical_decompose(const OrthoPolygon& P);

/// True iff the dual graph of the vertical decomposition is a simple path
/// (m == 1 counts as a path).
[[nodiscard]] bool is_path(const OrthoPolygon& P);

/// Full decomposition into pixels: extend BOTH vertical and horizontal
/// edges through reflex vertices until they hit the boundary.  Also stores
/// a fine cell grid with prefix sums, which makes "axis rectangle inside
/// polygon" an O(1) query; all visibility predicates build on it.
///
/// Query coordinates are doubled throughout (suffix _d) so that guard
/// points at half-integer positions stay exact.
class PixelGrid {
public:
    [[nodiscard]] std::size_t pixel_count() const noexcept {
        return pixels_.size();
    }
    [[nodiscard]] const std::vector<AxisRect>& pixels() const noexcept {
        return pixels_;
    }
    [[nodiscard]] const AxisRect& pixel(std::size_t i) const noexcept {
        return pixels_[i];
    }
    /// Pixel center in doubled coordinates.
    [[nodiscard]] Point pixel_center_d(std::size_t i) const noexcept {
        return pixels_[i].center2();
    }
    /// Pairs (i, j), i < j, of pixels sharing a boundary side of positive
    /// length.
    [[nodiscard]] const std::vector<std::pair<std::uint32_t, std::uint32_t>>&
    adjacency() const noexcept {
        return adjacency_;
    }

    /// True iff the rectangle (doubled coordinates, possibly degenerate)
    /// lies inside the polygon (interior plus boundary).
    [[nodiscard]] bool rect_inside_d(const AxisRect& rect_d) const;
    [[nodiscard]] bool point_inside_d(const Point& p_d) const {
        return rect_inside_d({p_d, p_d});
    }

    /// Pixel whose closed rectangle contains the (doubled) point; a point on
    /// a shared boundary resolves to the lowest such pixel index.
    [[nodiscard]] std::optional<std::size_t> locate_pixel_d(const Point& p_d) const;

    // Fine-grid introspection (used by the oracle and shadow machinery).
    [[nodiscard]] std::size_t cols() const noexcept { return xs_.size() - 1; }
    [[nodiscard]] std::size_t rows() const noexcept { return ys_.size() - 1; }
    [[nodiscard]] const std::vector<Coord>& xlines() const noexcept { return xs_; }
    [[nodiscard]] const std::vector<Coord>& ylines() const noexcept { return ys_; }
    [[nodiscard]] bool cell_inside(std::size_t i, std::size_t j) const noexcept {
        return inside_[j * cols() + i] != 0;
    }
    /// Pixel id of an inside cell.
    [[nodiscard]] std::uint32_t cell_pixel(std::size_t i, std::size_t j) const noexcept {
        return cell_pixel_[j * cols() + i];
    }
    /// All cells in the index rectangle [i1, i2] x [j1, j2] are inside.
    [[nodiscard]] bool block_inside(std::size_t i1, std::size_t i2,
                                    std::size_t j1, std::size_t j2) const noexcept;
    /// Fine-cell index range of a pixel.
    struct CellRange {
        std::uint32_t i1, i2, j1, j2;  // inclusive
    };
    [[nodiscard]] const CellRange& pixel_cells(std::size_t p) const noexcept {
        return pixel_cells_[p];
    }

private:
    friend PixelGrid pixel_decompose(const OrthoPolygon& P);

    std::vector<Coord> xs_, ys_;          // grid lines, ascending
    std::vector<std::uint8_t> inside_;    // cols*rows, row-major by j
    std::vector<std::uint32_t> prefix_;   // (cols+1)*(rows+1) inside-count sums
    std::vector<std::uint32_t> cell_pixel_;
    std::vector<AxisRect> pixels_;
    std::vector<CellRange> pixel_cells_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacency_;

    [[nodiscard]] std::uint32_t inside_count(std::size_t i1, std::size_t i2,
                                             std::size_t j1, std::size_t j2) const noexcept;
};

[[nodiscard]] PixelGrid pixel_decompose(const OrthoPolygon& P);

/// True iff r lies inside P (interior plus boundary); exact, including
/// degenerate rectangles.
[[nodiscard]] bool contains_rect(const OrthoPolygon& P, const PixelGrid& grid,
                                 const AxisRect& r);

}  // namespace pathguard
