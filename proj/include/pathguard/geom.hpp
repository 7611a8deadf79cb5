#pragma once

/// Exact integer geometry primitives for orthogonal (rectilinear) polygons:
/// points, axis-aligned rectangles, polygon validation and vertex/edge
/// classification.  All predicates are integer-exact; there is no floating
/// point anywhere in the core.  Half-integer results (rectangle centers)
/// are represented in doubled coordinates.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathguard {

using Coord = std::int64_t;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Closed axis-aligned rectangle.  Degenerate (zero width and/or height)
/// rectangles are permitted; they are used for seams, guard segments and
/// abutting positions.
struct AxisRect {
    Point lo;  // min-x, min-y corner
    Point hi;  // max-x, max-y corner

    friend bool operator==(const AxisRect&, const AxisRect&) = default;

    [[nodiscard]] Coord width() const noexcept { return hi.x - lo.x; }
    [[nodiscard]] Coord height() const noexcept { return hi.y - lo.y; }
    [[nodiscard]] bool degenerate() const noexcept {
        return width() == 0 || height() == 0;
    }
    [[nodiscard]] bool contains(const Point& p) const noexcept {
        return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
    }
    [[nodiscard]] bool contains(const AxisRect& r) const noexcept {
        return lo.x <= r.lo.x && r.hi.x <= hi.x && lo.y <= r.lo.y &&
               r.hi.y <= hi.y;
    }
    /// Closed intersection test (touching counts).
    [[nodiscard]] bool intersects(const AxisRect& r) const noexcept {
        return lo.x <= r.hi.x && r.lo.x <= hi.x && lo.y <= r.hi.y &&
               r.lo.y <= hi.y;
    }
    /// Open-interior intersection test (touching does not count).
    [[nodiscard]] bool interiors_intersect(const AxisRect& r) const noexcept {
        return lo.x < r.hi.x && r.lo.x < hi.x && lo.y < r.hi.y &&
               r.lo.y < hi.y;
    }
    /// Intersection rectangle; only meaningful when intersects(r).
    [[nodiscard]] AxisRect intersection(const AxisRect& r) const noexcept {
        return {{std::max(lo.x, r.lo.x), std::max(lo.y, r.lo.y)},
                {std::min(hi.x, r.hi.x), std::min(hi.y, r.hi.y)}};
    }
    /// Center in doubled coordinates (exact).
    [[nodiscard]] Point center2() const noexcept {
        return {lo.x + hi.x, lo.y + hi.y};
    }
    /// The same rectangle in doubled coordinates.
    [[nodiscard]] AxisRect doubled() const noexcept {
        return {{2 * lo.x, 2 * lo.y}, {2 * hi.x, 2 * hi.y}};
    }
};

/// Smallest axis-aligned rectangle containing both points.
[[nodiscard]] inline AxisRect spanned_rect(const Point& p, const Point& q) noexcept {
    return {{std::min(p.x, q.x), std::min(p.y, q.y)},
            {std::max(p.x, q.x), std::max(p.y, q.y)}};
}

enum class ErrorCode {
    NonOrthogonal,
    SelfIntersecting,
    DuplicateVerticalX,
    Degenerate,
    NotPathPolygon,
    PointOutside,
    TooLarge,
    EmptyCorridor,
    ConfigInvalid,
    ParseError,
    Internal,
};

[[nodiscard]] const char* error_code_name(ErrorCode c) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class VertexKind : std::uint8_t { Convex, Reflex };

/// Validated simple orthogonal polygon.  Vertices are stored in
/// counterclockwise order; edge i runs from vertex i to vertex (i+1) mod n.
/// Immutable after construction.
class OrthoPolygon {
public:
    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::span<const Point> vertices() const noexcept {
        return vertices_;
    }
    [[nodiscard]] const Point& vertex(std::size_t i) const noexcept {
        return vertices_[i];
    }
    [[nodiscard]] VertexKind kind(std::size_t i) const noexcept {
        return kinds_[i];
    }
    [[nodiscard]] bool is_reflex(std::size_t i) const noexcept {
        return kinds_[i] == VertexKind::Reflex;
    }
    [[nodiscard]] std::size_t reflex_count() const noexcept { return reflex_; }
    [[nodiscard]] std::size_t convex_count() const noexcept {
        return size() - reflex_;
    }
    /// True when the input ring was clockwise and has been auto-reversed.
    [[nodiscard]] bool reversed_input() const noexcept { return reversed_; }

    [[nodiscard]] std::size_t edge_count() const noexcept { return size(); }
    [[nodiscard]] const Point& edge_a(std::size_t e) const noexcept {
        return vertices_[e];
    }
    [[nodiscard]] const Point& edge_b(std::size_t e) const noexcept {
        return vertices_[(e + 1) % size()];
    }
    [[nodiscard]] bool edge_horizontal(std::size_t e) const noexcept {
        return edge_a(e).y == edge_b(e).y;
    }
    /// Index of the edge arriving at vertex i (the edge before it).
    [[nodiscard]] std::size_t edge_into(std::size_t i) const noexcept {
        return (i + size() - 1) % size();
    }
    /// Bounding box of the polygon.
    [[nodiscard]] AxisRect bounds() const noexcept { return bounds_; }
    /// Twice the (positive) enclosed area, exact.
    [[nodiscard]] Coord area2() const noexcept { return area2_; }

private:
    friend OrthoPolygon validate_polygon(std::span<const Point>);

    std::vector<Point> vertices_;
    std::vector<VertexKind> kinds_;
    std::size_t reflex_ = 0;
    bool reversed_ = false;
    AxisRect bounds_{};
    Coord area2_ = 0;
};

/// Validates a raw vertex ring and produces a normalized counterclockwise
/// polygon with vertex kinds assigned.
///
/// Throws Error with code:
///   Degenerate         repeated or collinear-adjacent vertices, or < 4 vertices
///   NonOrthogonal      a non-axis-parallel edge
///   DuplicateVerticalX two vertical edges share an x-coordinate
///   SelfIntersecting   two non-adjacent edges touch or cross
///
/// Clockwise input is silently reversed; the result reports it via
/// reversed_input().
[[nodiscard]] OrthoPolygon validate_polygon(std::span<const Point> raw_vertices);

enum class EdgeClass : std::uint8_t { Tooth, Dent, Neither };
enum class Chain : std::uint8_t { Upper, Lower };

struct HorzEdgeClass {
    std::uint32_t edge;  // edge index in the polygon
    EdgeClass cls;
    Chain chain;
};

/// Labels every horizontal edge tooth/dent/neither and upper/lower chain.
/// Tooth: both endpoints convex.  Dent: both endpoints reflex.  An edge is
/// on the upper chain when the polygon interior lies below it.
[[nodiscard]] std::vector<HorzEdgeClass> classify_horizontal_edges(
    const OrthoPolygon& P);

}  // namespace pathguard
