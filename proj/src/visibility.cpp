#include "pathguard/visibility.hpp"

#include <algorithm>

namespace pathguard {

namespace {

// Fine-column/row window of a doubled coordinate: [lo, hi] is the index
// range that a bounding rectangle through this value extends to on each
// side (hi < lo when the value sits exactly on a grid line).
struct Window {
    std::size_t lo, hi;
};

Window window_of(const std::vector<Coord>& lines, Coord v_d) {
    auto it = std::upper_bound(lines.begin(), lines.end(), v_d,
                               [](Coord q, Coord line) { return q < 2 * line; });
    std::size_t first_right = static_cast<std::size_t>(it - lines.begin()) - 1;
    std::size_t last_left = first_right;
    if (first_right > 0 && 2 * lines[first_right] == v_d)
        last_left = first_right - 1;
    return {first_right, last_left};
}

struct GuardView {
    Window cx, cy;
};

GuardView make_view(const PixelGrid& g, const Point& p_d) {
    return {window_of(g.xlines(), p_d.x), window_of(g.ylines(), p_d.y)};
}

// bb({g} ∪ pixel) ⊆ P, as an O(1) prefix-sum block query.
bool sees_pixel(const PixelGrid& g, const GuardView& v, std::size_t pixel) {
    const auto& pc = g.pixel_cells(pixel);
    std::size_t i1 = std::min<std::size_t>(v.cx.lo, pc.i1);
    std::size_t i2 = std::max<std::size_t>(v.cx.hi, pc.i2);
    std::size_t j1 = std::min<std::size_t>(v.cy.lo, pc.j1);
    std::size_t j2 = std::max<std::size_t>(v.cy.hi, pc.j2);
    return g.block_inside(i1, i2, j1, j2);
}

void require_inside(const PixelGrid& grid, const Point& p_d, const char* who) {
    if (!grid.point_inside_d(p_d))
        throw Error(ErrorCode::PointOutside,
                    std::string(who) + " (" + std::to_string(p_d.x) + "/2," +
                        std::to_string(p_d.y) + "/2) is outside the polygon");
}

}  // namespace

std::vector<std::uint32_t> VisibilityRegion::covered_pixels() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
            out.push_back(static_cast<std::uint32_t>(w * 64 + bit));
            word &= word - 1;
        }
    }
    return out;
}

bool r_visible_d(const PixelGrid& grid, const Point& p_d, const Point& q_d) {
    require_inside(grid, p_d, "point");
    require_inside(grid, q_d, "point");
    return grid.rect_inside_d(spanned_rect(p_d, q_d));
}

bool r_visible(const PixelGrid& grid, const Point& p, const Point& q) {
    return r_visible_d(grid, {2 * p.x, 2 * p.y}, {2 * q.x, 2 * q.y});
}

VisibilityRegion visibility_region(const PixelGrid& grid, const Point& g_d) {
    require_inside(grid, g_d, "guard");
    VisibilityRegion region(g_d, grid.pixel_count());
    GuardView view = make_view(grid, g_d);
    for (std::size_t p = 0; p < grid.pixel_count(); ++p)
        if (sees_pixel(grid, view, p)) region.set(p);
    return region;
}

CoverageResult coverage_check(const PixelGrid& grid,
                              const std::vector<Point>& guards_d) {
    std::vector<GuardView> views;
    views.reserve(guards_d.size());
    for (const Point& g : guards_d) {
        require_inside(grid, g, "guard");
        views.push_back(make_view(grid, g));
    }
    CoverageResult res;
    for (std::uint32_t p = 0; p < grid.pixel_count(); ++p) {
        bool seen = false;
        for (const GuardView& v : views)
            if (sees_pixel(grid, v, p)) {
                seen = true;
                break;
            }
        if (!seen) res.uncovered.push_back(p);
    }
    res.ok = res.uncovered.empty();
    return res;
}

std::optional<Point> kernel_point(const PixelGrid& grid) {
    const auto& xs = grid.xlines();
    const auto& ys = grid.ylines();
    std::vector<Coord> cand_x, cand_y;
    cand_x.reserve(2 * xs.size());
    cand_y.reserve(2 * ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cand_x.push_back(2 * xs[i]);
        if (i + 1 < xs.size()) cand_x.push_back(xs[i] + xs[i + 1]);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
        cand_y.push_back(2 * ys[j]);
        if (j + 1 < ys.size()) cand_y.push_back(ys[j] + ys[j + 1]);
    }
    for (Coord y : cand_y) {
        for (Coord x : cand_x) {
            Point g{x, y};
            if (!grid.point_inside_d(g)) continue;
            GuardView view = make_view(grid, g);
            bool all = true;
            for (std::size_t p = 0; all && p < grid.pixel_count(); ++p)
                all = sees_pixel(grid, view, p);
            if (all) return g;
        }
    }
    return std::nullopt;
}

bool is_rstar(const PixelGrid& grid) { return kernel_point(grid).has_value(); }

bool is_orthoconvex(const OrthoPolygon& P) {
    for (std::size_t e = 0; e < P.edge_count(); ++e)
        if (P.is_reflex(e) && P.is_reflex((e + 1) % P.size())) return false;
    return true;
}

bool extreme_edges_weakly_visible(const OrthoPolygon& P, const PixelGrid& grid) {
    // Unique extreme edges under orthoconvexity.
    std::size_t left = SIZE_MAX, right = SIZE_MAX, top = SIZE_MAX, bot = SIZE_MAX;
    for (std::size_t e = 0; e < P.edge_count(); ++e) {
        if (P.edge_horizontal(e)) {
            if (top == SIZE_MAX || P.edge_a(e).y > P.edge_a(top).y) top = e;
            if (bot == SIZE_MAX || P.edge_a(e).y < P.edge_a(bot).y) bot = e;
        } else {
            if (left == SIZE_MAX || P.edge_a(e).x < P.edge_a(left).x) left = e;
            if (right == SIZE_MAX || P.edge_a(e).x > P.edge_a(right).x) right = e;
        }
    }
    auto yspan = [&](std::size_t e) {
        return std::pair<Coord, Coord>{std::min(P.edge_a(e).y, P.edge_b(e).y),
                                       std::max(P.edge_a(e).y, P.edge_b(e).y)};
    };
    auto xspan = [&](std::size_t e) {
        return std::pair<Coord, Coord>{std::min(P.edge_a(e).x, P.edge_b(e).x),
                                       std::max(P.edge_a(e).x, P.edge_b(e).x)};
    };

    // A connecting axis-parallel segment exists iff one exists at a
    // half-grid coordinate within the edges' common span.
    auto [ly1, ly2] = yspan(left);
    auto [ry1, ry2] = yspan(right);
    Coord ylo = 2 * std::max(ly1, ry1), yhi = 2 * std::min(ly2, ry2);
    bool horiz = false;
    if (ylo <= yhi) {
        Coord x1 = 2 * P.edge_a(left).x, x2 = 2 * P.edge_a(right).x;
        const auto& ys = grid.ylines();
        auto try_y = [&](Coord y) {
            if (horiz || y < ylo || y > yhi) return;
            horiz = grid.rect_inside_d({{x1, y}, {x2, y}});
        };
        try_y(ylo);
        try_y(yhi);
        for (std::size_t j = 0; j + 1 < ys.size() && !horiz; ++j) {
            try_y(2 * ys[j]);
            try_y(ys[j] + ys[j + 1]);
        }
    }
    if (!horiz) return false;

    auto [tx1, tx2] = xspan(top);
    auto [bx1, bx2] = xspan(bot);
    Coord xlo = 2 * std::max(tx1, bx1), xhi = 2 * std::min(tx2, bx2);
    bool vert = false;
    if (xlo <= xhi) {
        Coord y1 = 2 * P.edge_a(bot).y, y2 = 2 * P.edge_a(top).y;
        const auto& xs = grid.xlines();
        auto try_x = [&](Coord x) {
            if (vert || x < xlo || x > xhi) return;
            vert = grid.rect_inside_d({{x, y1}, {x, y2}});
        };
        try_x(xlo);
        try_x(xhi);
        for (std::size_t i = 0; i + 1 < xs.size() && !vert; ++i) {
            try_x(2 * xs[i]);
            try_x(xs[i] + xs[i + 1]);
        }
    }
    return vert;
}

}  // namespace pathguard
