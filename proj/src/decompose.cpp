#include "pathguard/decompose.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace pathguard {

namespace {

struct BuildRect {
    Coord left_x;
    Coord lo_y, hi_y;
    Coord right_x = 0;
    std::uint32_t bottom_edge = 0, top_edge = 0;
};

struct SweepResult {
    std::vector<BuildRect> rects;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacency;
};

// Plane sweep over the vertical edges (all at distinct x).  Maintains the
// set of active interior y-intervals; each active interval is one slab
// being built.  Events split, merge, open or close intervals, and slab
// adjacency falls out of the split/merge bookkeeping.
SweepResult sweep_vertical(const OrthoPolygon& P) {
    const std::size_t n = P.size();

    struct VEdge {
        Coord x, y1, y2;
        bool opening;                       // interior lies to the right
        std::uint32_t bottom_partner;       // horizontal edge at (x, y1)
        std::uint32_t top_partner;          // horizontal edge at (x, y2)
        bool bottom_partner_right;          // partner extends to x' > x
        bool top_partner_right;
    };

    std::vector<VEdge> edges;
    edges.reserve(n / 2);
    for (std::size_t e = 0; e < n; ++e) {
        if (P.edge_horizontal(e)) continue;
        const Point& a = P.edge_a(e);
        const Point& b = P.edge_b(e);
        std::size_t va = e, vb = (e + 1) % n;
        std::size_t vbot = a.y < b.y ? va : vb;
        std::size_t vtop = a.y < b.y ? vb : va;
        auto partner_of = [&](std::size_t v) {
            std::size_t other = (P.edge_into(v) == e) ? v : P.edge_into(v);
            return static_cast<std::uint32_t>(other);
        };
        auto partner_right = [&](std::size_t v, std::uint32_t pe) {
            const Point& pa = P.edge_a(pe);
            const Point& pb = P.edge_b(pe);
            Coord ox = (pa == P.vertex(v)) ? pb.x : pa.x;
            return ox > P.vertex(v).x;
        };
        VEdge ve;
        ve.x = a.x;
        ve.y1 = std::min(a.y, b.y);
        ve.y2 = std::max(a.y, b.y);
        ve.opening = b.y < a.y;  // CCW: downward edge keeps interior right
        ve.bottom_partner = partner_of(vbot);
        ve.top_partner = partner_of(vtop);
        ve.bottom_partner_right = partner_right(vbot, ve.bottom_partner);
        ve.top_partner_right = partner_right(vtop, ve.top_partner);
        edges.push_back(ve);
    }
    std::sort(edges.begin(), edges.end(),
              [](const VEdge& a, const VEdge& b) { return a.x < b.x; });

    SweepResult out;
    out.rects.reserve(edges.size());

    struct Active {
        Coord hi_y;
        std::uint32_t rect;
    };
    std::map<Coord, Active> active;  // keyed by interval lower y

    auto open_rect = [&](Coord x, Coord lo, Coord hi, std::uint32_t be,
                         std::uint32_t te) {
        std::uint32_t id = static_cast<std::uint32_t>(out.rects.size());
        out.rects.push_back({x, lo, hi, 0, be, te});
        active.emplace(lo, Active{hi, id});
        return id;
    };
    auto close_rect = [&](std::map<Coord, Active>::iterator it, Coord x) {
        std::uint32_t id = it->second.rect;
        out.rects[id].right_x = x;
        active.erase(it);
        return id;
    };

    for (const VEdge& ve : edges) {
        if (ve.opening) {
            Coord lo = ve.y1, hi = ve.y2;
            std::uint32_t be = ve.bottom_partner, te = ve.top_partner;
            std::uint32_t below = UINT32_MAX, above = UINT32_MAX;
            if (!ve.bottom_partner_right) {
                // Boundary below ends here: the arm under us merges in.
                auto it = active.upper_bound(ve.y1);
                if (it == active.begin() || (--it)->second.hi_y != ve.y1)
                    throw Error(ErrorCode::Internal, "sweep: merge-below lookup");
                lo = it->first;
                be = out.rects[it->second.rect].bottom_edge;
                below = close_rect(it, ve.x);
            }
            if (!ve.top_partner_right) {
                auto it = active.find(ve.y2);
                if (it == active.end())
                    throw Error(ErrorCode::Internal, "sweep: merge-above lookup");
                hi = it->second.hi_y;
                te = out.rects[it->second.rect].top_edge;
                above = close_rect(it, ve.x);
            }
            std::uint32_t id = open_rect(ve.x, lo, hi, be, te);
            if (below != UINT32_MAX) out.adjacency.emplace_back(below, id);
            if (above != UINT32_MAX) out.adjacency.emplace_back(above, id);
        } else {
            auto it = active.upper_bound(ve.y1);
            if (it == active.begin())
                throw Error(ErrorCode::Internal, "sweep: close lookup");
            --it;
            Coord lo = it->first, hi = it->second.hi_y;
            if (lo > ve.y1 || hi < ve.y2)
                throw Error(ErrorCode::Internal, "sweep: close span mismatch");
            std::uint32_t be = out.rects[it->second.rect].bottom_edge;
            std::uint32_t te = out.rects[it->second.rect].top_edge;
            std::uint32_t id = close_rect(it, ve.x);
            if (ve.bottom_partner_right) {
                // Interior continues to the right below the edge.
                std::uint32_t nid =
                    open_rect(ve.x, lo, ve.y1, be, ve.bottom_partner);
                out.adjacency.emplace_back(id, nid);
            } else if (lo != ve.y1) {
                throw Error(ErrorCode::Internal, "sweep: bottom remainder mismatch");
            }
            if (ve.top_partner_right) {
                std::uint32_t nid =
                    open_rect(ve.x, ve.y2, hi, ve.top_partner, te);
                out.adjacency.emplace_back(id, nid);
            } else if (hi != ve.y2) {
                throw Error(ErrorCode::Internal, "sweep: top remainder mismatch");
            }
        }
    }
    if (!active.empty())
        throw Error(ErrorCode::Internal, "sweep: unclosed interval remains");
    return out;
}

// Degree table of the slab dual graph.
std::vector<std::vector<std::uint32_t>> neighbor_lists(const SweepResult& sw) {
    std::vector<std::vector<std::uint32_t>> nbr(sw.rects.size());
    for (auto [a, b] : sw.adjacency) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    return nbr;
}

bool dual_is_path(const SweepResult& sw,
                  const std::vector<std::vector<std::uint32_t>>& nbr) {
    const std::size_t m = sw.rects.size();
    if (m == 1) return sw.adjacency.empty();
    if (sw.adjacency.size() != m - 1) return false;
    std::size_t deg1 = 0;
    for (const auto& ns : nbr) {
        if (ns.size() > 2) return false;
        if (ns.size() == 1) ++deg1;
        if (ns.empty()) return false;  // disconnected slab
    }
    return deg1 == 2;
}

}  // namespace

VSeg VerticalDecomposition::seam(std::size_t i) const {
    const AxisRect& a = slabs_[i].rect;
    const AxisRect& b = slabs_[i + 1].rect;
    Coord x;
    if (a.hi.x == b.lo.x)
        x = a.hi.x;
    else if (b.hi.x == a.lo.x)
        x = b.hi.x;
    else
        throw Error(ErrorCode::Internal, "consecutive slabs do not abut");
    VSeg s{x, std::max(a.lo.y, b.lo.y), std::min(a.hi.y, b.hi.y)};
    if (s.y1 >= s.y2)
        throw Error(ErrorCode::Internal, "seam has no positive length");
    return s;
}

VerticalDecomposition vertical_decompose(const OrthoPolygon& P) {
    SweepResult sw = sweep_vertical(P);
    auto nbr = neighbor_lists(sw);
    if (!dual_is_path(sw, nbr))
        throw Error(ErrorCode::NotPathPolygon,
                    "dual graph of the vertical decomposition is not a path");
    const std::size_t m = sw.rects.size();
    if (m != (P.size() - 2) / 2)
        throw Error(ErrorCode::Internal,
                    "slab count differs from (n-2)/2 on a path polygon");

    // Deterministic start: the degree-1 slab whose lower corner is
    // lexicographically smallest.
    std::uint32_t start = 0;
    if (m > 1) {
        std::uint32_t best = UINT32_MAX;
        for (std::uint32_t i = 0; i < m; ++i) {
            if (nbr[i].size() != 1) continue;
            if (best == UINT32_MAX) {
                best = i;
                continue;
            }
            Point pi{sw.rects[i].left_x, sw.rects[i].lo_y};
            Point pb{sw.rects[best].left_x, sw.rects[best].lo_y};
            if (pi < pb) best = i;
        }
        start = best;
    }

    std::vector<Slab> ordered;
    ordered.reserve(m);
    std::uint32_t prev = UINT32_MAX, cur = start;
    for (std::size_t k = 0; k < m; ++k) {
        const BuildRect& r = sw.rects[cur];
        ordered.push_back(Slab{{{r.left_x, r.lo_y}, {r.right_x, r.hi_y}},
                               r.top_edge,
                               r.bottom_edge});
        std::uint32_t next = UINT32_MAX;
        for (std::uint32_t nb : nbr[cur])
            if (nb != prev) next = nb;
        prev = cur;
        cur = next;
    }
    return VerticalDecomposition(std::move(ordered));
}

bool is_path(const OrthoPolygon& P) {
    SweepResult sw = sweep_vertical(P);
    auto nbr = neighbor_lists(sw);
    return dual_is_path(sw, nbr);
}

// ---------------------------------------------------------------------------
// Pixel decomposition
// ---------------------------------------------------------------------------

namespace {

struct LineCover {
    // Per grid line, merged sorted list of covered intervals.
    std::vector<std::vector<std::pair<Coord, Coord>>> cover;

    void add(std::size_t line, Coord a, Coord b) {
        if (a > b) std::swap(a, b);
        cover[line].emplace_back(a, b);
    }
    void merge_all() {
        for (auto& v : cover) {
            std::sort(v.begin(), v.end());
            std::vector<std::pair<Coord, Coord>> merged;
            for (auto [a, b] : v) {
                if (!merged.empty() && a <= merged.back().second)
                    merged.back().second = std::max(merged.back().second, b);
                else
                    merged.emplace_back(a, b);
            }
            v = std::move(merged);
        }
    }
    [[nodiscard]] bool covers(std::size_t line, Coord a, Coord b) const {
        const auto& v = cover[line];
        auto it = std::upper_bound(v.begin(), v.end(),
                                   std::make_pair(a, std::numeric_limits<Coord>::max()));
        if (it == v.begin()) return false;
        --it;
        return it->first <= a && b <= it->second;
    }
};

struct DSU {
    std::vector<std::uint32_t> parent;
    explicit DSU(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::uint32_t PixelGrid::inside_count(std::size_t i1, std::size_t i2,
                                      std::size_t j1, std::size_t j2) const noexcept {
    const std::size_t w = cols() + 1;
    return prefix_[(j2 + 1) * w + (i2 + 1)] - prefix_[j1 * w + (i2 + 1)] -
           prefix_[(j2 + 1) * w + i1] + prefix_[j1 * w + i1];
}

bool PixelGrid::block_inside(std::size_t i1, std::size_t i2, std::size_t j1,
                             std::size_t j2) const noexcept {
    return inside_count(i1, i2, j1, j2) ==
           static_cast<std::uint32_t>((i2 - i1 + 1) * (j2 - j1 + 1));
}

bool PixelGrid::rect_inside_d(const AxisRect& r) const {
    const Coord X0 = 2 * xs_.front(), X1 = 2 * xs_.back();
    const Coord Y0 = 2 * ys_.front(), Y1 = 2 * ys_.back();
    if (r.lo.x < X0 || r.hi.x > X1 || r.lo.y < Y0 || r.hi.y > Y1) return false;

    // Column candidates: positive-overlap range for an extended rectangle,
    // the one or two touching columns for a degenerate one.
    auto col_of_hi = [&](Coord v) {  // last column i with 2*xs_[i] < v
        auto it = std::lower_bound(xs_.begin(), xs_.end(), v,
                                   [](Coord line, Coord q) { return 2 * line < q; });
        return static_cast<std::size_t>(it - xs_.begin()) - 1;
    };
    auto col_of_lo = [&](Coord v) {  // first column i with 2*xs_[i+1] > v
        auto it = std::upper_bound(xs_.begin(), xs_.end(), v,
                                   [](Coord q, Coord line) { return q < 2 * line; });
        return static_cast<std::size_t>(it - xs_.begin()) - 1;
    };
    auto row_of_hi = [&](Coord v) {
        auto it = std::lower_bound(ys_.begin(), ys_.end(), v,
                                   [](Coord line, Coord q) { return 2 * line < q; });
        return static_cast<std::size_t>(it - ys_.begin()) - 1;
    };
    auto row_of_lo = [&](Coord v) {
        auto it = std::upper_bound(ys_.begin(), ys_.end(), v,
                                   [](Coord q, Coord line) { return q < 2 * line; });
        return static_cast<std::size_t>(it - ys_.begin()) - 1;
    };

    const bool degx = (r.lo.x == r.hi.x);
    const bool degy = (r.lo.y == r.hi.y);

    if (!degx && !degy) {
        return block_inside(col_of_lo(r.lo.x), col_of_hi(r.hi.x),
                            row_of_lo(r.lo.y), row_of_hi(r.hi.y));
    }

    std::size_t ci[2];
    std::size_t cn = 0;
    if (degx) {
        // Columns whose closed x-range contains the line.
        std::size_t hi = col_of_lo(r.lo.x);
        ci[cn++] = hi;
        if (hi > 0 && 2 * xs_[hi] == r.lo.x) ci[cn++] = hi - 1;
    }
    std::size_t ri[2];
    std::size_t rn = 0;
    if (degy) {
        std::size_t hi = row_of_lo(r.lo.y);
        ri[rn++] = hi;
        if (hi > 0 && 2 * ys_[hi] == r.lo.y) ri[rn++] = hi - 1;
    }

    if (degx && degy) {
        for (std::size_t a = 0; a < cn; ++a)
            for (std::size_t b = 0; b < rn; ++b)
                if (cell_inside(ci[a], ri[b])) return true;
        return false;
    }
    if (degx) {
        // Each row piece must be covered from the left or right column.
        std::size_t j1 = row_of_lo(r.lo.y), j2 = row_of_hi(r.hi.y);
        for (std::size_t j = j1; j <= j2; ++j) {
            bool ok = false;
            for (std::size_t a = 0; a < cn; ++a) ok = ok || cell_inside(ci[a], j);
            if (!ok) return false;
        }
        return true;
    }
    std::size_t i1 = col_of_lo(r.lo.x), i2 = col_of_hi(r.hi.x);
    for (std::size_t i = i1; i <= i2; ++i) {
        bool ok = false;
        for (std::size_t b = 0; b < rn; ++b) ok = ok || cell_inside(i, ri[b]);
        if (!ok) return false;
    }
    return true;
}

std::optional<std::size_t> PixelGrid::locate_pixel_d(const Point& p_d) const {
    if (!point_inside_d(p_d)) return std::nullopt;
    auto cand = [&](const std::vector<Coord>& lines, Coord v, std::size_t out[2]) {
        auto it = std::upper_bound(lines.begin(), lines.end(), v,
                                   [](Coord q, Coord line) { return q < 2 * line; });
        std::size_t hi = static_cast<std::size_t>(it - lines.begin()) - 1;
        std::size_t n = 0;
        out[n++] = hi;
        if (hi > 0 && 2 * lines[hi] == v) out[n++] = hi - 1;
        return n;
    };
    std::size_t ci[2], ri[2];
    std::size_t cn = cand(xs_, p_d.x, ci), rn = cand(ys_, p_d.y, ri);
    std::optional<std::size_t> best;
    for (std::size_t a = 0; a < cn; ++a)
        for (std::size_t b = 0; b < rn; ++b)
            if (cell_inside(ci[a], ri[b])) {
                std::size_t p = cell_pixel(ci[a], ri[b]);
                if (!best || p < *best) best = p;
            }
    return best;
}

PixelGrid pixel_decompose(const OrthoPolygon& P) {
    const std::size_t n = P.size();
    PixelGrid g;

    for (std::size_t e = 0; e < n; ++e) {
        if (P.edge_horizontal(e))
            g.ys_.push_back(P.edge_a(e).y);
        else
            g.xs_.push_back(P.edge_a(e).x);
    }
    auto uniq = [](std::vector<Coord>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(g.xs_);
    uniq(g.ys_);
    const std::size_t cols = g.xs_.size() - 1;
    const std::size_t rows = g.ys_.size() - 1;

    // Inside matrix: per column, horizontal edges fully spanning it toggle
    // interior parity from bottom to top.
    g.inside_.assign(cols * rows, 0);
    std::vector<Coord> span_ys;
    for (std::size_t i = 0; i < cols; ++i) {
        span_ys.clear();
        Coord xa = g.xs_[i], xb = g.xs_[i + 1];
        for (std::size_t e = 0; e < n; ++e) {
            if (!P.edge_horizontal(e)) continue;
            Coord x1 = std::min(P.edge_a(e).x, P.edge_b(e).x);
            Coord x2 = std::max(P.edge_a(e).x, P.edge_b(e).x);
            if (x1 <= xa && xb <= x2) span_ys.push_back(P.edge_a(e).y);
        }
        std::sort(span_ys.begin(), span_ys.end());
        std::size_t ptr = 0;
        bool in = false;
        for (std::size_t j = 0; j < rows; ++j) {
            while (ptr < span_ys.size() && span_ys[ptr] <= g.ys_[j]) {
                in = !in;
                ++ptr;
            }
            g.inside_[j * cols + i] = in ? 1 : 0;
        }
    }

    g.prefix_.assign((cols + 1) * (rows + 1), 0);
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t i = 0; i < cols; ++i)
            g.prefix_[(j + 1) * (cols + 1) + (i + 1)] =
                g.prefix_[j * (cols + 1) + (i + 1)] +
                g.prefix_[(j + 1) * (cols + 1) + i] -
                g.prefix_[j * (cols + 1) + i] + g.inside_[j * cols + i];

    // Cut segments: polygon edges plus extensions of edges through their
    // reflex endpoints, shot to the first boundary point.
    LineCover vcover, hcover;
    vcover.cover.resize(g.xs_.size());
    hcover.cover.resize(g.ys_.size());
    auto xline = [&](Coord x) {
        return static_cast<std::size_t>(
            std::lower_bound(g.xs_.begin(), g.xs_.end(), x) - g.xs_.begin());
    };
    auto yline = [&](Coord y) {
        return static_cast<std::size_t>(
            std::lower_bound(g.ys_.begin(), g.ys_.end(), y) - g.ys_.begin());
    };

    auto shoot_vertical = [&](Coord x, Coord y0, int dir) {
        // First horizontal edge strictly spanning x beyond y0.
        std::optional<Coord> hit;
        for (std::size_t e = 0; e < n; ++e) {
            if (!P.edge_horizontal(e)) continue;
            Coord x1 = std::min(P.edge_a(e).x, P.edge_b(e).x);
            Coord x2 = std::max(P.edge_a(e).x, P.edge_b(e).x);
            if (!(x1 < x && x < x2)) continue;
            Coord y = P.edge_a(e).y;
            if (dir > 0 ? y > y0 : y < y0)
                if (!hit || (dir > 0 ? y < *hit : y > *hit)) hit = y;
        }
        if (!hit) throw Error(ErrorCode::Internal, "vertical extension misses");
        return *hit;
    };
    auto shoot_horizontal = [&](Coord y, Coord x0, int dir) {
        // First vertical edge strictly spanning y, or vertex on the ray line.
        std::optional<Coord> hit;
        auto consider = [&](Coord x) {
            if (dir > 0 ? x > x0 : x < x0)
                if (!hit || (dir > 0 ? x < *hit : x > *hit)) hit = x;
        };
        for (std::size_t e = 0; e < n; ++e) {
            if (P.edge_horizontal(e)) continue;
            Coord y1 = std::min(P.edge_a(e).y, P.edge_b(e).y);
            Coord y2 = std::max(P.edge_a(e).y, P.edge_b(e).y);
            if (y1 < y && y < y2) consider(P.edge_a(e).x);
        }
        for (const Point& v : P.vertices())
            if (v.y == y) consider(v.x);
        if (!hit) throw Error(ErrorCode::Internal, "horizontal extension misses");
        return *hit;
    };

    for (std::size_t e = 0; e < n; ++e) {
        const Point& a = P.edge_a(e);
        const Point& b = P.edge_b(e);
        if (P.edge_horizontal(e)) {
            hcover.add(yline(a.y), a.x, b.x);
            for (std::size_t v : {e, (e + 1) % n}) {
                if (!P.is_reflex(v)) continue;
                const Point& p = P.vertex(v);
                const Point& o = (v == e) ? b : a;  // other endpoint
                int dir = p.x > o.x ? +1 : -1;
                hcover.add(yline(p.y), p.x, shoot_horizontal(p.y, p.x, dir));
            }
        } else {
            vcover.add(xline(a.x), a.y, b.y);
            for (std::size_t v : {e, (e + 1) % n}) {
                if (!P.is_reflex(v)) continue;
                const Point& p = P.vertex(v);
                const Point& o = (v == e) ? b : a;
                int dir = p.y > o.y ? +1 : -1;
                vcover.add(xline(p.x), p.y, shoot_vertical(p.x, p.y, dir));
            }
        }
    }
    vcover.merge_all();
    hcover.merge_all();

    // Faces of the arrangement: union-find over inside cells across
    // unblocked shared sides.
    DSU dsu(cols * rows);
    auto cell = [&](std::size_t i, std::size_t j) {
        return static_cast<std::uint32_t>(j * cols + i);
    };
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i + 1 < cols; ++i) {
            if (!g.cell_inside(i, j) || !g.cell_inside(i + 1, j)) continue;
            if (!vcover.covers(i + 1, g.ys_[j], g.ys_[j + 1]))
                dsu.unite(cell(i, j), cell(i + 1, j));
        }
    }
    for (std::size_t j = 0; j + 1 < rows; ++j) {
        for (std::size_t i = 0; i < cols; ++i) {
            if (!g.cell_inside(i, j) || !g.cell_inside(i, j + 1)) continue;
            if (!hcover.covers(j + 1, g.xs_[i], g.xs_[i + 1]))
                dsu.unite(cell(i, j), cell(i, j + 1));
        }
    }

    g.cell_pixel_.assign(cols * rows, UINT32_MAX);
    std::vector<std::uint32_t> root_pixel(cols * rows, UINT32_MAX);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < cols; ++i) {
            if (!g.cell_inside(i, j)) continue;
            std::uint32_t r = dsu.find(cell(i, j));
            if (root_pixel[r] == UINT32_MAX) {
                root_pixel[r] = static_cast<std::uint32_t>(g.pixels_.size());
                g.pixels_.push_back({{g.xs_[i], g.ys_[j]}, {g.xs_[i + 1], g.ys_[j + 1]}});
                g.pixel_cells_.push_back({static_cast<std::uint32_t>(i),
                                          static_cast<std::uint32_t>(i),
                                          static_cast<std::uint32_t>(j),
                                          static_cast<std::uint32_t>(j)});
            }
            std::uint32_t p = root_pixel[r];
            g.cell_pixel_[j * cols + i] = p;
            AxisRect& pr = g.pixels_[p];
            pr.lo.x = std::min(pr.lo.x, g.xs_[i]);
            pr.lo.y = std::min(pr.lo.y, g.ys_[j]);
            pr.hi.x = std::max(pr.hi.x, g.xs_[i + 1]);
            pr.hi.y = std::max(pr.hi.y, g.ys_[j + 1]);
            auto& pc = g.pixel_cells_[p];
            pc.i1 = std::min(pc.i1, static_cast<std::uint32_t>(i));
            pc.i2 = std::max(pc.i2, static_cast<std::uint32_t>(i));
            pc.j1 = std::min(pc.j1, static_cast<std::uint32_t>(j));
            pc.j2 = std::max(pc.j2, static_cast<std::uint32_t>(j));
        }
    }

    // Every face of the arrangement must be a rectangle.
    for (std::size_t p = 0; p < g.pixels_.size(); ++p) {
        const auto& pc = g.pixel_cells_[p];
        for (std::size_t j = pc.j1; j <= pc.j2; ++j)
            for (std::size_t i = pc.i1; i <= pc.i2; ++i)
                if (g.cell_pixel_[j * cols + i] != p)
                    throw Error(ErrorCode::Internal, "non-rectangular pixel");
    }

    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i + 1 < cols; ++i) {
            if (!g.cell_inside(i, j) || !g.cell_inside(i + 1, j)) continue;
            std::uint32_t a = g.cell_pixel(i, j), b = g.cell_pixel(i + 1, j);
            if (a != b) g.adjacency_.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    for (std::size_t j = 0; j + 1 < rows; ++j) {
        for (std::size_t i = 0; i < cols; ++i) {
            if (!g.cell_inside(i, j) || !g.cell_inside(i, j + 1)) continue;
            std::uint32_t a = g.cell_pixel(i, j), b = g.cell_pixel(i, j + 1);
            if (a != b) g.adjacency_.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(g.adjacency_.begin(), g.adjacency_.end());
    g.adjacency_.erase(std::unique(g.adjacency_.begin(), g.adjacency_.end()),
                       g.adjacency_.end());
    return g;
}

bool contains_rect(const OrthoPolygon&, const PixelGrid& grid, const AxisRect& r) {
    return grid.rect_inside_d(r.doubled());
}

}  // namespace pathguard
