#include "pathguard/guard.hpp"

#include <algorithm>

namespace pathguard {

namespace {

struct Run {
    Coord y;
    Coord x1, x2;
    std::uint32_t edge;
    Chain chain;
};

// Maximal runs of consecutive equal-y upper (or lower) slab segments,
// walking the part left to right.  Each run lies on a single polygon edge.
std::vector<Run> chain_runs(const VerticalDecomposition& vd,
                            const BalancedPart& part, bool upper) {
    std::vector<Run> runs;
    const std::size_t len = part.slab_count();
    for (std::size_t k = 0; k < len; ++k) {
        std::size_t idx = part.reversed ? part.last - k : part.first + k;
        const Slab& s = vd.slab(idx);
        Coord y = upper ? s.top_y() : s.bottom_y();
        std::uint32_t e = upper ? s.top_edge : s.bottom_edge;
        if (!runs.empty() && runs.back().y == y) {
            if (runs.back().edge != e)
                throw Error(ErrorCode::Internal, "equal-y run spans two edges");
            runs.back().x2 = s.rect.hi.x;
        } else {
            runs.push_back({y, s.rect.lo.x, s.rect.hi.x, e,
                            upper ? Chain::Upper : Chain::Lower});
        }
    }
    return runs;
}

// A run is a tooth of the part polygon iff both junction vertices are
// convex: for the upper chain that means strictly higher than both
// neighboring runs, for the lower chain strictly lower.  Part corners
// (missing neighbors) count as convex.
bool run_is_tooth(const std::vector<Run>& runs, std::size_t i, bool upper) {
    auto beats = [&](Coord nbr) {
        return upper ? runs[i].y > nbr : runs[i].y < nbr;
    };
    if (i > 0 && !beats(runs[i - 1].y)) return false;
    if (i + 1 < runs.size() && !beats(runs[i + 1].y)) return false;
    return true;
}

}  // namespace

std::vector<GuardPosition> tooth_positions(const VerticalDecomposition& vd,
                                           const BalancedPart& part) {
    const Coord band_lo = part.corridor.lo.y;
    const Coord band_hi = part.corridor.hi.y;

    std::vector<GuardPosition> sorted;
    auto collect = [&](bool upper) {
        auto runs = chain_runs(vd, part, upper);
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (!run_is_tooth(runs, i, upper)) continue;
            GuardPosition p;
            p.rect = {{runs[i].x1, band_lo}, {runs[i].x2, band_hi}};
            p.sources[0] = runs[i].edge;
            p.chains[0] = runs[i].chain;
            sorted.push_back(p);
        }
    };
    collect(false);  // lower chain first so ties at a part corner keep it first
    collect(true);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const GuardPosition& a, const GuardPosition& b) {
                         return a.rect.lo.x < b.rect.lo.x;
                     });

    // One left-to-right pass; closed intersection, so zero-width abutment
    // merges too.  A merged position intersecting the next one would mean
    // three shadows share a point.
    std::vector<GuardPosition> out;
    bool back_merged = false;
    for (const GuardPosition& p : sorted) {
        if (!out.empty() && out.back().rect.intersects(p.rect)) {
            GuardPosition& b = out.back();
            if (back_merged)
                throw Error(ErrorCode::Internal,
                            "three tooth shadows share a point");
            if (b.chains[0] == p.chains[0])
                throw Error(ErrorCode::Internal,
                            "same-chain tooth positions overlap");
            b.rect = b.rect.intersection(p.rect);
            b.sources[1] = p.sources[0];
            b.chains[1] = p.chains[0];
            b.source_count = 2;
            back_merged = true;
        } else {
            out.push_back(p);
            back_merged = false;
        }
    }
    return out;
}

GuardSolution guard_decomposition(const VerticalDecomposition& vd, CutRule rule) {
    GuardSolution sol;
    auto [parts, cuts] = split_balanced(vd, rule);
    sol.cuts = std::move(cuts);
    sol.parts.reserve(parts.size());
    for (const BalancedPart& part : parts) {
        PartSolution ps;
        ps.part = part;
        ps.positions = tooth_positions(vd, part);
        for (const GuardPosition& p : ps.positions)
            sol.guards_d.push_back(p.guard_point_d());
        sol.guard_number += ps.positions.size();
        sol.parts.push_back(std::move(ps));
    }
    return sol;
}

GuardSolution guard_path_polygon(const OrthoPolygon& P) {
    return guard_decomposition(vertical_decompose(P));
}

bool point_in_shadow_d(const OrthoPolygon& P, const PixelGrid& grid,
                       std::size_t edge, const Point& p_d) {
    if (!P.edge_horizontal(edge))
        throw Error(ErrorCode::Internal, "shadow of a vertical edge");
    Coord ex1 = 2 * std::min(P.edge_a(edge).x, P.edge_b(edge).x);
    Coord ex2 = 2 * std::max(P.edge_a(edge).x, P.edge_b(edge).x);
    if (p_d.x < ex1 || p_d.x > ex2) return false;
    Point foot{p_d.x, 2 * P.edge_a(edge).y};
    return grid.rect_inside_d(spanned_rect(p_d, foot));
}

bool shadow_necessity_witness(const OrthoPolygon& P, const PixelGrid& grid,
                              std::size_t edge,
                              const std::vector<Point>& guards_d) {
    for (const Point& g : guards_d)
        if (point_in_shadow_d(P, grid, edge, g)) return true;
    return false;
}

std::vector<std::uint32_t> shadow_pixels(const OrthoPolygon& P,
                                         const PixelGrid& grid,
                                         std::size_t edge) {
    Coord ex1 = 2 * std::min(P.edge_a(edge).x, P.edge_b(edge).x);
    Coord ex2 = 2 * std::max(P.edge_a(edge).x, P.edge_b(edge).x);
    Coord ey = 2 * P.edge_a(edge).y;

    std::vector<std::uint32_t> out;
    for (std::uint32_t pi = 0; pi < grid.pixel_count(); ++pi) {
        AxisRect px = grid.pixel(pi).doubled();
        Coord o1 = std::max(px.lo.x, ex1);
        Coord o2 = std::min(px.hi.x, ex2);
        if (o1 > o2) continue;
        // Candidate x values: the overlap ends plus every half-grid value
        // inside; segment containment is constant across an open fine
        // column, so these decide membership exactly.
        bool hit = false;
        auto try_x = [&](Coord x) {
            if (hit || x < o1 || x > o2) return;
            Coord py = std::clamp(ey, px.lo.y, px.hi.y);
            hit = grid.rect_inside_d(spanned_rect({x, py}, {x, ey}));
        };
        try_x(o1);
        try_x(o2);
        const auto& xs = grid.xlines();
        for (std::size_t i = 0; i + 1 < xs.size() && !hit; ++i) {
            try_x(2 * xs[i]);
            try_x(xs[i] + xs[i + 1]);
        }
        if (hit) out.push_back(pi);
    }
    return out;
}

}  // namespace pathguard
