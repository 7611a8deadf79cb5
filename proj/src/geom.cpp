#include "pathguard/geom.hpp"

#include <algorithm>
#include <map>

namespace pathguard {

const char* error_code_name(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::NonOrthogonal: return "NonOrthogonal";
        case ErrorCode::SelfIntersecting: return "SelfIntersecting";
        case ErrorCode::DuplicateVerticalX: return "DuplicateVerticalX";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotPathPolygon: return "NotPathPolygon";
        case ErrorCode::PointOutside: return "PointOutside";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EmptyCorridor: return "EmptyCorridor";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

// Fenwick tree over compressed indices, used by the segment sweep.
class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t i, int delta) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }
    [[nodiscard]] int prefix(std::size_t i) const {  // sum of [0, i)
        int s = 0;
        for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }
    [[nodiscard]] int range(std::size_t lo, std::size_t hi) const {  // [lo, hi]
        return prefix(hi + 1) - prefix(lo);
    }

private:
    std::vector<int> tree_;
};

struct HSeg {  // horizontal edge, normalized x1 < x2
    Coord y, x1, x2;
};
struct VSegE {  // vertical edge, normalized y1 < y2
    Coord x, y1, y2;
};

// Orthogonal-segment intersection check: every vertical edge must touch
// exactly its two adjacent horizontal edges.  Any extra contact (crossing,
// T-junction, endpoint touch between non-adjacent edges) makes the ring
// non-simple.  Runs in O(n log n).
void check_no_crossings(const std::vector<HSeg>& hs, const std::vector<VSegE>& vs) {
    std::vector<Coord> ys;
    ys.reserve(hs.size());
    for (const auto& h : hs) ys.push_back(h.y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto yidx = [&](Coord y) {
        return static_cast<std::size_t>(
            std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    };

    struct Ev {
        Coord x;
        int type;  // 0 = activate, 1 = query, 2 = deactivate
        std::uint32_t id;
    };
    std::vector<Ev> evs;
    evs.reserve(hs.size() * 2 + vs.size());
    for (std::uint32_t i = 0; i < hs.size(); ++i) {
        evs.push_back({hs[i].x1, 0, i});
        evs.push_back({hs[i].x2, 2, i});
    }
    for (std::uint32_t i = 0; i < vs.size(); ++i) evs.push_back({vs[i].x, 1, i});
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.type < b.type;  // activate, then query, then deactivate
    });

    Fenwick bit(ys.size());
    for (const auto& ev : evs) {
        if (ev.type == 0) {
            bit.add(yidx(hs[ev.id].y), +1);
        } else if (ev.type == 2) {
            bit.add(yidx(hs[ev.id].y), -1);
        } else {
            const auto& v = vs[ev.id];
            // The two adjacent horizontal edges of this vertical edge are
            // always active here and lie inside [y1, y2]; anything beyond
            // those two is a genuine contact between non-adjacent edges.
            int touching = bit.range(yidx(v.y1), yidx(v.y2));
            if (touching != 2)
                throw Error(ErrorCode::SelfIntersecting,
                            "non-adjacent edges touch near x=" +
                                std::to_string(v.x));
        }
    }
}

}  // namespace

OrthoPolygon validate_polygon(std::span<const Point> raw_vertices) {
    const std::size_t n = raw_vertices.size();
    if (n < 3)
        throw Error(ErrorCode::Degenerate,
                    "polygon needs at least 4 vertices, got " + std::to_string(n));

    std::vector<Point> v(raw_vertices.begin(), raw_vertices.end());

    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (a == b)
            throw Error(ErrorCode::Degenerate,
                        "repeated adjacent vertex at index " + std::to_string(i));
        if (a.x != b.x && a.y != b.y)
            throw Error(ErrorCode::NonOrthogonal,
                        "edge " + std::to_string(i) + " is not axis-parallel");
    }
    if (n < 4)
        throw Error(ErrorCode::Degenerate,
                    "polygon needs at least 4 vertices, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        const Point& c = v[(i + 2) % n];
        bool e1h = (a.y == b.y);
        bool e2h = (b.y == c.y);
        if (e1h == e2h)
            throw Error(ErrorCode::Degenerate,
                        "collinear adjacent vertices at index " +
                            std::to_string((i + 1) % n));
    }

    // Orientation; clockwise input is representational, flip it.
    __int128 area2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        area2 += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(b.x) * a.y;
    }
    bool reversed = false;
    if (area2 == 0)
        throw Error(ErrorCode::Degenerate, "polygon has zero area");
    if (area2 < 0) {
        std::reverse(v.begin() + 1, v.end());
        area2 = -area2;
        reversed = true;
    }

    // General position: all vertical edges at pairwise distinct x.
    std::vector<HSeg> hs;
    std::vector<VSegE> vsegs;
    hs.reserve(n / 2);
    vsegs.reserve(n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (a.y == b.y)
            hs.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x)});
        else
            vsegs.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
    }
    {
        std::vector<Coord> xs;
        xs.reserve(vsegs.size());
        for (const auto& s : vsegs) xs.push_back(s.x);
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 0; i + 1 < xs.size(); ++i)
            if (xs[i] == xs[i + 1])
                throw Error(ErrorCode::DuplicateVerticalX,
                            "two vertical edges share x=" + std::to_string(xs[i]));
    }

    // Simplicity.  Repeated vertices first (touch points), then horizontal
    // overlaps at equal y, then the orthogonal crossing sweep.
    {
        std::vector<Point> sorted(v);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                throw Error(ErrorCode::SelfIntersecting,
                            "vertex (" + std::to_string(sorted[i].x) + "," +
                                std::to_string(sorted[i].y) + ") repeats");
    }
    {
        std::vector<HSeg> byy(hs);
        std::sort(byy.begin(), byy.end(), [](const HSeg& a, const HSeg& b) {
            if (a.y != b.y) return a.y < b.y;
            return a.x1 < b.x1;
        });
        for (std::size_t i = 0; i + 1 < byy.size(); ++i)
            if (byy[i].y == byy[i + 1].y && byy[i + 1].x1 <= byy[i].x2)
                throw Error(ErrorCode::SelfIntersecting,
                            "horizontal edges overlap at y=" +
                                std::to_string(byy[i].y));
    }
    check_no_crossings(hs, vsegs);

    OrthoPolygon P;
    P.vertices_ = std::move(v);
    P.reversed_ = reversed;
    P.area2_ = static_cast<Coord>(area2);
    P.kinds_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = P.vertices_[(i + n - 1) % n];
        const Point& q = P.vertices_[i];
        const Point& r = P.vertices_[(i + 1) % n];
        Coord cross = (q.x - p.x) * (r.y - q.y) - (q.y - p.y) * (r.x - q.x);
        P.kinds_[i] = cross > 0 ? VertexKind::Convex : VertexKind::Reflex;
        if (cross <= 0) ++P.reflex_;
    }
    if (P.reflex_ != (n - 4) / 2)
        throw Error(ErrorCode::Internal,
                    "vertex classification violates the (n-4)/2 reflex count");

    AxisRect b{P.vertices_[0], P.vertices_[0]};
    for (const Point& p : P.vertices_) {
        b.lo.x = std::min(b.lo.x, p.x);
        b.lo.y = std::min(b.lo.y, p.y);
        b.hi.x = std::max(b.hi.x, p.x);
        b.hi.y = std::max(b.hi.y, p.y);
    }
    P.bounds_ = b;
    return P;
}

std::vector<HorzEdgeClass> classify_horizontal_edges(const OrthoPolygon& P) {
    std::vector<HorzEdgeClass> out;
    out.reserve(P.size() / 2);
    for (std::size_t e = 0; e < P.edge_count(); ++e) {
        if (!P.edge_horizontal(e)) continue;
        const Point& a = P.edge_a(e);
        const Point& b = P.edge_b(e);
        std::size_t va = e;
        std::size_t vb = (e + 1) % P.size();
        bool ca = !P.is_reflex(va);
        bool cb = !P.is_reflex(vb);
        EdgeClass cls = (ca && cb)     ? EdgeClass::Tooth
                        : (!ca && !cb) ? EdgeClass::Dent
                                       : EdgeClass::Neither;
        // CCW traversal keeps the interior to the left: an edge walking in
        // -x direction has the interior below it (upper chain).
        Chain chain = (b.x < a.x) ? Chain::Upper : Chain::Lower;
        out.push_back({static_cast<std::uint32_t>(e), cls, chain});
    }
    return out;
}

}  // namespace pathguard
