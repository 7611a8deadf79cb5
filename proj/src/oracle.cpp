#include "pathguard/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "pathguard/visibility.hpp"

namespace pathguard {

namespace {

// Generic deterministic exact set cover.  Universe items 0..u-1, candidate
// sets as flat bitsets.  Branches on the uncovered item with the fewest
// covering candidates; candidates ordered by number of newly covered items.
class SetCover {
public:
    SetCover(std::size_t universe, std::vector<std::vector<std::uint64_t>> sets)
        : u_(universe), words_((universe + 63) / 64), sets_(std::move(sets)) {
        covered_by_.resize(u_);
        for (std::uint32_t s = 0; s < sets_.size(); ++s)
            for (std::size_t i = 0; i < u_; ++i)
                if (test(sets_[s], i)) covered_by_[i].push_back(s);
        // Conflict closure per item: items sharing a candidate with it.
        // Powers the anti-chain lower bound.
        closure_.assign(u_ * words_, 0);
        for (std::size_t i = 0; i < u_; ++i)
            for (std::uint32_t s : covered_by_[i])
                for (std::size_t w = 0; w < words_; ++w)
                    closure_[i * words_ + w] |= sets_[s][w];
    }

    struct Result {
        std::size_t count;
        std::vector<std::uint32_t> chosen;
    };

    Result solve() {
        std::vector<std::uint64_t> uncovered(words_, ~std::uint64_t(0));
        if (u_ % 64) uncovered.back() = (std::uint64_t(1) << (u_ % 64)) - 1;
        for (std::size_t i = 0; i < u_; ++i)
            if (covered_by_[i].empty())
                throw Error(ErrorCode::Internal, "uncoverable universe item");

        greedy(uncovered);
        std::vector<std::uint32_t> chosen;
        dfs(uncovered, chosen);
        std::sort(best_sets_.begin(), best_sets_.end());
        return {best_, best_sets_};
    }

private:
    static bool test(const std::vector<std::uint64_t>& bits, std::size_t i) {
        return (bits[i >> 6] >> (i & 63)) & 1;
    }
    static std::size_t popcount_and(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
        std::size_t c = 0;
        for (std::size_t w = 0; w < a.size(); ++w)
            c += static_cast<std::size_t>(__builtin_popcountll(a[w] & b[w]));
        return c;
    }

    void greedy(std::vector<std::uint64_t> uncovered) {
        std::vector<std::uint32_t> chosen;
        std::size_t left = popcount(uncovered);
        while (left > 0) {
            std::uint32_t pick = UINT32_MAX;
            std::size_t gain = 0;
            for (std::uint32_t s = 0; s < sets_.size(); ++s) {
                std::size_t g = popcount_and(sets_[s], uncovered);
                if (g > gain) {
                    gain = g;
                    pick = s;
                }
            }
            chosen.push_back(pick);
            for (std::size_t w = 0; w < words_; ++w) uncovered[w] &= ~sets_[pick][w];
            left -= gain;
        }
        best_ = chosen.size();
        best_sets_ = std::move(chosen);
    }

    static std::size_t popcount(const std::vector<std::uint64_t>& b) {
        std::size_t c = 0;
        for (std::uint64_t w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Items no two of which share a candidate need one guard each.
    std::size_t anti_chain_bound(const std::vector<std::uint64_t>& uncovered) {
        std::vector<std::uint64_t> rem(uncovered);
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            while (rem[w]) {
                std::size_t i =
                    w * 64 + static_cast<std::size_t>(__builtin_ctzll(rem[w]));
                ++count;
                for (std::size_t k = 0; k < words_; ++k)
                    rem[k] &= ~closure_[i * words_ + k];
            }
        }
        return count;
    }

    void dfs(std::vector<std::uint64_t>& uncovered,
             std::vector<std::uint32_t>& chosen) {
        std::size_t left = popcount(uncovered);
        if (left == 0) {
            if (chosen.size() < best_) {
                best_ = chosen.size();
                best_sets_ = chosen;
            }
            return;
        }
        if (chosen.size() + anti_chain_bound(uncovered) >= best_) return;

        // Most constrained uncovered item.
        std::size_t pick = SIZE_MAX, fewest = SIZE_MAX;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = uncovered[w];
            while (word) {
                std::size_t i =
                    w * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
                word &= word - 1;
                if (covered_by_[i].size() < fewest) {
                    fewest = covered_by_[i].size();
                    pick = i;
                }
            }
        }

        std::vector<std::pair<std::size_t, std::uint32_t>> order;
        order.reserve(covered_by_[pick].size());
        for (std::uint32_t s : covered_by_[pick])
            order.emplace_back(popcount_and(sets_[s], uncovered), s);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });

        std::vector<std::uint64_t> saved(uncovered);
        for (auto [gain, s] : order) {
            for (std::size_t w = 0; w < words_; ++w) uncovered[w] = saved[w] & ~sets_[s][w];
            chosen.push_back(s);
            dfs(uncovered, chosen);
            chosen.pop_back();
        }
        uncovered = saved;
    }

    std::size_t u_, words_;
    std::vector<std::vector<std::uint64_t>> sets_;
    std::vector<std::vector<std::uint32_t>> covered_by_;
    std::vector<std::uint64_t> closure_;
    std::size_t best_ = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint32_t> best_sets_;
};

}  // namespace

std::size_t pixel_cap_from_env(std::size_t fallback) {
    if (const char* env = std::getenv("PATHGUARD_PIXEL_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

// Candidate guard points: one representative per closed face of the fine
// grid (cell centers, side midpoints and vertices), in doubled coordinates.
// A guard's set of wholly visible pixels depends only on which face it lies
// in, so this set is complete: restricting guards to it preserves the exact
// minimum.  Pixel centers alone are NOT enough; a guard on a cut line can
// see closed pixels on both sides.
static std::vector<Point> candidate_points(const PixelGrid& grid) {
    const auto& xs = grid.xlines();
    const auto& ys = grid.ylines();
    std::vector<Coord> cx, cy;
    cx.reserve(2 * xs.size());
    cy.reserve(2 * ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cx.push_back(2 * xs[i]);
        if (i + 1 < xs.size()) cx.push_back(xs[i] + xs[i + 1]);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
        cy.push_back(2 * ys[j]);
        if (j + 1 < ys.size()) cy.push_back(ys[j] + ys[j + 1]);
    }
    std::vector<Point> out;
    out.reserve(cx.size() * cy.size());
    for (Coord y : cy)
        for (Coord x : cx)
            if (grid.point_inside_d({x, y})) out.push_back({x, y});
    return out;
}

OracleResult min_rguards_exact(const OrthoPolygon&, const PixelGrid& grid,
                               std::size_t cap) {
    const std::size_t u = grid.pixel_count();
    if (u > cap)
        throw Error(ErrorCode::TooLarge,
                    "pixel count " + std::to_string(u) + " exceeds cap " +
                        std::to_string(cap));

    std::vector<Point> candidates = candidate_points(grid);
    std::vector<std::vector<std::uint64_t>> sets;
    std::vector<std::uint32_t> set_candidate;
    sets.reserve(candidates.size());
    // Identical cover sets collapse to their first representative.
    std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
    for (std::uint32_t c = 0; c < candidates.size(); ++c) {
        VisibilityRegion region = visibility_region(grid, candidates[c]);
        auto [it, inserted] = seen.emplace(region.words(), c);
        if (inserted) {
            sets.push_back(region.words());
            set_candidate.push_back(c);
        }
    }
    SetCover solver(u, std::move(sets));
    auto res = solver.solve();
    OracleResult out;
    out.count = res.count;
    for (std::uint32_t s : res.chosen)
        out.guards_d.push_back(candidates[set_candidate[s]]);
    return out;
}

std::size_t refine_and_recheck(const OrthoPolygon& P, const PixelGrid& grid,
                               int factor, std::size_t cap) {
    if (factor < 1) throw Error(ErrorCode::ConfigInvalid, "factor must be >= 1");
    const std::size_t u = grid.pixel_count() * static_cast<std::size_t>(factor) *
                          static_cast<std::size_t>(factor);
    if (u > cap)
        throw Error(ErrorCode::TooLarge,
                    "refined cell count " + std::to_string(u) + " exceeds cap " +
                        std::to_string(cap));

    // Scale the polygon so each pixel splits into factor x factor subcells
    // on integer boundaries.
    std::vector<Point> scaled;
    scaled.reserve(P.size());
    for (const Point& v : P.vertices()) scaled.push_back({v.x * factor, v.y * factor});
    OrthoPolygon sp = validate_polygon(scaled);
    PixelGrid sg = pixel_decompose(sp);

    std::vector<AxisRect> cells;
    cells.reserve(u);
    for (const AxisRect& px : grid.pixels()) {
        Coord w = px.width(), h = px.height();
        for (int a = 0; a < factor; ++a)
            for (int b = 0; b < factor; ++b) {
                AxisRect sub{{px.lo.x * factor + a * w, px.lo.y * factor + b * h},
                             {px.lo.x * factor + (a + 1) * w,
                              px.lo.y * factor + (b + 1) * h}};
                cells.push_back(sub);
            }
    }

    // Same complete candidate model as the base oracle, on the scaled grid,
    // with the subdivided cells as the universe.
    std::vector<Point> candidates = candidate_points(sg);
    for (const AxisRect& cell : cells) candidates.push_back(cell.center2());
    const std::size_t words = (cells.size() + 63) / 64;
    std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
    std::vector<std::vector<std::uint64_t>> sets;
    for (const Point& g : candidates) {
        std::vector<std::uint64_t> bits(words, 0);
        for (std::size_t q = 0; q < cells.size(); ++q) {
            AxisRect qd = cells[q].doubled();
            AxisRect bb{{std::min(g.x, qd.lo.x), std::min(g.y, qd.lo.y)},
                        {std::max(g.x, qd.hi.x), std::max(g.y, qd.hi.y)}};
            if (sg.rect_inside_d(bb)) bits[q >> 6] |= std::uint64_t(1) << (q & 63);
        }
        auto [it, inserted] = seen.emplace(std::move(bits), 0);
        if (inserted) sets.push_back(it->first);
    }
    SetCover solver(cells.size(), std::move(sets));
    return solver.solve().count;
}

}  // namespace pathguard
