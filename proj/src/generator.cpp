#include "pathguard/generator.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace pathguard {

namespace {

struct SlabSpec {
    Coord l, u;  // bottom and top y of the slab
};

// One build attempt; returns the slab y-walk, or nothing when the forced
// corridor break found no room with this sub-seed.
std::optional<std::vector<SlabSpec>> walk_attempt(const GenConfig& cfg,
                                                  std::uint64_t sub_seed) {
    std::mt19937_64 rng(sub_seed);
    const Coord R = cfg.range;
    const std::size_t m = cfg.slab_count;
    const Coord hspread = std::max<Coord>(4, R / 4);
    auto uniform = [&](Coord lo, Coord hi) {  // inclusive
        return std::uniform_int_distribution<Coord>(lo, hi)(rng);
    };

    std::vector<SlabSpec> slabs;
    slabs.reserve(m);
    Coord h0 = uniform(1, std::min(hspread, R));
    Coord l = uniform(0, R - h0);
    Coord u = l + h0;
    slabs.push_back({l, u});

    bool want_break = cfg.allow_unbalanced && m >= 3;
    std::size_t break_at =
        want_break ? 1 + static_cast<std::size_t>(uniform(0, static_cast<Coord>(m) - 3))
                   : m;
    bool broke = false;
    Coord min_u = u, max_l = l;  // running band, reset after each break

    for (std::size_t i = 1; i < m; ++i) {
        bool change_top =
            std::generate_canonical<double, 53>(rng) < cfg.wind_probability;
        bool force = want_break && !broke && i >= break_at;

        if (force) {
            // Break the band: drop the top below max_l, or raise the bottom
            // above min_u, whichever has room.
            bool can_top = max_l >= l + 2;
            bool can_bottom = u >= min_u + 2;
            if (can_top || can_bottom) {
                bool top = can_top && (!can_bottom || change_top);
                if (top)
                    u = uniform(l + 1, max_l - 1);
                else
                    l = uniform(min_u + 1, u - 1);
                slabs.push_back({l, u});
                broke = true;
                min_u = u;
                max_l = l;
                continue;
            }
            // No room yet; fall through to a normal step and retry next i.
        }

        for (int attempt = 0;; ++attempt) {
            if (attempt >= 16) {
                change_top = !change_top;  // the other side always has room
                attempt = 0;
            }
            if (change_top) {
                Coord nu = l + uniform(1, std::min(hspread, R - l));
                if (nu != u) {
                    u = nu;
                    break;
                }
            } else {
                Coord nl = u - uniform(1, std::min(hspread, u));
                if (nl != l) {
                    l = nl;
                    break;
                }
            }
        }
        slabs.push_back({l, u});
        if (std::min(min_u, u) < std::max(max_l, l)) {  // accidental break
            broke = true;
            min_u = u;
            max_l = l;
        } else {
            min_u = std::min(min_u, u);
            max_l = std::max(max_l, l);
        }
    }
    if (want_break && !broke) return std::nullopt;
    return slabs;
}

}  // namespace

OrthoPolygon generate(const GenConfig& cfg) {
    const std::size_t m = cfg.slab_count;
    const Coord R = cfg.range;
    if (m < 1) throw Error(ErrorCode::ConfigInvalid, "slab_count must be >= 1");
    if (R < std::max<Coord>(static_cast<Coord>(m), 4))
        throw Error(ErrorCode::ConfigInvalid,
                    "range too small for " + std::to_string(m) + " slabs");
    if (cfg.wind_probability < 0.0 || cfg.wind_probability > 1.0)
        throw Error(ErrorCode::ConfigInvalid, "wind_probability outside [0,1]");

    std::optional<std::vector<SlabSpec>> slabs;
    for (std::uint64_t salt = 0; !slabs; ++salt)
        slabs = walk_attempt(cfg, cfg.seed + 0x9e3779b97f4a7c15ULL * salt);

    // Strictly increasing x-breaks within [0, R].
    std::mt19937_64 xrng(cfg.seed ^ 0xda942042e4dd58b5ULL);
    const Coord base = std::max<Coord>(1, R / static_cast<Coord>(m));
    std::vector<Coord> xs;
    xs.reserve(m + 1);
    xs.push_back(0);
    for (std::size_t i = 0; i < m; ++i)
        xs.push_back(xs.back() +
                     std::uniform_int_distribution<Coord>(1, base)(xrng));

    // Boundary walk: bottom chain left to right, right wall, top chain
    // right to left, left wall.
    std::vector<Point> v;
    v.reserve(2 * m + 2);
    v.push_back({xs[0], (*slabs)[0].l});
    for (std::size_t i = 1; i < m; ++i)
        if ((*slabs)[i].l != (*slabs)[i - 1].l) {
            v.push_back({xs[i], (*slabs)[i - 1].l});
            v.push_back({xs[i], (*slabs)[i].l});
        }
    v.push_back({xs[m], (*slabs)[m - 1].l});
    v.push_back({xs[m], (*slabs)[m - 1].u});
    for (std::size_t i = m - 1; i > 0; --i)
        if ((*slabs)[i].u != (*slabs)[i - 1].u) {
            v.push_back({xs[i], (*slabs)[i].u});
            v.push_back({xs[i], (*slabs)[i - 1].u});
        }
    v.push_back({xs[0], (*slabs)[0].u});

    return validate_polygon(v);
}

}  // namespace pathguard
