#include "pathguard/balanced.hpp"

#include <algorithm>

namespace pathguard {

bool is_local_min(const VerticalDecomposition& vd, std::size_t i) {
    if (i == 0 || i + 1 >= vd.m()) return false;
    Coord h = vd.slab(i).height();
    return h < vd.slab(i - 1).height() && h < vd.slab(i + 1).height();
}

AxisRect corridor_of(const VerticalDecomposition& vd, std::size_t first,
                     std::size_t last) {
    Coord min_u = vd.slab(first).top_y();
    Coord max_l = vd.slab(first).bottom_y();
    for (std::size_t i = first + 1; i <= last; ++i) {
        min_u = std::min(min_u, vd.slab(i).top_y());
        max_l = std::max(max_l, vd.slab(i).bottom_y());
    }
    if (min_u < max_l)
        throw Error(ErrorCode::EmptyCorridor,
                    "slab range is not balanced: band [" + std::to_string(max_l) +
                        "," + std::to_string(min_u) + "] is empty");
    // Parts are x-monotone, so the extreme x values sit on the end slabs.
    Coord x1 = std::min(vd.slab(first).rect.lo.x, vd.slab(last).rect.lo.x);
    Coord x2 = std::max(vd.slab(first).rect.hi.x, vd.slab(last).rect.hi.x);
    return {{x1, max_l}, {x2, min_u}};
}

std::pair<std::vector<BalancedPart>, std::vector<CutReport>> split_balanced(
    const VerticalDecomposition& vd, CutRule rule) {
    std::vector<BalancedPart> parts;
    std::vector<CutReport> cuts;
    const std::size_t m = vd.m();

    auto emit = [&](std::size_t first, std::size_t last) {
        BalancedPart p;
        p.first = static_cast<std::uint32_t>(first);
        p.last = static_cast<std::uint32_t>(last);
        p.corridor = corridor_of(vd, first, last);
        p.reversed = vd.slab(last).rect.lo.x < vd.slab(first).rect.lo.x;
        parts.push_back(p);
    };

    std::size_t start = 0;
    Coord min_u = vd.slab(0).top_y();
    Coord max_l = vd.slab(0).bottom_y();
    std::size_t i = 1;
    while (i < m) {
        Coord nmu = std::min(min_u, vd.slab(i).top_y());
        Coord nml = std::max(max_l, vd.slab(i).bottom_y());
        if (nmu >= nml) {
            min_u = nmu;
            max_l = nml;
            ++i;
            continue;
        }

        const std::size_t cut = i - 1;
        CutReport rep;
        rep.cut_slab = static_cast<std::uint32_t>(cut);
        rep.violating_slab = static_cast<std::uint32_t>(i);
        rep.prev_in_part = cut > start;
        rep.prev_is_local_min = rep.prev_in_part && is_local_min(vd, cut - 1);
        // The cut may move only while the closing part keeps a slab, and the
        // rule leaves it in place when R_{cut-1} is the part's first slab.
        bool movable = cut > start;
        bool to_next = movable && cut - 1 > start && rep.prev_is_local_min;
        if (rule == CutRule::Flipped && movable) to_next = !to_next;
        rep.assigned_to_next = to_next;
        cuts.push_back(rep);

        std::size_t part_last = to_next ? cut - 1 : cut;
        emit(start, part_last);
        start = part_last + 1;
        min_u = vd.slab(start).top_y();
        max_l = vd.slab(start).bottom_y();
        if (start == i) ++i;
        // else the violating slab is re-tested against the fresh band; two
        // path-adjacent slabs always share a positive seam, so it admits it.
    }
    emit(start, m - 1);
    return {std::move(parts), std::move(cuts)};
}

}  // namespace pathguard
