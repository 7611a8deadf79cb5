#pragma once

/// Decomposition of a path polygon's slab sequence into the minimum number
/// of balanced (straight-line walkable) monotone parts, with the
/// local-minimum cut-rectangle assignment rule.

#include <cstdint>
#include <utility>
#include <vector>

#include "pathguard/decompose.hpp"

namespace pathguard {

/// Contiguous run of path-ordered slabs whose upper edges all lie at or
/// above all of its lower edges, plus the corridor rectangle that spans it.
struct BalancedPart {
    std::uint32_t first = 0;  // inclusive slab index range, path order
    std::uint32_t last = 0;
    AxisRect corridor;
    /// True when path order inside this part runs right-to-left; guard
    /// placement walks the slabs in x order regardless.
    bool reversed = false;

    [[nodiscard]] std::size_t slab_count() const noexcept {
        return last - first + 1;
    }
};

/// Record of one part-boundary decision.
struct CutReport {
    std::uint32_t cut_slab = 0;        // last slab of the closing part scan
    std::uint32_t violating_slab = 0;  // slab whose addition broke the band
    bool prev_in_part = false;         // R_{cut-1} exists within the part
    bool prev_is_local_min = false;
    bool assigned_to_next = false;     // cut rectangle moved to the next part
};

enum class CutRule {
    Lemma2,   // move the cut to the next part iff R_{cut-1} is a local minimum
    Flipped,  // invert every assignment decision (test instrumentation)
};

/// True iff slab i is strictly shorter than both path neighbors.  The first
/// and last slabs have one neighbor and are never local minima.
[[nodiscard]] bool is_local_min(const VerticalDecomposition& vd, std::size_t i);

/// Corridor of a balanced slab range: the rectangle spanning the range's
/// leftmost and rightmost vertical edges within the band
/// [max lower-edge y, min upper-edge y].  Throws Error(EmptyCorridor) when
/// the range is not balanced.
[[nodiscard]] AxisRect corridor_of(const VerticalDecomposition& vd,
                                   std::size_t first, std::size_t last);

/// Single scan over the path-ordered slabs.  Closes a part when the next
/// slab would collapse the running band min_u >= max_l, assigning the cut
/// rectangle per `rule`.
[[nodiscard]] std::pair<std::vector<BalancedPart>, std::vector<CutReport>>
split_balanced(const VerticalDecomposition& vd, CutRule rule = CutRule::Lemma2);

}  // namespace pathguard
