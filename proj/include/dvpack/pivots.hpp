#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "dvpack/model.hpp"

namespace dvpack {

inline std::vector<PivotEntry> initial_pivots() { return {PivotEntry{{0.0, 0.0, 0.0}, std::nullopt}}; }

// Bottom-left-deepest: lowest z, then lowest y, then lowest x.
inline bool pivot_before(const PivotEntry& a, const PivotEntry& b) {
    if (a.point.z != b.point.z) return a.point.z < b.point.z;
    if (a.point.y != b.point.y) return a.point.y < b.point.y;
    return a.point.x < b.point.x;
}

inline bool same_point(const Vec3& a, const Vec3& b, double tol = kTolerance) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

/// The three corners exposed by a freshly placed item: in front of it (pX),
/// beside it (pY) and on top of it (pZ). pX and pY start on the placed item's
/// own supporting surface and may need remapping; pZ sits on the true top.
inline std::array<PivotEntry, 3> generate_pivots(const std::vector<PlacedItem>& placed, std::size_t index) {
    const PlacedItem& item = placed.at(index);
    const Vec3& p = item.position;
    return {
        PivotEntry{{p.x + item.rot_depth, p.y, p.z}, item.under},
        PivotEntry{{p.x, p.y + item.rot_width, p.z}, item.under},
        PivotEntry{{p.x, p.y, item.top()}, index},
    };
}

/// Drops a pivot with nothing under it onto the first top surface found
/// straight below it, or onto the floor. Supported pivots come back unchanged
/// apart from having their host resolved.
inline PivotEntry remap_dangling_pivot(const PivotEntry& pivot, const std::vector<PlacedItem>& placed,
                                       double tol = kTolerance) {
    const Vec3& p = pivot.point;
    if (p.z <= tol) {
        return {{p.x, p.y, 0.0}, std::nullopt};
    }
    auto supports = [&](std::size_t idx) {
        const PlacedItem& item = placed[idx];
        return std::abs(item.top() - p.z) <= tol && footprint_contains(item.box(), p.x, p.y, tol);
    };
    if (pivot.host && *pivot.host < placed.size() && supports(*pivot.host)) {
        return {{p.x, p.y, placed[*pivot.host].top()}, pivot.host};
    }
    std::optional<std::size_t> best;
    for (std::size_t idx = 0; idx < placed.size(); ++idx) {
        const PlacedItem& item = placed[idx];
        if (item.top() > p.z + tol || !footprint_contains(item.box(), p.x, p.y, tol)) continue;
        if (!best || item.top() > placed[*best].top()) best = idx;
    }
    if (!best) {
        return {{p.x, p.y, 0.0}, std::nullopt};
    }
    return {{p.x, p.y, placed[*best].top()}, best};
}

/// Removes the consumed pivot, remaps and appends `fresh`, re-seats every
/// hosted pivot on its host's current top, then sorts and collapses
/// duplicates. Pivots whose corner lies on or past the bin's back or side
/// wall can never host an item and are discarded.
inline void insert_pivots(std::vector<PivotEntry>& pivots, std::optional<std::size_t> consumed,
                          std::span<const PivotEntry> fresh, const std::vector<PlacedItem>& placed,
                          const BinSpec& bin, double tol = kTolerance) {
    if (consumed) {
        pivots.erase(pivots.begin() + static_cast<std::ptrdiff_t>(*consumed));
    }
    for (const PivotEntry& p : fresh) {
        pivots.push_back(remap_dangling_pivot(p, placed, tol));
    }
    std::erase_if(pivots, [&](const PivotEntry& p) {
        return p.point.x >= bin.depth - tol || p.point.y >= bin.width - tol;
    });
    for (PivotEntry& p : pivots) {
        p.point.z = p.host ? placed.at(*p.host).top() : 0.0;
    }
    std::stable_sort(pivots.begin(), pivots.end(), pivot_before);

    std::vector<PivotEntry> unique;
    unique.reserve(pivots.size());
    for (const PivotEntry& p : pivots) {
        bool duplicate = false;
        for (auto it = unique.rbegin(); it != unique.rend() && it->point.z >= p.point.z - tol; ++it) {
            if (same_point(it->point, p.point, tol)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) unique.push_back(p);
    }
    pivots = std::move(unique);
}

}  // namespace dvpack
