#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dvpack/compression.hpp"
#include "dvpack/metrics.hpp"
#include "dvpack/model.hpp"
#include "dvpack/ordering.hpp"
#include "dvpack/pivots.hpp"
#include "dvpack/rotation.hpp"

namespace dvpack {

/// Contents of the single open bin during a packing run.
///
/// Invariants maintained across successful placements:
///  - total weight never exceeds the bin's limit;
///  - every item lies inside the bin using its true height;
///  - no two items' interiors overlap;
///  - pivots are sorted bottom-left-deepest and all sit on the floor or on a
///    host's current top surface.
class BinState {
public:
    BinState(BinSpec spec, bool compression_enabled)
        : spec_(std::move(spec)), compression_enabled_(compression_enabled), pivots_(initial_pivots()) {}

    const BinSpec& spec() const { return spec_; }
    bool compression_enabled() const { return compression_enabled_; }
    const std::vector<PlacedItem>& placed() const { return placed_; }
    const std::vector<PivotEntry>& pivots() const { return pivots_; }
    double total_weight() const { return total_weight_; }

    /// Tries to put `item` with `rotation` at `pivots()[pivot_index]`.
    /// Returns false and leaves the state untouched when any constraint fails.
    bool try_place(const ItemSpec& item, RotationType rotation, std::size_t pivot_index) {
        const PivotEntry pivot = pivots_.at(pivot_index);
        const Dims rd = rotate_dims(item.dims(), rotation);

        if (total_weight_ + item.weight > spec_.max_weight + kTolerance) return false;
        if (pivot.point.x + rd.depth > spec_.depth + kTolerance ||
            pivot.point.y + rd.width > spec_.width + kTolerance) {
            return false;
        }

        PlacedItem candidate;
        candidate.spec = item;
        candidate.rotation = rotation;
        candidate.position = pivot.point;
        candidate.rot_depth = rd.depth;
        candidate.rot_width = rd.width;
        candidate.rot_height = rd.height;
        candidate.true_height = rd.height;
        candidate.under = pivot.host;

        if (!pivot.host) {
            candidate.position.z = 0.0;
            if (rd.height > spec_.height + kTolerance) return false;
            const Box box = candidate.box();
            for (const PlacedItem& other : placed_) {
                if (boxes_intersect(box, other.box())) return false;
            }
            commit(std::move(candidate), pivot_index);
            return true;
        }

        const std::size_t host = *pivot.host;
        if (!compression_enabled_ && placed_[host].top() + rd.height > spec_.height + kTolerance) {
            return false;
        }

        const std::vector<std::size_t> chain = support_chain(placed_, host);
        const std::size_t floor_item = chain.front();
        const std::vector<std::size_t> column = column_members(placed_, floor_item);

        struct Snapshot {
            double z, true_height, true_compression, top_load;
        };
        std::vector<Snapshot> journal;
        journal.reserve(column.size());
        for (std::size_t idx : column) {
            const PlacedItem& p = placed_[idx];
            journal.push_back({p.position.z, p.true_height, p.true_compression, p.top_load});
        }

        const std::size_t new_index = placed_.size();
        placed_.push_back(std::move(candidate));
        placed_[host].over.push_back(new_index);
        propagate_load(placed_, chain, item.weight);
        recompute_column(placed_, floor_item, compression_enabled_);

        bool fits = placed_[new_index].top() <= spec_.height + kTolerance;
        if (fits) {
            std::vector<std::size_t> moved{new_index};
            for (std::size_t k = 0; k < column.size(); ++k) {
                const PlacedItem& p = placed_[column[k]];
                if (p.position.z != journal[k].z || p.true_height != journal[k].true_height) {
                    moved.push_back(column[k]);
                }
            }
            fits = !any_intersection(moved);
        }

        if (!fits) {
            for (std::size_t k = 0; k < column.size(); ++k) {
                PlacedItem& p = placed_[column[k]];
                p.position.z = journal[k].z;
                p.true_height = journal[k].true_height;
                p.true_compression = journal[k].true_compression;
                p.top_load = journal[k].top_load;
            }
            placed_[host].over.pop_back();
            placed_.pop_back();
            return false;
        }

        total_weight_ += item.weight;
        refresh_pivots(new_index, pivot_index);
        return true;
    }

private:
    void commit(PlacedItem item, std::size_t pivot_index) {
        total_weight_ += item.spec.weight;
        placed_.push_back(std::move(item));
        refresh_pivots(placed_.size() - 1, pivot_index);
    }

    void refresh_pivots(std::size_t new_index, std::size_t consumed) {
        const auto fresh = generate_pivots(placed_, new_index);
        insert_pivots(pivots_, consumed, fresh, placed_, spec_);
    }

    bool any_intersection(const std::vector<std::size_t>& moved) const {
        for (std::size_t i : moved) {
            const Box box = placed_[i].box();
            for (std::size_t j = 0; j < placed_.size(); ++j) {
                if (j != i && boxes_intersect(box, placed_[j].box())) return true;
            }
        }
        return false;
    }

    BinSpec spec_;
    bool compression_enabled_;
    std::vector<PlacedItem> placed_;
    std::vector<PivotEntry> pivots_;
    double total_weight_ = 0.0;
};

inline bool try_place(const ItemSpec& item, RotationType rotation, std::size_t pivot_index, BinState& state) {
    return state.try_place(item, rotation, pivot_index);
}

/// First feasible (rotation, pivot) in bottom-down rotation order and
/// pivot order. Rotations that reproduce an already-tried footprint and
/// height are skipped.
inline bool place_first_fit(BinState& state, const ItemSpec& item) {
    std::vector<Dims> tried;
    for (RotationType rotation : bottom_down_rotation_order(item)) {
        const Dims rd = rotate_dims(item.dims(), rotation);
        if (std::find(tried.begin(), tried.end(), rd) != tried.end()) continue;
        tried.push_back(rd);
        for (std::size_t i = 0; i < state.pivots().size(); ++i) {
            if (state.try_place(item, rotation, i)) return true;
        }
    }
    return false;
}

/// Packs as much of `items` as possible into one bin, in sort_items order.
inline PackingSolution pack_bin(const std::vector<ItemSpec>& items, const BinSpec& bin, bool compression_enabled) {
    BinState state(bin, compression_enabled);
    PackingSolution solution;
    solution.bin = bin;
    solution.compression = compression_enabled;
    for (const ItemSpec& item : sort_items(items)) {
        if (!place_first_fit(state, item)) {
            solution.unpacked.push_back(item);
        }
    }
    solution.steps = state.placed();
    solution.metrics = compute_metrics(solution);
    return solution;
}

}  // namespace dvpack
