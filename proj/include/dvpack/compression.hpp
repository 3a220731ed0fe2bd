#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <stdexcept>
#include <vector>

#include "dvpack/model.hpp"

namespace dvpack {

/// Height reduction ratio of an item of weight `weight` carrying `top_load`:
/// min(max_ratio, compressibility * top_load / weight).
inline double effective_compression_ratio(double compressibility, double max_ratio, double weight,
                                          double top_load) {
    return std::min(max_ratio, compressibility * top_load / weight);
}

inline double true_height(double height, double compression) { return height * (1.0 - compression); }

/// Support path from the floor-resting ancestor up to and including `top`.
inline std::vector<std::size_t> support_chain(const std::vector<PlacedItem>& placed, std::size_t top) {
    std::vector<std::size_t> chain;
    std::optional<std::size_t> cursor = top;
    while (cursor) {
        if (chain.size() > placed.size()) {
            throw std::logic_error("cycle in support links");
        }
        chain.push_back(*cursor);
        cursor = placed.at(*cursor).under;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// Every member of the chain carries the added weight; nothing else changes.
inline void propagate_load(std::vector<PlacedItem>& placed, std::span<const std::size_t> chain,
                           double added_weight) {
    for (std::size_t idx : chain) {
        placed.at(idx).top_load += added_weight;
    }
}

/// Breadth-first order of everything transitively supported by `floor_index`,
/// starting with `floor_index` itself.
inline std::vector<std::size_t> column_members(const std::vector<PlacedItem>& placed, std::size_t floor_index) {
    std::vector<std::size_t> order;
    std::vector<char> seen(placed.size(), 0);
    std::deque<std::size_t> queue{floor_index};
    while (!queue.empty()) {
        const std::size_t current = queue.front();
        queue.pop_front();
        if (seen.at(current)) {
            throw std::logic_error("cycle in support links");
        }
        seen[current] = 1;
        order.push_back(current);
        for (std::size_t child : placed[current].over) {
            queue.push_back(child);
        }
    }
    return order;
}

/// Re-derives compression, true height and elevation for a whole column from
/// the current top loads. Children are re-seated on their supporter's new top.
inline void recompute_column(std::vector<PlacedItem>& placed, std::size_t floor_index,
                             bool compression_enabled = true) {
    if (placed.at(floor_index).under) {
        throw std::logic_error("recompute_column: item does not rest on the floor");
    }
    for (std::size_t idx : column_members(placed, floor_index)) {
        PlacedItem& item = placed[idx];
        const ItemClass& cls = item.spec.item_class;
        item.true_compression =
            compression_enabled
                ? effective_compression_ratio(cls.compressibility, cls.max_compression_ratio, item.spec.weight,
                                              item.top_load)
                : 0.0;
        item.true_height = true_height(item.rot_height, item.true_compression);
        item.position.z = item.under ? placed[*item.under].top() : 0.0;
    }
}

}  // namespace dvpack
