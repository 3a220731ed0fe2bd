#pragma once

#include <algorithm>
#include <vector>

#include "dvpack/model.hpp"

namespace dvpack {

// Largest of the three distinct facet areas.
inline double bottom_facet_area(const ItemSpec& spec) {
    return std::max({spec.depth * spec.width, spec.depth * spec.height, spec.width * spec.height});
}

// Packing order: bottom facet area desc, compressibility desc, initial volume
// desc, then input order.
inline bool packs_before(const ItemSpec& a, const ItemSpec& b) {
    const double area_a = bottom_facet_area(a);
    const double area_b = bottom_facet_area(b);
    if (area_a != area_b) return area_a > area_b;
    if (a.item_class.compressibility != b.item_class.compressibility) {
        return a.item_class.compressibility > b.item_class.compressibility;
    }
    const double vol_a = a.initial_volume();
    const double vol_b = b.initial_volume();
    if (vol_a != vol_b) return vol_a > vol_b;
    return a.instance_index < b.instance_index;
}

inline std::vector<ItemSpec> sort_items(std::vector<ItemSpec> items) {
    std::stable_sort(items.begin(), items.end(), packs_before);
    return items;
}

}  // namespace dvpack
