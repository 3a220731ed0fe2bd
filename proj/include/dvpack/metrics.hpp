#pragma once

#include "dvpack/model.hpp"

namespace dvpack {

// Initial volume uses the uncompressed dimensions; true volume uses the
// compressed heights. Utilization is true volume over bin volume.
inline Metrics compute_metrics(const PackingSolution& solution) {
    Metrics m;
    for (const PlacedItem& item : solution.steps) {
        m.initial_volume += item.spec.initial_volume();
        m.true_volume += item.true_volume();
        m.total_weight += item.spec.weight;
    }
    m.item_count = solution.steps.size();
    m.utilization = m.true_volume / solution.bin.volume();
    return m;
}

}  // namespace dvpack
