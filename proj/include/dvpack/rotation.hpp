#pragma once

#include <algorithm>
#include <array>

#include "dvpack/model.hpp"

namespace dvpack {

inline constexpr std::array<RotationType, kRotationCount> kAllRotations = {
    RotationType::None, RotationType::Z, RotationType::XThenY,
    RotationType::Y,    RotationType::XThenZ, RotationType::X,
};

// Quarter turns about Z swap depth/width, about Y swap depth/height, about X
// swap width/height; composite types apply them left to right.
inline Dims rotate_dims(const Dims& d, RotationType r) {
    switch (r) {
        case RotationType::None: return {d.depth, d.width, d.height};
        case RotationType::Z: return {d.width, d.depth, d.height};
        case RotationType::XThenY: return {d.width, d.height, d.depth};
        case RotationType::Y: return {d.height, d.width, d.depth};
        case RotationType::XThenZ: return {d.height, d.depth, d.width};
        case RotationType::X: return {d.depth, d.height, d.width};
    }
    return d;
}

/// Rotations sorted by resulting floor area (descending), ties by type id, so
/// the first entry always puts a largest facet down.
inline std::array<RotationType, kRotationCount> bottom_down_rotation_order(const ItemSpec& spec) {
    std::array<RotationType, kRotationCount> order = kAllRotations;
    const Dims dims = spec.dims();
    auto base_area = [&](RotationType r) {
        const Dims rd = rotate_dims(dims, r);
        return rd.depth * rd.width;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](RotationType a, RotationType b) { return base_area(a) > base_area(b); });
    return order;
}

}  // namespace dvpack
