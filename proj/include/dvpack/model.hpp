#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dvpack/errors.hpp"
#include "dvpack/geometry.hpp"

namespace dvpack {

enum class ClassId : int { GreenVegetable = 0, Rice = 1, MelonFruit = 2, Other = 3 };

inline constexpr int kClassCount = 4;

/// Deformation behaviour shared by every item of a category.
///
/// `compressibility` scales how much the height shrinks per unit of
/// (top load / own weight); `max_compression_ratio` caps the shrinkage so
/// nothing gets crushed.
struct ItemClass {
    ClassId id = ClassId::Other;
    double compressibility = 0.0;
    double max_compression_ratio = 0.0;

    static ItemClass standard(ClassId id) {
        switch (id) {
            case ClassId::GreenVegetable: return {id, 0.1, 0.3};
            case ClassId::Rice: return {id, 0.03, 0.2};
            case ClassId::MelonFruit: return {id, 0.01, 0.1};
            case ClassId::Other: return {id, 0.0, 0.0};
        }
        throw InputError("unknown class id " + std::to_string(static_cast<int>(id)));
    }

    bool operator==(const ItemClass&) const = default;
};

inline ClassId class_id_from_int(int value) {
    if (value < 0 || value >= kClassCount) {
        throw InputError("class_id must be in 0..3, got " + std::to_string(value));
    }
    return static_cast<ClassId>(value);
}

// Throws InputError naming `context` when the class parameters are out of range.
inline void validate_item_class(const ItemClass& cls, const std::string& context) {
    if (!(cls.compressibility >= 0.0 && cls.compressibility <= 1.0)) {
        throw InputError(context + ": compressibility must be in [0,1], got " +
                         std::to_string(cls.compressibility));
    }
    if (!(cls.max_compression_ratio >= 0.0 && cls.max_compression_ratio < 1.0)) {
        throw InputError(context + ": max_compression_ratio must be in [0,1), got " +
                         std::to_string(cls.max_compression_ratio));
    }
    if (cls.id == ClassId::Other && (cls.compressibility != 0.0 || cls.max_compression_ratio != 0.0)) {
        throw InputError(context + ": class 3 items must be incompressible");
    }
}

struct ItemSpec {
    std::string name;
    double depth = 0.0;
    double width = 0.0;
    double height = 0.0;
    double weight = 0.0;
    ItemClass item_class;
    std::size_t instance_index = 0;

    Dims dims() const { return {depth, width, height}; }
    double initial_volume() const { return depth * width * height; }

    bool operator==(const ItemSpec&) const = default;
};

inline void validate_item(const ItemSpec& item) {
    const std::string context = "item '" + item.name + "' (#" + std::to_string(item.instance_index) + ")";
    auto positive = [&](double v, const char* field) {
        if (!(v > 0.0)) {
            throw InputError(context + ": " + field + " must be > 0, got " + std::to_string(v));
        }
    };
    positive(item.depth, "depth");
    positive(item.width, "width");
    positive(item.height, "height");
    positive(item.weight, "weight");
    validate_item_class(item.item_class, context);
}

struct BinSpec {
    std::string name;
    double depth = 0.0;
    double width = 0.0;
    double height = 0.0;
    double max_weight = 0.0;

    Dims dims() const { return {depth, width, height}; }
    double volume() const { return depth * width * height; }

    bool operator==(const BinSpec&) const = default;
};

inline void validate_bin(const BinSpec& bin) {
    auto positive = [&](double v, const char* field) {
        if (!(v > 0.0)) {
            throw InputError("bin '" + bin.name + "': " + field + " must be > 0, got " + std::to_string(v));
        }
    };
    positive(bin.depth, "depth");
    positive(bin.width, "width");
    positive(bin.height, "height");
    positive(bin.max_weight, "max_weight");
}

/// The six orientations, named after the axes rotated about (in order).
enum class RotationType : int {
    None = 0,
    Z = 1,
    XThenY = 2,
    Y = 3,
    XThenZ = 4,
    X = 5,
};

inline constexpr int kRotationCount = 6;

inline RotationType rotation_from_int(int value) {
    if (value < 0 || value >= kRotationCount) {
        throw InputError("rotation_type must be in 0..5, got " + std::to_string(value));
    }
    return static_cast<RotationType>(value);
}

/// Runtime state of an item once committed to a bin.
///
/// Support links are indices into the owning placement list. `top_load` is
/// the total weight of everything stacked above through the support links.
struct PlacedItem {
    ItemSpec spec;
    RotationType rotation = RotationType::None;
    Vec3 position;
    double rot_depth = 0.0;
    double rot_width = 0.0;
    double rot_height = 0.0;
    double true_height = 0.0;
    double true_compression = 0.0;
    double top_load = 0.0;
    std::optional<std::size_t> under;
    std::vector<std::size_t> over;

    double top() const { return position.z + true_height; }
    Box box() const { return {position, {rot_depth, rot_width, true_height}}; }
    Dims rotated_dims() const { return {rot_depth, rot_width, rot_height}; }
    double true_volume() const { return rot_depth * rot_width * true_height; }
};

/// Candidate back-left-bottom corner, with the item whose top surface holds it
/// (empty host means the bin floor).
struct PivotEntry {
    Vec3 point;
    std::optional<std::size_t> host;

    bool operator==(const PivotEntry&) const = default;
};

struct Metrics {
    double initial_volume = 0.0;
    double true_volume = 0.0;
    std::size_t item_count = 0;
    double utilization = 0.0;
    double total_weight = 0.0;
};

struct PackingSolution {
    BinSpec bin;
    bool compression = true;
    std::vector<PlacedItem> steps;  // placement order
    std::vector<ItemSpec> unpacked;
    Metrics metrics;
};

}  // namespace dvpack
