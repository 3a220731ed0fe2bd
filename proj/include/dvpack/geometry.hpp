#pragma once

#include <algorithm>
#include <array>

namespace dvpack {

// Absolute tolerance for coordinate and height comparisons (cm).
inline constexpr double kTolerance = 1e-9;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Vec3&) const = default;
};

// Extents of a cuboid along the bin's depth (x), width (y) and height (z) axes.
struct Dims {
    double depth = 0.0;
    double width = 0.0;
    double height = 0.0;

    double volume() const { return depth * width * height; }
    std::array<double, 3> as_array() const { return {depth, width, height}; }

    bool operator==(const Dims&) const = default;
};

// Axis-aligned box anchored at its back-left-bottom corner.
struct Box {
    Vec3 origin;
    Dims size;

    double max_x() const { return origin.x + size.depth; }
    double max_y() const { return origin.y + size.width; }
    double max_z() const { return origin.z + size.height; }
};

inline bool open_intervals_overlap(double a_lo, double a_hi, double b_lo, double b_hi, double tol) {
    return a_lo < b_hi - tol && b_lo < a_hi - tol;
}

// True iff the interiors overlap on all three axes. Boxes sharing a face,
// edge or corner do not intersect.
inline bool boxes_intersect(const Box& a, const Box& b, double tol = kTolerance) {
    return open_intervals_overlap(a.origin.x, a.max_x(), b.origin.x, b.max_x(), tol) &&
           open_intervals_overlap(a.origin.y, a.max_y(), b.origin.y, b.max_y(), tol) &&
           open_intervals_overlap(a.origin.z, a.max_z(), b.origin.z, b.max_z(), tol);
}

// Half-open footprint test: [x0, x0 + depth) x [y0, y0 + width).
inline bool footprint_contains(const Box& box, double x, double y, double tol = kTolerance) {
    return x >= box.origin.x - tol && x < box.max_x() - tol &&
           y >= box.origin.y - tol && y < box.max_y() - tol;
}

// Area shared by the two footprints projected onto the floor.
inline double footprint_overlap_area(const Box& a, const Box& b) {
    const double dx = std::min(a.max_x(), b.max_x()) - std::max(a.origin.x, b.origin.x);
    const double dy = std::min(a.max_y(), b.max_y()) - std::max(a.origin.y, b.origin.y);
    return (dx > 0.0 && dy > 0.0) ? dx * dy : 0.0;
}

}  // namespace dvpack
