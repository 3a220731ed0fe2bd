#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dvpack/model.hpp"

namespace dvpack {

enum class Constraint { Weight, Space, Orthogonality, NoOverlap, Stability, Orientation };

inline const char* to_string(Constraint c) {
    switch (c) {
        case Constraint::Weight: return "weight";
        case Constraint::Space: return "space";
        case Constraint::Orthogonality: return "orthogonality";
        case Constraint::NoOverlap: return "no-overlap";
        case Constraint::Stability: return "stability";
        case Constraint::Orientation: return "orientation";
    }
    return "unknown";
}

struct Violation {
    Constraint constraint;
    std::vector<std::size_t> items;  // step indices
    std::string message;
};

inline std::string describe(const Violation& v) {
    std::string s = to_string(v.constraint);
    s += ":";
    for (std::size_t i : v.items) s += " #" + std::to_string(i);
    if (!v.message.empty()) s += " " + v.message;
    return s;
}

/// Checks the first `prefix` steps of `solution` (all steps by default)
/// against the six loading constraints, using true heights. Orthogonality is
/// structural here since every item is an axis-aligned box.
inline std::vector<Violation> validate_steps(const PackingSolution& solution, std::size_t prefix,
                                             double tol = kTolerance) {
    std::vector<Violation> out;
    const BinSpec& bin = solution.bin;
    const std::size_t n = std::min(prefix, solution.steps.size());

    double weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) weight += solution.steps[i].spec.weight;
    if (weight > bin.max_weight + tol) {
        out.push_back({Constraint::Weight, {},
                       "total " + std::to_string(weight) + " kg exceeds " + std::to_string(bin.max_weight) + " kg"});
    }

    for (std::size_t i = 0; i < n; ++i) {
        const PlacedItem& it = solution.steps[i];
        const Box b = it.box();
        if (b.origin.x < -tol || b.origin.y < -tol || b.origin.z < -tol || b.max_x() > bin.depth + tol ||
            b.max_y() > bin.width + tol || b.max_z() > bin.height + tol || !(it.true_height > 0.0)) {
            out.push_back({Constraint::Space, {i}, "'" + it.spec.name + "' outside the bin"});
        }

        std::array<double, 3> spec_dims = it.spec.dims().as_array();
        std::array<double, 3> rot_dims = it.rotated_dims().as_array();
        std::sort(spec_dims.begin(), spec_dims.end());
        std::sort(rot_dims.begin(), rot_dims.end());
        bool permutation = true;
        for (int k = 0; k < 3; ++k) permutation = permutation && std::abs(spec_dims[k] - rot_dims[k]) <= tol;
        if (!permutation) {
            out.push_back({Constraint::Orientation, {i}, "'" + it.spec.name + "' rotated dims are not a permutation"});
        }

        if (b.origin.z > tol) {
            bool supported = false;
            for (std::size_t j = 0; j < n && !supported; ++j) {
                if (j == i) continue;
                const PlacedItem& below = solution.steps[j];
                supported = std::abs(below.top() - b.origin.z) <= tol && footprint_overlap_area(b, below.box()) > tol;
            }
            if (!supported) {
                out.push_back({Constraint::Stability, {i}, "'" + it.spec.name + "' is suspended in the air"});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (boxes_intersect(solution.steps[i].box(), solution.steps[j].box(), tol)) {
                out.push_back({Constraint::NoOverlap, {i, j}, ""});
            }
        }
    }
    return out;
}

inline std::vector<Violation> validate_solution(const PackingSolution& solution, double tol = kTolerance) {
    return validate_steps(solution, solution.steps.size(), tol);
}

/// Validates every prefix of the step sequence; returns the first failing
/// prefix length, or nothing when the whole loading sequence is feasible.
inline std::optional<std::size_t> first_infeasible_prefix(const PackingSolution& solution, double tol = kTolerance) {
    for (std::size_t k = 1; k <= solution.steps.size(); ++k) {
        if (!validate_steps(solution, k, tol).empty()) return k;
    }
    return std::nullopt;
}

}  // namespace dvpack
