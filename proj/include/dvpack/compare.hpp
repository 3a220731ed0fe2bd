#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "dvpack/instances.hpp"
#include "dvpack/packer.hpp"

namespace dvpack {

struct ComparisonRow {
    BinSpec bin;
    Metrics with_compression;
    Metrics without_compression;

    double utilization_delta() const { return with_compression.utilization - without_compression.utilization; }
    long long item_count_delta() const {
        return static_cast<long long>(with_compression.item_count) -
               static_cast<long long>(without_compression.item_count);
    }
    double initial_volume_delta() const {
        return with_compression.initial_volume - without_compression.initial_volume;
    }
    double true_volume_delta() const { return with_compression.true_volume - without_compression.true_volume; }
};

// Both runs of a row see the same items in the same order.
inline std::vector<ComparisonRow> compare_compression(const Instance& instance, const std::vector<BinSpec>& bins) {
    std::vector<ComparisonRow> rows;
    rows.reserve(bins.size());
    for (const BinSpec& bin : bins) {
        rows.push_back({bin, pack_bin(instance.items, bin, true).metrics,
                        pack_bin(instance.items, bin, false).metrics});
    }
    return rows;
}

inline std::string format_comparison(const std::vector<ComparisonRow>& rows) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %10s %10s %10s %6s %6s %6s\n", "bin", "util_on", "util_off", "delta",
                  "n_on", "n_off", "dn");
    out += line;
    for (const ComparisonRow& r : rows) {
        std::snprintf(line, sizeof line, "%-14s %10.4f %10.4f %+10.4f %6zu %6zu %+6lld\n", r.bin.name.c_str(),
                      r.with_compression.utilization, r.without_compression.utilization, r.utilization_delta(),
                      r.with_compression.item_count, r.without_compression.item_count, r.item_count_delta());
        out += line;
    }
    return out;
}

}  // namespace dvpack
