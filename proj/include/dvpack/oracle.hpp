#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dvpack/metrics.hpp"
#include "dvpack/model.hpp"

namespace dvpack {

struct OracleResult {
    double best_initial_volume = 0.0;
    PackingSolution arrangement;  // one loading sequence achieving the optimum
};

namespace oracle_detail {

inline constexpr double kEps = 1e-9;

struct Slot {
    std::size_t item;
    std::array<double, 3> dims;  // depth, width, height before compression
    int rotation;
    double x, y;
    std::optional<std::size_t> host;  // index into the slot list
};

struct Geometry {
    std::vector<double> z, height, ratio, load;
};

// Permutation table written out independently of rotate_dims.
inline std::array<double, 3> orient(const std::array<double, 3>& d, int rotation) {
    static constexpr int kPerm[6][3] = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 1, 0}, {2, 0, 1}, {0, 2, 1}};
    return {d[kPerm[rotation][0]], d[kPerm[rotation][1]], d[kPerm[rotation][2]]};
}

class Search {
public:
    Search(const std::vector<ItemSpec>& items, const BinSpec& bin, bool compression)
        : items_(items), bin_(bin), compression_(compression) {
        for (std::size_t i = 0; i < items.size(); ++i) candidates_.push_back(positions_for(i));
        optimum_cap_ = completion_bound();
    }

    void run() { extend(0.0); }

    double best() const { return best_; }
    const std::vector<Slot>& best_slots() const { return best_slots_; }

    Geometry evaluate(const std::vector<Slot>& slots) const {
        const std::size_t n = slots.size();
        Geometry g{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n), std::vector<double>(n, 0.0)};
        for (std::size_t k = 0; k < n; ++k) {
            for (auto up = slots[k].host; up; up = slots[*up].host) {
                g.load[*up] += items_[slots[k].item].weight;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            const ItemSpec& spec = items_[slots[k].item];
            const double c = spec.item_class.compressibility;
            const double r = spec.item_class.max_compression_ratio;
            g.ratio[k] = compression_ ? std::min(r, c * g.load[k] / spec.weight) : 0.0;
            g.height[k] = slots[k].dims[2] * (1.0 - g.ratio[k]);
            g.z[k] = slots[k].host ? g.z[*slots[k].host] + g.height[*slots[k].host] : 0.0;
        }
        return g;
    }

private:
    // 0 plus every sum built from the other items, each contributing nothing
    // or one of its three dimensions.
    std::vector<double> positions_for(std::size_t self) const {
        std::set<double> sums{0.0};
        for (std::size_t j = 0; j < items_.size(); ++j) {
            if (j == self) continue;
            std::set<double> next = sums;
            for (double s : sums) {
                next.insert(s + items_[j].depth);
                next.insert(s + items_[j].width);
                next.insert(s + items_[j].height);
            }
            sums = std::move(next);
        }
        return {sums.begin(), sums.end()};
    }

    bool feasible(const std::vector<Slot>& slots) const {
        const Geometry g = evaluate(slots);
        double weight = 0.0;
        for (const Slot& s : slots) weight += items_[s.item].weight;
        if (weight > bin_.max_weight + kEps) return false;
        for (std::size_t a = 0; a < slots.size(); ++a) {
            if (slots[a].x + slots[a].dims[0] > bin_.depth + kEps) return false;
            if (slots[a].y + slots[a].dims[1] > bin_.width + kEps) return false;
            if (g.z[a] + g.height[a] > bin_.height + kEps) return false;
            for (std::size_t b = a + 1; b < slots.size(); ++b) {
                const bool ox = slots[a].x < slots[b].x + slots[b].dims[0] - kEps &&
                                slots[b].x < slots[a].x + slots[a].dims[0] - kEps;
                const bool oy = slots[a].y < slots[b].y + slots[b].dims[1] - kEps &&
                                slots[b].y < slots[a].y + slots[a].dims[1] - kEps;
                const bool oz = g.z[a] < g.z[b] + g.height[b] - kEps && g.z[b] < g.z[a] + g.height[a] - kEps;
                if (ox && oy && oz) return false;
            }
        }
        return true;
    }

    // Most volume the unused items could still add: the best subset that
    // respects the remaining weight capacity and fits the bin on its own.
    double completion_bound() const {
        std::vector<std::size_t> unused;
        double weight = 0.0;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            const bool used =
                std::any_of(slots_.begin(), slots_.end(), [&](const Slot& s) { return s.item == i; });
            if (used) {
                weight += items_[i].weight;
            } else if (fits_alone(items_[i])) {
                unused.push_back(i);
            }
        }
        double best = 0.0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << unused.size()); ++mask) {
            double w = weight, v = 0.0;
            for (std::size_t k = 0; k < unused.size(); ++k) {
                if (mask & (std::size_t{1} << k)) {
                    w += items_[unused[k]].weight;
                    v += items_[unused[k]].initial_volume();
                }
            }
            if (w <= bin_.max_weight + kEps) best = std::max(best, v);
        }
        return best;
    }

    bool fits_alone(const ItemSpec& it) const {
        for (int rot = 0; rot < 6; ++rot) {
            const auto d = orient({it.depth, it.width, it.height}, rot);
            if (d[0] <= bin_.depth + kEps && d[1] <= bin_.width + kEps && d[2] <= bin_.height + kEps) return true;
        }
        return false;
    }

    void extend(double volume) {
        if (volume > best_ + kEps) {
            best_ = volume;
            best_slots_ = slots_;
        }
        if (volume + completion_bound() <= best_ + kEps) return;

        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (std::find_if(slots_.begin(), slots_.end(), [&](const Slot& s) { return s.item == i; }) !=
                slots_.end()) {
                continue;
            }
            const ItemSpec& spec = items_[i];
            const std::array<double, 3> base = {spec.depth, spec.width, spec.height};
            std::vector<std::array<double, 3>> seen;
            for (int rot = 0; rot < 6; ++rot) {
                const auto dims = orient(base, rot);
                if (std::find(seen.begin(), seen.end(), dims) != seen.end()) continue;
                seen.push_back(dims);
                for (double x : candidates_[i]) {
                    if (x + dims[0] > bin_.depth + kEps) break;
                    for (double y : candidates_[i]) {
                        if (y + dims[1] > bin_.width + kEps) break;
                        try_hosts(i, dims, rot, x, y, volume);
                        if (best_ >= optimum_cap_ - kEps) return;
                    }
                }
            }
        }
    }

    void try_hosts(std::size_t item, const std::array<double, 3>& dims, int rot, double x, double y, double volume) {
        const std::size_t n = slots_.size();
        std::vector<std::optional<std::size_t>> hosts{std::nullopt};
        for (std::size_t k = 0; k < n; ++k) {
            const Slot& h = slots_[k];
            if (x >= h.x - kEps && x < h.x + h.dims[0] - kEps && y >= h.y - kEps && y < h.y + h.dims[1] - kEps) {
                hosts.push_back(k);
            }
        }
        const double v = items_[item].initial_volume();
        for (const auto& host : hosts) {
            slots_.push_back({item, dims, rot, x, y, host});
            if (feasible(slots_)) extend(volume + v);
            slots_.pop_back();
        }
    }

    const std::vector<ItemSpec>& items_;
    const BinSpec& bin_;
    bool compression_;
    std::vector<std::vector<double>> candidates_;
    std::vector<Slot> slots_;
    std::vector<Slot> best_slots_;
    double best_ = 0.0;
    double optimum_cap_ = 0.0;  // no arrangement can beat this
};

}  // namespace oracle_detail

/// Exhaustive optimum of the initial packed volume for tiny instances (at most
/// four items). Explores every loading sequence of every subset where each
/// prefix is feasible, all six orientations, a host-or-floor support choice,
/// and corner positions drawn from the normal-pattern sums of the other items.
inline OracleResult oracle_pack(const std::vector<ItemSpec>& items, const BinSpec& bin, bool compression_enabled) {
    if (items.size() > 4) throw std::invalid_argument("oracle_pack supports at most 4 items");
    oracle_detail::Search search(items, bin, compression_enabled);
    search.run();

    OracleResult result;
    result.best_initial_volume = search.best();
    PackingSolution& sol = result.arrangement;
    sol.bin = bin;
    sol.compression = compression_enabled;
    const auto& slots = search.best_slots();
    const oracle_detail::Geometry g = search.evaluate(slots);
    std::vector<char> used(items.size(), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
        PlacedItem p;
        p.spec = items[slots[k].item];
        p.rotation = static_cast<RotationType>(slots[k].rotation);
        p.position = {slots[k].x, slots[k].y, g.z[k]};
        p.rot_depth = slots[k].dims[0];
        p.rot_width = slots[k].dims[1];
        p.rot_height = slots[k].dims[2];
        p.true_height = g.height[k];
        p.true_compression = g.ratio[k];
        p.top_load = g.load[k];
        p.under = slots[k].host;
        if (slots[k].host) sol.steps[*slots[k].host].over.push_back(k);
        sol.steps.push_back(std::move(p));
        used[slots[k].item] = 1;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!used[i]) sol.unpacked.push_back(items[i]);
    }
    sol.metrics = compute_metrics(sol);
    return result;
}

}  // namespace dvpack
