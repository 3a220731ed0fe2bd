#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dvpack/compare.hpp"
#include "dvpack/instances.hpp"
#include "dvpack/metrics.hpp"
#include "dvpack/model.hpp"

namespace dvpack {

inline nlohmann::json metrics_to_json(const Metrics& m) {
    return {{"initial_volume", round6(m.initial_volume)},
            {"true_volume", round6(m.true_volume)},
            {"item_count", m.item_count},
            {"utilization", round6(m.utilization)},
            {"total_weight", round6(m.total_weight)}};
}

/// Step records carry the worker-facing placement (name, rotation, corner,
/// rotated extents, final true height) plus the original item record and the
/// support link, so a file can be re-validated or replayed on its own.
inline nlohmann::json solution_to_json(const PackingSolution& solution) {
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < solution.steps.size(); ++i) {
        const PlacedItem& p = solution.steps[i];
        nlohmann::json s = {{"index", i},
                            {"item_name", p.spec.name},
                            {"rotation_type", static_cast<int>(p.rotation)},
                            {"x", round6(p.position.x)},
                            {"y", round6(p.position.y)},
                            {"z", round6(p.position.z)},
                            {"rot_depth", round6(p.rot_depth)},
                            {"rot_width", round6(p.rot_width)},
                            {"rot_height", round6(p.rot_height)},
                            {"true_height", round6(p.true_height)},
                            {"true_compression", round6(p.true_compression)},
                            {"top_load", round6(p.top_load)},
                            {"instance_index", p.spec.instance_index},
                            {"item", item_fields_to_json(p.spec)}};
        s["supported_by"] = p.under ? nlohmann::json(*p.under) : nlohmann::json(nullptr);
        steps.push_back(std::move(s));
    }
    nlohmann::json unpacked = nlohmann::json::array();
    for (const ItemSpec& item : solution.unpacked) {
        nlohmann::json rec = item_fields_to_json(item);
        rec["instance_index"] = item.instance_index;
        unpacked.push_back(std::move(rec));
    }
    return {{"format_version", kFormatVersion},
            {"bin", bin_to_json(solution.bin)},
            {"compression", solution.compression},
            {"steps", std::move(steps)},
            {"unpacked", std::move(unpacked)},
            {"metrics", metrics_to_json(solution.metrics)}};
}

inline PackingSolution solution_from_json(const nlohmann::json& j) {
    check_format_version(j, "solution");
    PackingSolution sol;
    sol.bin = bin_from_json(require<nlohmann::json>(j, "bin", "solution"), "bin");
    sol.compression = require<bool>(j, "compression", "solution");

    const auto steps = require<nlohmann::json>(j, "steps", "solution");
    if (!steps.is_array()) throw InputError("solution: steps must be an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string ctx = "steps[" + std::to_string(i) + "]";
        const nlohmann::json& s = steps[i];
        PlacedItem p;
        p.spec = item_fields_from_json(require<nlohmann::json>(s, "item", ctx), ctx + ".item");
        p.spec.instance_index = s.value("instance_index", i);
        validate_item(p.spec);
        p.rotation = rotation_from_int(require<int>(s, "rotation_type", ctx));
        p.position = {require<double>(s, "x", ctx), require<double>(s, "y", ctx), require<double>(s, "z", ctx)};
        p.rot_depth = require<double>(s, "rot_depth", ctx);
        p.rot_width = require<double>(s, "rot_width", ctx);
        p.rot_height = require<double>(s, "rot_height", ctx);
        p.true_height = require<double>(s, "true_height", ctx);
        p.true_compression = require<double>(s, "true_compression", ctx);
        p.top_load = s.value("top_load", 0.0);
        if (s.contains("supported_by") && !s.at("supported_by").is_null()) {
            const auto under = require<std::size_t>(s, "supported_by", ctx);
            if (under >= i) throw InputError(ctx + ": supported_by must reference an earlier step");
            p.under = under;
        }
        sol.steps.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < sol.steps.size(); ++i) {
        if (sol.steps[i].under) sol.steps[*sol.steps[i].under].over.push_back(i);
    }

    const auto unpacked = require<nlohmann::json>(j, "unpacked", "solution");
    if (!unpacked.is_array()) throw InputError("solution: unpacked must be an array");
    for (std::size_t i = 0; i < unpacked.size(); ++i) {
        const std::string ctx = "unpacked[" + std::to_string(i) + "]";
        ItemSpec item = item_fields_from_json(unpacked[i], ctx);
        item.instance_index = unpacked[i].value("instance_index", std::size_t{0});
        sol.unpacked.push_back(std::move(item));
    }
    sol.metrics = compute_metrics(sol);
    return sol;
}

inline PackingSolution load_solution(const std::string& path) { return solution_from_json(parse_json_file(path)); }

inline void save_solution(const PackingSolution& solution, const std::string& path) {
    write_text_file(path, dump(solution_to_json(solution)));
}

inline nlohmann::json comparison_to_json(const std::vector<ComparisonRow>& rows, const std::string& label) {
    nlohmann::json out_rows = nlohmann::json::array();
    for (const ComparisonRow& r : rows) {
        out_rows.push_back({{"bin", bin_to_json(r.bin)},
                            {"with_compression", metrics_to_json(r.with_compression)},
                            {"without_compression", metrics_to_json(r.without_compression)},
                            {"delta",
                             {{"utilization", round6(r.utilization_delta())},
                              {"item_count", r.item_count_delta()},
                              {"initial_volume", round6(r.initial_volume_delta())},
                              {"true_volume", round6(r.true_volume_delta())}}}});
    }
    return {{"format_version", kFormatVersion},
            {"label", label},
            {"rows", std::move(out_rows)},
            {"summary", format_comparison(rows)}};
}

}  // namespace dvpack
