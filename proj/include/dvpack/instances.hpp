#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dvpack/errors.hpp"
#include "dvpack/model.hpp"

namespace dvpack {

inline constexpr int kFormatVersion = 1;

struct Instance {
    std::vector<BinSpec> bins;
    std::vector<ItemSpec> items;  // quantities unrolled, instance_index = position
    std::optional<std::uint64_t> seed;
    std::string label;

    bool operator==(const Instance&) const = default;
};

inline std::vector<BinSpec> catalog_bins() {
    return {
        {"Small bin", 40, 40, 35, 55},
        {"Medium bin", 50, 45, 40, 65},
        {"Large bin", 60, 50, 45, 80},
        {"Larger bin", 70, 65, 60, 100},
    };
}

struct ItemKind {
    std::string name;
    double depth, width, height, weight;
    ClassId class_id;
    int quantity;
};

inline std::vector<ItemKind> catalog_kinds() {
    return {
        {"Chinese Cabbage", 25, 12, 12, 1.2, ClassId::GreenVegetable, 50},
        {"Little Cabbage", 18, 8, 8, 0.8, ClassId::GreenVegetable, 50},
        {"Rice", 45, 40, 8, 5, ClassId::Rice, 5},
        {"Millet", 35, 30, 8, 2.5, ClassId::Rice, 5},
        {"Bebe Pumpkin", 10, 10, 7, 0.3, ClassId::MelonFruit, 50},
        {"Potato", 12, 5, 5, 0.1, ClassId::MelonFruit, 50},
        {"Eggs", 30, 20, 20, 1.6, ClassId::Other, 5},
    };
}

inline void append_kind(std::vector<ItemSpec>& items, const ItemKind& kind, const ItemClass& cls) {
    for (int q = 0; q < kind.quantity; ++q) {
        items.push_back({kind.name, kind.depth, kind.width, kind.height, kind.weight, cls, items.size()});
    }
}

/// The fresh-food benchmark: four bin sizes and seven item kinds (215 items).
inline Instance catalog_instance() {
    Instance inst;
    inst.bins = catalog_bins();
    inst.label = "catalog";
    for (const ItemKind& kind : catalog_kinds()) {
        append_kind(inst.items, kind, ItemClass::standard(kind.class_id));
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Random instances

struct GeneratorConfig {
    int kind_count = 7;
    int min_quantity = 1;
    int max_quantity = 20;
    int min_dim = 5;
    int max_dim = 45;
    double min_weight = 0.1;
    double max_weight = 5.0;
    std::array<double, kClassCount> class_mix = {1.0, 1.0, 1.0, 1.0};
    std::vector<BinSpec> bins = catalog_bins();
};

inline void validate_config(const GeneratorConfig& cfg) {
    if (cfg.kind_count < 1) throw ConfigError("kind_count must be >= 1");
    if (cfg.min_quantity < 1 || cfg.max_quantity < cfg.min_quantity) {
        throw ConfigError("quantity range must satisfy 1 <= min_quantity <= max_quantity");
    }
    if (cfg.min_dim < 1 || cfg.max_dim < cfg.min_dim) {
        throw ConfigError("dimension range must satisfy 1 <= min_dim <= max_dim");
    }
    if (!(cfg.min_weight > 0.0) || cfg.max_weight < cfg.min_weight) {
        throw ConfigError("weight range must satisfy 0 < min_weight <= max_weight");
    }
    double total = 0.0;
    for (double w : cfg.class_mix) {
        if (!(w >= 0.0)) throw ConfigError("class_mix weights must be non-negative");
        total += w;
    }
    if (!(total > 0.0)) throw ConfigError("class_mix must have a positive weight");
    if (cfg.bins.empty()) throw ConfigError("at least one bin is required");
    for (const BinSpec& bin : cfg.bins) {
        try {
            validate_bin(bin);
        } catch (const InputError& e) {
            throw ConfigError(e.what());
        }
    }
}

inline Instance random_instance(const GeneratorConfig& cfg, std::uint64_t seed) {
    validate_config(cfg);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> quantity(cfg.min_quantity, cfg.max_quantity);
    std::uniform_int_distribution<int> dim(cfg.min_dim, cfg.max_dim);
    std::uniform_real_distribution<double> weight(cfg.min_weight, cfg.max_weight);
    std::discrete_distribution<int> cls(cfg.class_mix.begin(), cfg.class_mix.end());

    Instance inst;
    inst.bins = cfg.bins;
    inst.seed = seed;
    inst.label = "random-" + std::to_string(seed);
    for (int k = 0; k < cfg.kind_count; ++k) {
        ItemKind kind;
        kind.name = "Item-" + std::to_string(k + 1);
        kind.depth = dim(rng);
        kind.width = dim(rng);
        kind.height = dim(rng);
        // Two decimals keeps files exact under the 6-decimal output format.
        kind.weight = std::max(cfg.min_weight, std::round(weight(rng) * 100.0) / 100.0);
        kind.class_id = static_cast<ClassId>(cls(rng));
        kind.quantity = quantity(rng);
        append_kind(inst.items, kind, ItemClass::standard(kind.class_id));
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Serialization

inline double round6(double v) {
    const double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;  // no "-0.0" in output
}

template <typename T>
T require(const nlohmann::json& obj, const char* key, const std::string& context) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(context + ": missing field '" + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(context + ": field '" + key + "' has the wrong type");
    }
}

inline nlohmann::json bin_to_json(const BinSpec& bin) {
    return {{"name", bin.name},
            {"depth", round6(bin.depth)},
            {"width", round6(bin.width)},
            {"height", round6(bin.height)},
            {"max_weight", round6(bin.max_weight)}};
}

inline BinSpec bin_from_json(const nlohmann::json& j, const std::string& context) {
    BinSpec bin;
    bin.name = require<std::string>(j, "name", context);
    bin.depth = require<double>(j, "depth", context);
    bin.width = require<double>(j, "width", context);
    bin.height = require<double>(j, "height", context);
    bin.max_weight = require<double>(j, "max_weight", context);
    validate_bin(bin);
    return bin;
}

inline nlohmann::json item_fields_to_json(const ItemSpec& item) {
    return {{"name", item.name},
            {"depth", round6(item.depth)},
            {"width", round6(item.width)},
            {"height", round6(item.height)},
            {"weight", round6(item.weight)},
            {"class_id", static_cast<int>(item.item_class.id)},
            {"compressibility", round6(item.item_class.compressibility)},
            {"max_compression_ratio", round6(item.item_class.max_compression_ratio)}};
}

// Compression parameters default to the standard values of the class.
inline ItemSpec item_fields_from_json(const nlohmann::json& j, const std::string& context) {
    ItemSpec item;
    item.name = require<std::string>(j, "name", context);
    const std::string ctx = context + " ('" + item.name + "')";
    item.depth = require<double>(j, "depth", ctx);
    item.width = require<double>(j, "width", ctx);
    item.height = require<double>(j, "height", ctx);
    item.weight = require<double>(j, "weight", ctx);
    try {
        item.item_class = ItemClass::standard(class_id_from_int(require<int>(j, "class_id", ctx)));
    } catch (const InputError& e) {
        throw InputError(ctx + ": " + e.what());
    }
    if (j.contains("compressibility")) item.item_class.compressibility = require<double>(j, "compressibility", ctx);
    if (j.contains("max_compression_ratio")) {
        item.item_class.max_compression_ratio = require<double>(j, "max_compression_ratio", ctx);
    }
    return item;
}

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json bins = nlohmann::json::array();
    for (const BinSpec& bin : inst.bins) bins.push_back(bin_to_json(bin));

    // Consecutive identical records collapse back into one entry with a quantity.
    nlohmann::json items = nlohmann::json::array();
    for (std::size_t i = 0; i < inst.items.size();) {
        std::size_t j = i + 1;
        auto same = [&](const ItemSpec& a, const ItemSpec& b) {
            return a.name == b.name && a.depth == b.depth && a.width == b.width && a.height == b.height &&
                   a.weight == b.weight && a.item_class == b.item_class;
        };
        while (j < inst.items.size() && same(inst.items[i], inst.items[j])) ++j;
        nlohmann::json rec = item_fields_to_json(inst.items[i]);
        rec["quantity"] = j - i;
        items.push_back(std::move(rec));
        i = j;
    }

    nlohmann::json out = {{"format_version", kFormatVersion}, {"label", inst.label}};
    out["seed"] = inst.seed ? nlohmann::json(*inst.seed) : nlohmann::json(nullptr);
    out["bins"] = std::move(bins);
    out["items"] = std::move(items);
    return out;
}

inline void check_format_version(const nlohmann::json& j, const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": top level must be an object");
    const int version = require<int>(j, "format_version", what);
    if (version != kFormatVersion) {
        throw InputError(what + ": unsupported format_version " + std::to_string(version));
    }
}

inline Instance instance_from_json(const nlohmann::json& j) {
    check_format_version(j, "instance");
    Instance inst;
    inst.label = j.value("label", std::string{});
    if (j.contains("seed") && !j.at("seed").is_null()) {
        inst.seed = require<std::uint64_t>(j, "seed", "instance");
    }
    const auto bins = require<nlohmann::json>(j, "bins", "instance");
    const auto items = require<nlohmann::json>(j, "items", "instance");
    if (!bins.is_array() || !items.is_array()) throw InputError("instance: bins and items must be arrays");

    for (std::size_t b = 0; b < bins.size(); ++b) {
        inst.bins.push_back(bin_from_json(bins[b], "bins[" + std::to_string(b) + "]"));
    }
    for (std::size_t r = 0; r < items.size(); ++r) {
        const std::string context = "items[" + std::to_string(r) + "]";
        ItemSpec proto = item_fields_from_json(items[r], context);
        const long long quantity = require<long long>(items[r], "quantity", context);
        if (quantity < 1) throw InputError(context + " ('" + proto.name + "'): quantity must be >= 1");
        for (long long q = 0; q < quantity; ++q) {
            proto.instance_index = inst.items.size();
            validate_item(proto);
            inst.items.push_back(proto);
        }
    }
    return inst;
}

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("parse error in '" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline Instance load_instance(const std::string& path) { return instance_from_json(parse_json_file(path)); }

inline void save_instance(const Instance& inst, const std::string& path) {
    write_text_file(path, dump(instance_to_json(inst)));
}

inline GeneratorConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("generator config must be an object");
    GeneratorConfig cfg;
    try {
        cfg.kind_count = j.value("kind_count", cfg.kind_count);
        cfg.min_quantity = j.value("min_quantity", cfg.min_quantity);
        cfg.max_quantity = j.value("max_quantity", cfg.max_quantity);
        cfg.min_dim = j.value("min_dim", cfg.min_dim);
        cfg.max_dim = j.value("max_dim", cfg.max_dim);
        cfg.min_weight = j.value("min_weight", cfg.min_weight);
        cfg.max_weight = j.value("max_weight", cfg.max_weight);
        if (j.contains("class_mix")) {
            const auto mix = j.at("class_mix").get<std::vector<double>>();
            if (mix.size() != kClassCount) throw ConfigError("class_mix must have exactly 4 weights");
            std::copy(mix.begin(), mix.end(), cfg.class_mix.begin());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("generator config: ") + e.what());
    }
    if (j.contains("bins")) {
        cfg.bins.clear();
        for (std::size_t b = 0; b < j.at("bins").size(); ++b) {
            try {
                cfg.bins.push_back(bin_from_json(j.at("bins")[b], "bins[" + std::to_string(b) + "]"));
            } catch (const InputError& e) {
                throw ConfigError(e.what());
            }
        }
    }
    validate_config(cfg);
    return cfg;
}

}  // namespace dvpack
