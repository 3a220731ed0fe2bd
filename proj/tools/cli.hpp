#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dvpack/dvpack.hpp"

namespace dvpack::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kInputError = 2 };

// Solution files store 6 decimals, so re-checking them needs a looser tolerance.
inline constexpr double kFileTolerance = 1e-5;

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// "Small bin" answers to "small" and "small bin".
inline std::string bin_key(const std::string& name) {
    std::string key = lower(name);
    const std::string suffix = " bin";
    if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
        key.resize(key.size() - suffix.size());
    }
    return key;
}

inline const BinSpec& resolve_bin(const Instance& inst, const std::string& wanted) {
    for (const BinSpec& bin : inst.bins) {
        if (bin_key(bin.name) == bin_key(wanted) || lower(bin.name) == lower(wanted)) return bin;
    }
    std::string valid;
    for (const BinSpec& bin : inst.bins) valid += (valid.empty() ? "" : ", ") + bin_key(bin.name);
    throw InputError("unknown bin '" + wanted + "'; valid bins: " + valid);
}

struct InstanceSource {
    std::string path;
    std::string builtin;
    std::string config_path;
    std::uint64_t seed = 0;
};

inline Instance resolve_instance(const InstanceSource& src) {
    if (!src.path.empty()) return load_instance(src.path);
    if (src.builtin == "catalog") return catalog_instance();
    if (src.builtin == "random") {
        const GeneratorConfig cfg =
            src.config_path.empty() ? GeneratorConfig{} : config_from_json(parse_json_file(src.config_path));
        return random_instance(cfg, src.seed);
    }
    throw InputError("no instance given: use --instance PATH or --builtin catalog|random");
}

inline void add_source_options(CLI::App* cmd, InstanceSource& src) {
    auto* path = cmd->add_option("--instance", src.path, "Instance file");
    auto* builtin = cmd->add_option("--builtin", src.builtin, "Built-in instance")
                        ->check(CLI::IsMember({"catalog", "random"}));
    path->excludes(builtin);
    cmd->add_option("--config", src.config_path, "Generator config for --builtin random");
    cmd->add_option("--seed", src.seed, "Seed for --builtin random");
}

inline int cmd_pack(const InstanceSource& src, const std::string& bin_name, bool compression,
                    const std::string& output, std::ostream& out) {
    const Instance inst = resolve_instance(src);
    const BinSpec& bin = resolve_bin(inst, bin_name);
    const PackingSolution sol = pack_bin(inst.items, bin, compression);
    save_solution(sol, output);
    out << bin.name << " (compression " << (compression ? "on" : "off") << "): " << sol.metrics.item_count
        << " items packed, " << sol.unpacked.size() << " unpacked, utilization " << sol.metrics.utilization
        << ", initial volume " << sol.metrics.initial_volume << "\n";
    return kOk;
}

inline int cmd_compare(const InstanceSource& src, const std::vector<std::string>& bin_names,
                       const std::string& output, const std::string& summary_path, std::ostream& out) {
    const Instance inst = resolve_instance(src);
    std::vector<BinSpec> bins;
    if (bin_names.empty()) {
        bins = inst.bins;
    } else {
        for (const std::string& name : bin_names) bins.push_back(resolve_bin(inst, name));
    }
    const auto rows = compare_compression(inst, bins);
    write_text_file(output, dump(comparison_to_json(rows, inst.label)));
    const std::string summary = format_comparison(rows);
    if (!summary_path.empty()) write_text_file(summary_path, summary);
    out << summary;
    return kOk;
}

inline int cmd_validate(const std::string& path, bool prefixes, std::ostream& out) {
    const PackingSolution sol = load_solution(path);
    const auto violations = validate_solution(sol, kFileTolerance);
    for (const Violation& v : violations) out << describe(v) << "\n";
    if (!violations.empty()) return kValidationFailure;
    if (prefixes) {
        if (const auto k = first_infeasible_prefix(sol, kFileTolerance)) {
            out << "prefix: first " << *k << " steps are infeasible\n";
            return kValidationFailure;
        }
    }
    out << "ok: " << sol.steps.size() << " steps, no violations\n";
    return kOk;
}

inline int cmd_generate(const std::string& config_path, std::uint64_t seed, const std::string& output,
                        std::ostream& out) {
    const GeneratorConfig cfg =
        config_path.empty() ? GeneratorConfig{} : config_from_json(parse_json_file(config_path));
    const Instance inst = random_instance(cfg, seed);
    save_instance(inst, output);
    out << "wrote " << inst.items.size() << " items (" << inst.bins.size() << " bins) to " << output << "\n";
    return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Compression-aware 3D bin packing for deformable items"};
    app.require_subcommand(1);

    InstanceSource pack_src;
    std::string pack_bin_name, pack_output, compression = "on";
    auto* pack = app.add_subcommand("pack", "Pack one bin and write the step-ordered solution");
    add_source_options(pack, pack_src);
    pack->add_option("--bin", pack_bin_name, "Bin name (small, medium, large, larger)")->required();
    pack->add_option("--compression", compression, "on|off")->check(CLI::IsMember({"on", "off"}));
    pack->add_option("--output,-o", pack_output, "Solution file")->required();

    InstanceSource cmp_src;
    std::vector<std::string> cmp_bins;
    std::string cmp_output, cmp_summary;
    auto* compare = app.add_subcommand("compare", "Run every bin with and without compression");
    add_source_options(compare, cmp_src);
    compare->add_option("--bins", cmp_bins, "Restrict to these bins");
    compare->add_option("--output,-o", cmp_output, "Report file")->required();
    compare->add_option("--summary", cmp_summary, "Also write the plain-text summary here");

    std::string validate_path;
    bool validate_prefixes = false;
    auto* validate = app.add_subcommand("validate", "Check a solution file against the loading constraints");
    validate->add_option("solution", validate_path, "Solution file")->required();
    validate->add_flag("--prefixes", validate_prefixes, "Also check every prefix of the loading sequence");

    std::string gen_config, gen_output;
    std::uint64_t gen_seed = 0;
    auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
    generate->add_option("--config", gen_config, "Generator config file");
    generate->add_option("--seed", gen_seed, "Random seed")->required();
    generate->add_option("--output,-o", gen_output, "Instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*pack) return cmd_pack(pack_src, pack_bin_name, compression == "on", pack_output, out);
        if (*compare) return cmd_compare(cmp_src, cmp_bins, cmp_output, cmp_summary, out);
        if (*validate) return cmd_validate(validate_path, validate_prefixes, out);
        if (*generate) return cmd_generate(gen_config, gen_seed, gen_output, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace dvpack::cli
