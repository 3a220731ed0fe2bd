// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dvpack/dvpack.hpp"
#include "micro_instances.hpp"

using namespace dvpack;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& text) { notes.push_back(text); }
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

bool within_ulps(double a, double b, int ulps = 4) {
    if (a == b) return true;
    double x = a;
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, b);
    return x == b;
}

// Independent true volume: footprint times post-compression height.
double true_volume_of(const PackingSolution& sol) {
    double v = 0.0;
    for (const PlacedItem& p : sol.steps) v += p.rot_depth * p.rot_width * p.true_height;
    return v;
}

bool metric_identity(const PackingSolution& sol) {
    const double tv = true_volume_of(sol);
    const double lhs = sol.metrics.utilization * sol.bin.volume();
    return std::abs(lhs - tv) <= 1e-6 * std::max(1.0, std::abs(tv));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "dvpack");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream sink;
    return cli::run(static_cast<int>(argv.size()), argv.data(), sink, sink);
}

ItemSpec spec(std::string name, double d, double w, double h, double m, ClassId cls, std::size_t idx) {
    return {std::move(name), d, w, h, m, ItemClass::standard(cls), idx};
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, Outcome>> results;
    std::vector<PackingSolution> produced;

    const Instance catalog = catalog_instance();
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = compare_compression(catalog, catalog.bins);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const BinSpec& bin : catalog.bins) {
        produced.push_back(pack_bin(catalog.items, bin, true));
        produced.push_back(pack_bin(catalog.items, bin, false));
    }

    {
        Outcome o;
        for (const auto& r : rows) {
            o.check(r.with_compression.utilization >= r.without_compression.utilization,
                    r.bin.name + " utilization on >= off");
            o.note(r.bin.name + ": on " + fmt("%.4f", r.with_compression.utilization) + " off " +
                   fmt("%.4f", r.without_compression.utilization) + " delta " + fmt("%+.4f", r.utilization_delta()));
        }
        o.check(seconds < 10.0, "runtime under 10 s");
        o.note("runtime " + fmt("%.3f", seconds) + " s");
        results.emplace_back("1 compression dominance (utilization)", o);
    }

    {
        Outcome o;
        for (const auto& r : rows) {
            o.check(r.with_compression.item_count >= r.without_compression.item_count,
                    r.bin.name + " item count on >= off");
            o.note(r.bin.name + ": on " + std::to_string(r.with_compression.item_count) + " off " +
                   std::to_string(r.without_compression.item_count));
        }
        results.emplace_back("2 item-count dominance", o);
    }

    {
        Outcome o;
        const auto& small = rows[0].with_compression;
        const auto& medium = rows[1].with_compression;
        const auto& larger = rows[3].with_compression;
        o.check(std::abs(small.utilization - 0.855) <= 0.05, "Small utilization within 0.855 +/- 0.05");
        o.check(std::abs(static_cast<double>(small.item_count) - 28.0) <= 5.0, "Small item count within 28 +/- 5");
        o.check(std::abs(medium.utilization - 0.892) <= 0.05, "Medium utilization within 0.892 +/- 0.05");
        o.check(std::abs(larger.utilization - 0.859) <= 0.05, "Larger utilization within 0.859 +/- 0.05");
        o.note("Small " + fmt("%.4f", small.utilization) + " with " + std::to_string(small.item_count) +
               " items, Medium " + fmt("%.4f", medium.utilization) + ", Larger " + fmt("%.4f", larger.utilization) +
               " (Large excluded)");
        results.emplace_back("3 reference ballpark", o);
    }

    // Criterion 7 solutions also feed the metric identity check.
    std::size_t clean_runs = 0, total_runs = 0;
    Outcome validator;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Instance inst = random_instance({}, seed);
        for (const BinSpec& bin : inst.bins) {
            for (bool on : {true, false}) {
                PackingSolution sol = pack_bin(inst.items, bin, on);
                ++total_runs;
                bool ok = validate_solution(sol).empty();
                for (std::size_t k = 1; ok && k <= sol.steps.size(); ++k) ok = validate_steps(sol, k).empty();
                validator.check(ok, "seed " + std::to_string(seed) + " " + bin.name + (on ? " on" : " off"));
                clean_runs += ok;
                produced.push_back(std::move(sol));
            }
        }
    }
    validator.note(std::to_string(clean_runs) + "/" + std::to_string(total_runs) + " runs clean on every prefix");

    {
        Outcome o;
        std::size_t bad = 0;
        for (const auto& sol : produced) bad += !metric_identity(sol);
        o.check(bad == 0, std::to_string(bad) + " solutions break utilization * V = true volume");
        o.note(std::to_string(produced.size()) + " solutions checked");
        PackingSolution table;
        table.bin = {"Small bin", 40, 40, 35, 55};
        PlacedItem slab;
        slab.spec = spec("slab", 40, 40, 35, 1.0, ClassId::GreenVegetable, 0);
        slab.rot_depth = 40;
        slab.rot_width = 40;
        slab.rot_height = 35;
        slab.true_height = 47881.35 / 1600.0;
        table.steps.push_back(slab);
        const Metrics m = compute_metrics(table);
        o.check(std::abs(m.utilization - 0.855) <= 5e-4, "47881.35 / 56000 = 0.855");
        o.note("47881.35 / 56000 = " + fmt("%.6f", m.utilization));
        results.emplace_back("4 metric identity", o);
    }

    {
        Outcome o;
        o.check(within_ulps(effective_compression_ratio(0.1, 0.3, 1.2, 2.4), 0.2), "c* (0.1, 0.3, 1.2, 2.4) = 0.2");
        o.check(within_ulps(effective_compression_ratio(0.1, 0.3, 0.8, 8.0), 0.3), "c* capped at r = 0.3");
        o.check(effective_compression_ratio(0.7, 0.9, 2.0, 0.0) == 0.0, "zero load gives c* = 0");
        o.check(effective_compression_ratio(0.0, 0.0, 1.6, 10.0) == 0.0, "incompressible class gives c* = 0");
        o.check(within_ulps(true_height(12, 0.2), 9.6), "h*(12, 0.2) = 9.6");
        o.check(true_height(12, 0.0) == 12.0, "h*(12, 0) = 12");
        o.check(within_ulps(true_height(8, 0.3), 5.6), "h*(8, 0.3) = 5.6");

        // A (h 12, cabbage class, 1.2 kg) carrying 1.2 kg: c* = 0.1, h* = 10.8, B sits at 10.8.
        std::vector<PlacedItem> col(2);
        for (std::size_t i = 0; i < 2; ++i) {
            col[i].spec = spec("cab", 10, 10, 12, 1.2, ClassId::GreenVegetable, i);
            col[i].rot_depth = col[i].rot_width = 10;
            col[i].rot_height = col[i].true_height = 12;
        }
        col[1].under = 0;
        col[0].over = {1};
        col[0].top_load = 1.2;
        recompute_column(col, 0);
        o.check(within_ulps(col[0].true_height, 10.8) && within_ulps(col[1].position.z, 10.8),
                "column example A h* = 10.8, B.z = 10.8");
        o.note("4-ulp comparison for the worked examples");
        results.emplace_back("5 compression equations", o);
    }

    {
        Outcome o;
        std::vector<std::array<double, 3>> perms;
        std::array<double, 3> p{2, 3, 5};
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::array<double, 3>> got;
        for (RotationType rt : kAllRotations) got.push_back(rotate_dims({2, 3, 5}, rt).as_array());
        std::sort(got.begin(), got.end());
        o.check(got == perms, "six rotations of (2,3,5) are the six permutations");

        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> dim(0.5, 100.0);
        std::size_t bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const Dims d{dim(rng), dim(rng), dim(rng)};
            auto sorted_in = d.as_array();
            std::sort(sorted_in.begin(), sorted_in.end());
            for (RotationType rt : kAllRotations) {
                const Dims r = rotate_dims(d, rt);
                auto sorted_out = r.as_array();
                std::sort(sorted_out.begin(), sorted_out.end());
                bad += sorted_out != sorted_in || std::abs(r.volume() - d.volume()) > 1e-9 * d.volume();
            }
        }
        o.check(bad == 0, std::to_string(bad) + " volume-changing rotations");
        o.note("1000 random dims x 6 rotations");
        results.emplace_back("6 rotation completeness", o);
    }

    results.emplace_back("7 validator-clean property", validator);

    {
        Outcome o;
        int strictly_better = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto m = dvpack::testing::micro_instance(seed);
            for (bool on : {true, false}) {
                const double heuristic = pack_bin(m.items, m.bin, on).metrics.initial_volume;
                const OracleResult best = oracle_pack(m.items, m.bin, on);
                const std::string tag = "seed " + std::to_string(seed) + (on ? " on" : " off");
                o.check(heuristic <= best.best_initial_volume + 1e-9, tag + " heuristic above oracle");
                o.check(validate_solution(best.arrangement).empty() && !first_infeasible_prefix(best.arrangement),
                        tag + " oracle arrangement not clean");
                strictly_better += best.best_initial_volume > heuristic + 1e-9;
            }
        }
        o.note("oracle strictly better in " + std::to_string(strictly_better) + "/200 runs");

        const std::vector<ItemSpec> pair{spec("A", 10, 10, 12, 1.2, ClassId::GreenVegetable, 0),
                                         spec("B", 10, 10, 2, 1.2, ClassId::Other, 1)};
        const BinSpec short_bin{"short", 10, 10, 13, 55};
        const auto soft = pack_bin(pair, short_bin, true);
        const auto rigid = pack_bin(pair, short_bin, false);
        o.check(soft.steps.size() == 2 && rigid.steps.size() == 1, "H=13 pair packs both items iff compression");
        if (soft.steps.size() == 2) {
            o.check(within_ulps(soft.steps[0].true_height, 10.8) && within_ulps(soft.steps[1].top(), 12.8),
                    "H=13 pair geometry 10.8 / 12.8");
        }
        results.emplace_back("8 oracle bound", o);
    }

    {
        Outcome o;
        const auto dir = std::filesystem::temp_directory_path() / "dvpack_acceptance";
        std::filesystem::create_directories(dir);
        auto same = [&](const std::vector<std::string>& args_a, const std::vector<std::string>& args_b,
                        const std::filesystem::path& a, const std::filesystem::path& b, const std::string& what) {
            const bool ok = run_cli(args_a) == 0 && run_cli(args_b) == 0 && slurp(a) == slurp(b) && !slurp(a).empty();
            o.check(ok, what);
        };
        for (const std::string bin : {"small", "medium", "large", "larger"}) {
            for (const std::string mode : {"on", "off"}) {
                const auto a = dir / (bin + mode + "_a.json"), b = dir / (bin + mode + "_b.json");
                same({"pack", "--builtin", "catalog", "--bin", bin, "--compression", mode, "-o", a.string()},
                     {"pack", "--builtin", "catalog", "--bin", bin, "--compression", mode, "-o", b.string()}, a, b,
                     "catalog " + bin + " " + mode);
            }
        }
        for (const std::string seed : {"3", "77"}) {
            const auto a = dir / ("random" + seed + "_a.json"), b = dir / ("random" + seed + "_b.json");
            same({"pack", "--builtin", "random", "--seed", seed, "--bin", "medium", "-o", a.string()},
                 {"pack", "--builtin", "random", "--seed", seed, "--bin", "medium", "-o", b.string()}, a, b,
                 "random seed " + seed);
            const auto ga = dir / ("gen" + seed + "_a.json"), gb = dir / ("gen" + seed + "_b.json");
            same({"generate", "--seed", seed, "-o", ga.string()}, {"generate", "--seed", seed, "-o", gb.string()}, ga,
                 gb, "generate seed " + seed);
        }
        const auto ca = dir / "cmp_a.json", cb = dir / "cmp_b.json";
        same({"compare", "--builtin", "catalog", "-o", ca.string()}, {"compare", "--builtin", "catalog", "-o", cb.string()},
             ca, cb, "compare report");
        o.note("13 file pairs compared byte for byte");
        results.emplace_back("9 determinism", o);
    }

    int failed = 0;
    for (const auto& [name, o] : results) {
        std::printf("[%s] %s\n", o.pass ? "PASS" : "FAIL", name.c_str());
        for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
