// Command line front end: parse, simulate, splice, bill, report, detect, mix.
// Exit codes: 0 success, 2 circuit/CSV parse error, 3 configuration error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsplice/analytics.hpp"
#include "qsplice/bench.hpp"
#include "qsplice/circuit.hpp"
#include "qsplice/guard.hpp"
#include "qsplice/metrics.hpp"
#include "qsplice/money.hpp"
#include "qsplice/pricing.hpp"
#include "qsplice/report.hpp"
#include "qsplice/sim.hpp"
#include "qsplice/splice.hpp"
#include "qsplice/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoiseFlags {
    bool noiseless = false;
    std::string overrides;

    qsplice::NoiseModel resolve() const {
        qsplice::NoiseModel noise =
            noiseless ? qsplice::NoiseModel::noiseless() : qsplice::NoiseModel::defaults();
        if (overrides.empty()) return noise;
        size_t pos = 0;
        while (pos <= overrides.size()) {
            size_t comma = overrides.find(',', pos);
            std::string item = overrides.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            size_t eq = item.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw ConfigError("--noise expects K=V pairs, got '" + item + "'");
            }
            std::string key = item.substr(0, eq);
            std::string val = item.substr(eq + 1);
            char* end = nullptr;
            double v = std::strtod(val.c_str(), &end);
            if (end != val.c_str() + val.size() || val.empty()) {
                throw ConfigError("--noise " + key + ": bad value '" + val + "'");
            }
            if (key == "eps_read") {
                noise.eps_read_1to0 = noise.eps_read_0to1 = v;
            } else if (key == "eps_read_1to0") {
                noise.eps_read_1to0 = v;
            } else if (key == "eps_read_0to1") {
                noise.eps_read_0to1 = v;
            } else if (key == "eps_condx") {
                noise.eps_condx = v;
            } else if (key == "apply_readout_to_state") {
                noise.apply_readout_to_state = v != 0.0;
            } else {
                throw ConfigError("--noise: unknown key '" + key + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return noise;
    }
};

qsplice::Catalog load_catalog(const std::string& path) {
    if (path.empty()) return qsplice::builtin_catalog();
    return qsplice::read_catalog_file(path);
}

const qsplice::PricingModel& find_model(const qsplice::Catalog& catalog,
                                        const std::string& name) {
    const qsplice::PricingModel* m = catalog.find(name);
    if (!m) throw ConfigError("catalog has no entry named '" + name + "'");
    return *m;
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void print_census(const qsplice::Circuit& c) {
    qsplice::GateCensus g = qsplice::census(c);
    std::cout << "width=" << c.width << " ops=" << c.ops.size() << " 1q=" << g.n_1q
              << " 2q=" << g.n_2q << " meas=" << g.n_meas << " reset=" << g.n_reset
              << " depth=" << g.depth << "\n";
}

int cmd_parse(const std::string& file) {
    qsplice::Circuit c = qsplice::parse_file(file);
    auto violations = qsplice::validate(c);
    if (!violations.empty()) {
        std::cerr << qsplice::violations_to_string(violations);
        return kExitParse;
    }
    std::cout << "ok " << c.label << "\n";
    print_census(c);
    return kExitOk;
}

int cmd_simulate(const std::string& file, uint64_t shots, uint64_t seed, const NoiseFlags& noise,
                 const std::string& out_dir, const std::string& map_file) {
    if (shots < 1) throw ConfigError("--shots must be >= 1");
    qsplice::Circuit c = qsplice::parse_file(file);
    auto violations = qsplice::validate(c);
    if (!violations.empty()) {
        std::cerr << qsplice::violations_to_string(violations);
        return kExitParse;
    }
    qsplice::CountsTable table = qsplice::run_shots(c, noise.resolve(), shots, seed);
    if (out_dir.empty()) {
        std::cout << qsplice::counts_to_text(table);
    } else {
        ensure_out_dir(out_dir);
        std::string path = join_path(out_dir, c.label + ".counts");
        qsplice::write_counts_file(table, path);
        std::cout << path << "\n";
    }
    if (!map_file.empty()) {
        qsplice::SpliceMap map = qsplice::read_splice_map_file(map_file);
        auto parts = qsplice::split_counts(table, map);
        if (out_dir.empty()) {
            for (size_t i = 0; i < parts.size(); i++) {
                std::cout << "# part " << i << " " << map.parts[i].label << "\n"
                          << qsplice::counts_to_text(parts[i]);
            }
        } else {
            for (size_t i = 0; i < parts.size(); i++) {
                std::string path = join_path(out_dir, "part" + std::to_string(i) + "_" +
                                                          map.parts[i].label + ".counts");
                qsplice::write_counts_file(parts[i], path);
                std::cout << path << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_splice_built(qsplice::SpliceSpec spec, const std::string& out_dir,
                     const std::string& name) {
    qsplice::SpliceResult result = qsplice::splice(spec);
    result.circuit.label = name;
    if (out_dir.empty()) {
        std::cout << qsplice::serialize(result.circuit);
        std::cout << qsplice::splice_map_to_text(result.map);
    } else {
        ensure_out_dir(out_dir);
        std::string qct = join_path(out_dir, name + ".qct");
        std::string map = join_path(out_dir, name + ".map");
        qsplice::write_circuit_file(result.circuit, qct);
        qsplice::write_splice_map_file(result.map, map);
        std::cout << qct << "\n" << map << "\n";
    }
    return kExitOk;
}

int cmd_splice(const std::vector<std::string>& files, uint32_t resets, const std::string& out_dir,
               const std::string& name) {
    qsplice::SpliceSpec spec;
    spec.k_resets = resets;
    for (const auto& f : files) {
        spec.parts.push_back(qsplice::parse_file(f));
    }
    return cmd_splice_built(std::move(spec), out_dir, name);
}

int cmd_bill(const std::string& file, const std::string& catalog_path, const std::string& model_name,
             uint64_t shots, std::optional<uint64_t> wall_time, uint64_t parts) {
    qsplice::Catalog catalog = load_catalog(catalog_path);
    const qsplice::PricingModel& model = find_model(catalog, model_name);
    qsplice::Circuit c = qsplice::parse_file(file);
    auto violations = qsplice::validate(c);
    if (!violations.empty()) {
        std::cerr << qsplice::violations_to_string(violations);
        return kExitParse;
    }
    qsplice::TaskReceipt receipt;
    receipt.shots = shots;
    receipt.census = qsplice::census(c);
    receipt.parts = parts;
    if (wall_time) {
        receipt.wall_time_s = *wall_time;
    } else if (std::holds_alternative<qsplice::TimeBased>(model)) {
        qsplice::TimeModel tm(qsplice::default_time_calibration());
        receipt.wall_time_s =
            static_cast<uint64_t>(tm.estimate(static_cast<double>(parts)) + 0.5);
        std::cout << "estimated wall time: " << receipt.wall_time_s << " s\n";
    }
    print_census(c);
    qsplice::Money cost = qsplice::price(model, receipt);
    std::cout << model_name << " cost: " << cost.to_string() << " "
              << qsplice::currency_name(cost.currency) << "\n";
    if (parts > 1 && std::holds_alternative<qsplice::PerTaskPerShot>(model)) {
        qsplice::Money avoided = qsplice::avoided_cost(
            parts, shots, std::get<qsplice::PerTaskPerShot>(model).per_shot);
        std::cout << "avoided per-shot fees for " << parts << " parts: " << avoided.to_string()
                  << " " << qsplice::currency_name(avoided.currency) << "\n";
    }
    return kExitOk;
}

int cmd_report(const std::string& receipts_path, const std::string& catalog_path,
               const std::string& model_name, const std::string& baseline,
               const std::string& out_dir) {
    qsplice::Catalog catalog = load_catalog(catalog_path);
    const qsplice::PricingModel& model = find_model(catalog, model_name);
    qsplice::Money baseline_per_shot =
        qsplice::Money::parse(baseline, qsplice::model_currency(model));
    auto rows = qsplice::read_receipts_file(receipts_path);
    auto priced = qsplice::price_receipts(rows, model, baseline_per_shot);
    std::string csv = qsplice::render_report_csv(priced);
    if (out_dir.empty()) {
        std::cout << csv;
    } else {
        ensure_out_dir(out_dir);
        std::string path = join_path(out_dir, "report.csv");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + path);
        out << csv;
        std::cout << path << "\n";
    }
    return kExitOk;
}

int cmd_detect(const std::string& file, const std::string& catalog_path,
               const std::string& fair_model, const std::string& billed,
               double threshold) {
    qsplice::Circuit c = qsplice::parse_file(file);
    auto violations = qsplice::validate(c);
    if (!violations.empty()) {
        std::cerr << qsplice::violations_to_string(violations);
        return kExitParse;
    }
    std::vector<qsplice::AbuseFinding> findings = qsplice::detect_full_reset_cuts(c);
    auto reps = qsplice::detect_repetition(c);
    findings.insert(findings.end(), reps.begin(), reps.end());
    if (!billed.empty()) {
        qsplice::Catalog catalog = load_catalog(catalog_path);
        const qsplice::PricingModel& model = find_model(catalog, fair_model);
        if (!std::holds_alternative<qsplice::PerGate>(model)) {
            throw ConfigError("--fair-model must name a per_gate catalog entry");
        }
        const auto& fair = std::get<qsplice::PerGate>(model);
        qsplice::Money billed_money =
            qsplice::Money::parse(billed, fair.per_task.currency);
        auto audits = qsplice::audit(c, billed_money, fair, threshold);
        findings.insert(findings.end(), audits.begin(), audits.end());
    }
    std::cout << qsplice::findings_to_text(findings);
    std::cout << "findings: " << findings.size() << "\n";
    return kExitOk;
}

int cmd_mix(const std::string& preset, uint32_t count, uint64_t seed, const std::string& pool_csv,
            uint32_t resets, const std::string& out_dir, const std::string& name) {
    std::vector<qsplice::BenchSpec> specs;
    if (!preset.empty()) {
        specs = qsplice::preset_mix(preset);
    } else {
        if (count < 1) throw ConfigError("--count must be >= 1 when no --preset is given");
        qsplice::MixSpec mix;
        mix.count = count;
        mix.seed = seed;
        if (pool_csv.empty()) {
            mix.pool = qsplice::default_mix_pool();
        } else {
            size_t pos = 0;
            while (pos <= pool_csv.size()) {
                size_t comma = pool_csv.find(',', pos);
                std::string item = pool_csv.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                mix.pool.push_back(qsplice::bench_kind_from_name(item));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        for (qsplice::BenchKind k : qsplice::generate_mix(mix)) {
            specs.push_back(qsplice::BenchSpec::defaults(k));
        }
    }
    qsplice::SpliceSpec spec;
    spec.k_resets = resets;
    for (const auto& s : specs) {
        spec.parts.push_back(qsplice::build(s));
        std::cout << spec.parts.back().label << "\n";
    }
    std::string label = name.empty() ? (preset.empty() ? "mix" : preset) : name;
    return cmd_splice_built(spec, out_dir, label);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spliced-circuit billing laboratory"};
    app.require_subcommand(1);

    std::string file, out_dir, map_file, catalog_path, model_name, baseline, billed, fair_model;
    std::string preset, pool_csv, mix_name;
    std::vector<std::string> splice_files;
    uint64_t shots = 1000, seed = 1;
    uint32_t resets = 4, count = 8;
    uint64_t mix_seed = 1;
    std::optional<uint64_t> wall_time;
    uint64_t parts = 1;
    double threshold = 0.5;
    NoiseFlags noise;

    auto* p = app.add_subcommand("parse", "parse and validate a circuit file");
    p->add_option("file", file)->required();

    auto* sim = app.add_subcommand("simulate", "run shots and emit a counts table");
    sim->add_option("file", file)->required();
    sim->add_option("--shots", shots);
    sim->add_option("--seed", seed);
    sim->add_flag("--noiseless", noise.noiseless);
    sim->add_option("--noise", noise.overrides,
                    "overrides, e.g. eps_read=0.01,eps_condx=0.002");
    sim->add_option("--out", out_dir);
    sim->add_option("--map", map_file, "splice map sidecar; also emit per-part counts");

    auto* sp = app.add_subcommand("splice", "pack circuits into one submission");
    sp->add_option("files", splice_files)->required()->expected(-1);
    sp->add_option("--resets", resets);
    sp->add_option("--out", out_dir);
    sp->add_option("--name", mix_name);

    auto* bill = app.add_subcommand("bill", "price one circuit under a catalog model");
    bill->add_option("file", file)->required();
    bill->add_option("--catalog", catalog_path);
    bill->add_option("--model", model_name)->required();
    bill->add_option("--shots", shots);
    bill->add_option("--time", wall_time);
    bill->add_option("--parts", parts);

    auto* rep = app.add_subcommand("report", "price receipt rows and emit the report CSV");
    rep->add_option("receipts", file)->required();
    rep->add_option("--catalog", catalog_path);
    rep->add_option("--model", model_name)->default_val("target_machine");
    rep->add_option("--baseline-per-shot", baseline)->default_val("0.0015");
    rep->add_option("--out", out_dir);

    auto* det = app.add_subcommand("detect", "run splice detectors over a circuit");
    det->add_option("file", file)->required();
    det->add_option("--catalog", catalog_path);
    det->add_option("--fair-model", fair_model)->default_val("per_gate_reference");
    det->add_option("--billed", billed, "audit: billed amount to compare to the quote");
    det->add_option("--threshold", threshold);

    auto* mix = app.add_subcommand("mix", "build a spliced benchmark mix");
    mix->add_option("--preset", preset);
    mix->add_option("--count", count);
    mix->add_option("--seed", mix_seed);
    mix->add_option("--pool", pool_csv, "comma-separated benchmark kinds");
    mix->add_option("--resets", resets);
    mix->add_option("--out", out_dir);
    mix->add_option("--name", mix_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (p->parsed()) return cmd_parse(file);
        if (sim->parsed()) return cmd_simulate(file, shots, seed, noise, out_dir, map_file);
        if (sp->parsed()) {
            return cmd_splice(splice_files, resets, out_dir,
                              mix_name.empty() ? "composite" : mix_name);
        }
        if (bill->parsed()) {
            return cmd_bill(file, catalog_path, model_name, shots, wall_time, parts);
        }
        if (rep->parsed()) {
            return cmd_report(file, catalog_path, model_name, baseline, out_dir);
        }
        if (det->parsed()) {
            return cmd_detect(file, catalog_path, fair_model, billed, threshold);
        }
        if (mix->parsed()) {
            return cmd_mix(preset, count, mix_seed, pool_csv, resets, out_dir, mix_name);
        }
    } catch (const qsplice::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qsplice::CsvError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
