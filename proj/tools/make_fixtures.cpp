// Regenerates the committed fixture tree: benchmark circuits, spliced mixes
// with their map sidecars, receipt CSVs, the provider catalog, and golden
// report CSVs. Run from the repository root: build/make_fixtures [--out DIR].

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qsplice/bench.hpp"
#include "qsplice/circuit.hpp"
#include "qsplice/pricing.hpp"
#include "qsplice/report.hpp"
#include "qsplice/splice.hpp"
#include "qsplice/text.hpp"

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    std::cout << path.string() << "\n";
}

void write_circuit(const fs::path& dir, const qsplice::Circuit& c) {
    write_text(dir / (c.label + ".qct"), qsplice::serialize(c));
}

qsplice::Circuit uncompute_evasion() {
    using qsplice::Instruction;
    qsplice::Circuit c;
    c.width = 2;
    c.label = "uncompute_evasion";
    c.cregs.push_back({"ca", 2});
    c.cregs.push_back({"cb", 2});
    for (int copy = 0; copy < 2; copy++) {
        std::string reg = copy == 0 ? "ca" : "cb";
        c.ops.push_back(Instruction::h(0));
        c.ops.push_back(Instruction::cx(0, 1));
        c.ops.push_back(Instruction::cx(0, 1));
        c.ops.push_back(Instruction::h(0));
        c.ops.push_back(Instruction::barrier({}));
        c.ops.push_back(Instruction::measure(0, reg, 0));
        c.ops.push_back(Instruction::measure(1, reg, 1));
    }
    return c;
}

const char* kBellPackingCsv =
    "label,parts,resets,shots,wall_time_s\n"
    "bell_x1,1,4,1000,2\n"
    "bell_x2,2,4,1000,2\n"
    "bell_x4,4,4,1000,3\n"
    "bell_x8,8,4,1000,3\n"
    "bell_x16,16,4,1000,4\n"
    "bell_x32,32,4,1000,6\n"
    "bell_x64,64,4,1000,14\n";

const char* kBellResetSweepCsv =
    "label,parts,resets,shots,wall_time_s\n"
    "bell_r1,8,1,1000,3\n"
    "bell_r2,8,2,1000,3\n"
    "bell_r4,8,4,1000,3\n"
    "bell_r8,8,8,1000,3\n"
    "bell_r8b,8,8,1000,4\n"
    "bell_r8c,8,8,1000,4\n"
    "bell_r16,8,16,1000,6\n"
    "bell_r32,8,32,1000,14\n";

const char* kMixPackingCsv =
    "label,parts,resets,shots,wall_time_s\n"
    "mix8,8,4,1000,3\n"
    "mix16,16,4,1000,4\n"
    "mix32,32,4,1000,7\n"
    "mix48,48,4,1000,11\n"
    "mix64,64,4,1000,16\n"
    "mix80,80,4,1000,27\n";

void write_golden_report(const fs::path& path, const char* receipts_csv) {
    auto rows = qsplice::parse_receipts_csv(receipts_csv);
    const qsplice::PricingModel* model = qsplice::builtin_catalog().find("target_machine");
    if (!model) throw std::runtime_error("builtin catalog lost target_machine");
    auto priced = qsplice::price_receipts(rows, *model, qsplice::default_baseline_per_shot());
    write_text(path, qsplice::render_report_csv(priced));
}

}  // namespace

int main(int argc, char** argv) {
    fs::path root = "fixtures";
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        if (arg == "--out" && i + 1 < argc) {
            root = argv[++i];
        } else {
            std::cerr << "usage: make_fixtures [--out DIR]\n";
            return 3;
        }
    }

    try {
        fs::create_directories(root / "circuits");
        fs::create_directories(root / "mixes");
        fs::create_directories(root / "receipts");
        fs::create_directories(root / "catalogs");
        fs::create_directories(root / "golden");

        for (qsplice::BenchKind kind : qsplice::default_mix_pool(true)) {
            write_circuit(root / "circuits", qsplice::build(qsplice::BenchSpec::defaults(kind)));
        }
        for (uint32_t k : {1u, 6u, 31u}) {
            write_circuit(root / "circuits", qsplice::build_reset_test(k));
        }
        write_circuit(root / "circuits", uncompute_evasion());

        for (const std::string& name : qsplice::preset_mix_names()) {
            qsplice::SpliceSpec spec;
            spec.k_resets = 4;
            for (const auto& bench : qsplice::preset_mix(name)) {
                spec.parts.push_back(qsplice::build(bench));
            }
            qsplice::SpliceResult result = qsplice::splice(spec);
            result.circuit.label = name;
            write_text(root / "mixes" / (name + ".qct"), qsplice::serialize(result.circuit));
            write_text(root / "mixes" / (name + ".map"),
                       qsplice::splice_map_to_text(result.map));
        }

        write_text(root / "receipts" / "bell_packing.csv", kBellPackingCsv);
        write_text(root / "receipts" / "bell_reset_sweep.csv", kBellResetSweepCsv);
        write_text(root / "receipts" / "mix_packing.csv", kMixPackingCsv);
        write_text(root / "catalogs" / "providers.catalog", qsplice::builtin_catalog_text());

        write_golden_report(root / "golden" / "bell_packing_report.csv", kBellPackingCsv);
        write_golden_report(root / "golden" / "bell_reset_sweep_report.csv", kBellResetSweepCsv);
        write_golden_report(root / "golden" / "mix_packing_report.csv", kMixPackingCsv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
