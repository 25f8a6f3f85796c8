#include <algorithm>

#include "doctest.h"
#include "qsplice/circuit.hpp"
#include "qsplice/metrics.hpp"
#include "qsplice/sim.hpp"
#include "qsplice/splice.hpp"
#include "qsplice/text.hpp"

using namespace qsplice;
using doctest::Approx;

namespace {

Circuit bell() {
    Circuit c;
    c.width = 2;
    c.label = "bell";
    c.cregs.push_back({"c", 2});
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::cx(0, 1));
    c.ops.push_back(Instruction::measure(0, "c", 0));
    c.ops.push_back(Instruction::measure(1, "c", 1));
    return c;
}

Circuit one_qubit_flip() {
    Circuit c;
    c.width = 1;
    c.label = "flip";
    c.cregs.push_back({"r", 1});
    c.ops.push_back(Instruction::x(0));
    c.ops.push_back(Instruction::measure(0, "r", 0));
    return c;
}

uint64_t count_resets(const Circuit& c) {
    return census(c).n_reset;
}

}  // namespace

TEST_SUITE("splice") {

TEST_CASE("composite takes the widest part and renames registers") {
    SpliceSpec spec;
    spec.parts = {one_qubit_flip(), bell()};
    spec.k_resets = 3;
    SpliceResult r = splice(spec);

    CHECK(r.circuit.width == 2);
    REQUIRE(r.circuit.cregs.size() == 2);
    CHECK(r.circuit.cregs[0].name == "p0_r");
    CHECK(r.circuit.cregs[1].name == "p1_c");
    CHECK(is_valid(r.circuit));
    // One separator of 3 rounds x 2 qubits between the two parts.
    CHECK(count_resets(r.circuit) == 6);

    CHECK(r.map.total_bits == 3);
    CHECK(r.map.effective_shots_factor == 2);
    REQUIRE(r.map.parts.size() == 2);
    CHECK(r.map.parts[0].label == "flip");
    CHECK(r.map.parts[0].offset == 0);
    CHECK(r.map.parts[0].total_bits == 1);
    CHECK(r.map.parts[1].label == "bell");
    CHECK(r.map.parts[1].offset == 1);
    CHECK(r.map.parts[1].total_bits == 2);
    REQUIRE(r.map.parts[1].regs.size() == 1);
    CHECK(r.map.parts[1].regs[0].name == "p1_c");
}

TEST_CASE("separator count scales with parts, rounds, and width") {
    for (uint32_t parts : {2u, 3u, 5u}) {
        for (uint32_t k : {0u, 1u, 4u}) {
            SpliceSpec spec;
            spec.k_resets = k;
            for (uint32_t i = 0; i < parts; i++) spec.parts.push_back(bell());
            SpliceResult r = splice(spec);
            CHECK(count_resets(r.circuit) == static_cast<uint64_t>(parts - 1) * k * 2);
            CHECK(r.map.effective_shots_factor == parts);
        }
    }
}

TEST_CASE("single part splices to itself with no separators") {
    SpliceSpec spec;
    spec.parts = {bell()};
    SpliceResult r = splice(spec);
    CHECK(count_resets(r.circuit) == 0);
    CHECK(r.map.parts.size() == 1);
    Circuit expected = bell();
    expected.cregs[0].name = "p0_c";
    for (auto& op : expected.ops) {
        if (!op.creg.empty()) op.creg = "p0_c";
    }
    CHECK(structurally_equal(r.circuit, expected));
}

TEST_CASE("empty spec and bad prefix counts throw") {
    SpliceSpec spec;
    CHECK_THROWS_AS(splice(spec), std::invalid_argument);

    spec.parts = {bell(), bell()};
    spec.prefixes = {"only_one_"};
    CHECK_THROWS_AS(splice(spec), std::invalid_argument);
}

TEST_CASE("invalid part is rejected") {
    Circuit broken = bell();
    broken.ops.push_back(Instruction::h(7));
    SpliceSpec spec;
    spec.parts = {broken};
    CHECK_THROWS_AS(splice(spec), std::invalid_argument);
}

TEST_CASE("duplicate register names after relabeling throw") {
    SpliceSpec spec;
    spec.parts = {bell(), bell()};
    spec.prefixes = {"same_", "same_"};
    CHECK_THROWS_AS(splice(spec), std::invalid_argument);
}

TEST_CASE("custom prefixes are honored") {
    SpliceSpec spec;
    spec.parts = {bell(), bell()};
    spec.prefixes = {"left_", "right_"};
    SpliceResult r = splice(spec);
    CHECK(r.circuit.cregs[0].name == "left_c");
    CHECK(r.circuit.cregs[1].name == "right_c");
}

TEST_CASE("split_counts recovers per-part tables") {
    // Key layout: [p0_r bit][p1_c bits], 3 bits total.
    SpliceSpec spec;
    spec.parts = {one_qubit_flip(), bell()};
    SpliceResult r = splice(spec);

    CountsTable composite;
    composite.shots = 10;
    composite.seed = 5;
    composite.counts["100"] = 4;
    composite.counts["111"] = 5;
    composite.counts["000"] = 1;

    auto parts = split_counts(composite, r.map);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].total() == 10);
    CHECK(parts[1].total() == 10);
    CHECK(parts[0].counts.at("1") == 9);
    CHECK(parts[0].counts.at("0") == 1);
    CHECK(parts[1].counts.at("00") == 5);
    CHECK(parts[1].counts.at("11") == 5);
    CHECK(parts[0].seed == 5);
}

TEST_CASE("split_counts rejects keys of the wrong width") {
    SpliceSpec spec;
    spec.parts = {one_qubit_flip(), bell()};
    SpliceResult r = splice(spec);
    CountsTable composite;
    composite.shots = 1;
    composite.counts["01"] = 1;
    CHECK_THROWS_AS(split_counts(composite, r.map), std::invalid_argument);
}

TEST_CASE("spliced execution equals independent execution part by part") {
    SpliceSpec spec;
    spec.parts = {bell(), one_qubit_flip(), bell()};
    spec.k_resets = 2;
    SpliceResult r = splice(spec);

    CountsTable composite = run_shots(r.circuit, NoiseModel::noiseless(), 20000, 9);
    auto parts = split_counts(composite, r.map);
    REQUIRE(parts.size() == 3);

    CHECK(parts[1].counts.at("1") == 20000);

    CountsTable direct = run_shots(bell(), NoiseModel::noiseless(), 20000, 10);
    CHECK(tvd(normalize(parts[0]), normalize(direct)) < 0.02);
    CHECK(tvd(normalize(parts[2]), normalize(direct)) < 0.02);
}

TEST_CASE("map text round-trips") {
    SpliceSpec spec;
    spec.parts = {one_qubit_flip(), bell(), bell()};
    spec.k_resets = 4;
    SpliceResult r = splice(spec);

    std::string text = splice_map_to_text(r.map);
    CHECK(text.find("# parts=3 total_bits=5 effective_shots_factor=3") == 0);
    SpliceMap back = splice_map_from_text(text);
    CHECK(back.total_bits == r.map.total_bits);
    CHECK(back.effective_shots_factor == r.map.effective_shots_factor);
    REQUIRE(back.parts.size() == 3);
    for (size_t i = 0; i < 3; i++) {
        CHECK(back.parts[i].label == r.map.parts[i].label);
        CHECK(back.parts[i].offset == r.map.parts[i].offset);
        CHECK(back.parts[i].total_bits == r.map.parts[i].total_bits);
        REQUIRE(back.parts[i].regs.size() == r.map.parts[i].regs.size());
        for (size_t j = 0; j < back.parts[i].regs.size(); j++) {
            CHECK(back.parts[i].regs[j].name == r.map.parts[i].regs[j].name);
            CHECK(back.parts[i].regs[j].offset == r.map.parts[i].regs[j].offset);
            CHECK(back.parts[i].regs[j].length == r.map.parts[i].regs[j].length);
        }
    }
}

TEST_CASE("composite text serializes and parses back") {
    SpliceSpec spec;
    spec.parts = {bell(), bell()};
    SpliceResult r = splice(spec);
    Circuit round = parse(serialize(r.circuit));
    CHECK(structurally_equal(r.circuit, round));
}

}
