#include "doctest.h"
#include "qsplice/bench.hpp"
#include "qsplice/guard.hpp"
#include "qsplice/splice.hpp"
#include "qsplice/text.hpp"
#include "test_support.hpp"

using namespace qsplice;

namespace {

Money credits(const char* text) { return Money::parse(text, Currency::Credits); }

PerGate reference_meter() {
    PerGate m;
    m.per_task = credits("0.30");
    m.per_1q = credits("0.02");
    m.per_2q = credits("0.04");
    m.per_meas = credits("0.01");
    m.per_reset = credits("0.03");
    return m;
}

Circuit spliced_bells(uint32_t parts, uint32_t k) {
    SpliceSpec spec;
    spec.k_resets = k;
    for (uint32_t i = 0; i < parts; i++) {
        spec.parts.push_back(build(BenchSpec::defaults(BenchKind::Bell)));
    }
    return splice(spec).circuit;
}

size_t count_kind(const std::vector<AbuseFinding>& findings, FindingKind kind) {
    size_t n = 0;
    for (const auto& f : findings) {
        if (f.kind == kind) n++;
    }
    return n;
}

}  // namespace

TEST_SUITE("guard") {

TEST_CASE("per-gate quote prices the census") {
    Circuit bell = build(BenchSpec::defaults(BenchKind::Bell));
    CHECK(quote_per_gate(bell, reference_meter()) == credits("0.38"));

    Circuit composite = spliced_bells(8, 4);
    // 8 bells (0.08 each beyond the task fee) plus 7*4*2 resets at 0.03.
    Money want = credits("0.30") + credits("0.08") * 8 + credits("0.03") * 56;
    CHECK(quote_per_gate(composite, reference_meter()) == want);
}

TEST_CASE("full-width reset runs are flagged once per separator") {
    for (uint32_t parts : {2u, 3u, 8u}) {
        Circuit c = spliced_bells(parts, 4);
        auto findings = detect_full_reset_cuts(c);
        CHECK(findings.size() == parts - 1);
        for (const auto& f : findings) {
            CHECK(f.kind == FindingKind::FullResetCut);
            CHECK(f.segment_count == parts);
            CHECK(f.span_end >= f.span_begin);
        }
    }
}

TEST_CASE("a single round suffices to form a cut") {
    Circuit c = spliced_bells(4, 1);
    CHECK(detect_full_reset_cuts(c).size() == 3);
}

TEST_CASE("zero-round splices leave nothing to flag") {
    Circuit c = spliced_bells(4, 0);
    CHECK(detect_full_reset_cuts(c).empty());
}

TEST_CASE("partial-width resets are not cuts") {
    Circuit c;
    c.width = 2;
    c.cregs.push_back({"a", 1});
    c.cregs.push_back({"b", 1});
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::measure(0, "a", 0));
    c.ops.push_back(Instruction::reset(0));
    c.ops.push_back(Instruction::reset(0));
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::measure(0, "b", 0));
    CHECK(detect_full_reset_cuts(c).empty());
}

TEST_CASE("barriers inside a reset run do not break it") {
    Circuit c;
    c.width = 2;
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::reset(0));
    c.ops.push_back(Instruction::barrier({}));
    c.ops.push_back(Instruction::reset(1));
    c.ops.push_back(Instruction::h(1));
    auto findings = detect_full_reset_cuts(c);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].span_begin == 1);
    CHECK(findings[0].span_end == 3);
}

TEST_CASE("plain benchmarks carry no findings") {
    for (BenchKind kind : default_mix_pool(true)) {
        Circuit c = build(BenchSpec::defaults(kind));
        CHECK(detect_full_reset_cuts(c).empty());
        CHECK(detect_repetition(c).empty());
    }
}

TEST_CASE("repeated identical parts are reported with their multiplicity") {
    Circuit c = spliced_bells(3, 2);
    auto findings = detect_repetition(c);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].kind == FindingKind::RepeatedSegment);
    CHECK(findings[0].segment_count == 3);
}

TEST_CASE("register renaming does not hide repetition") {
    // The splicer already renames cregs per part; canonicalization must see
    // through any naming, so splice the same circuit under custom prefixes.
    SpliceSpec spec;
    spec.parts = {build(BenchSpec::defaults(BenchKind::Bell)),
                  build(BenchSpec::defaults(BenchKind::Bell))};
    spec.prefixes = {"alpha_", "zulu_"};
    spec.k_resets = 1;
    auto findings = detect_repetition(splice(spec).circuit);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].segment_count == 2);
}

TEST_CASE("distinct parts do not alias under canonicalization") {
    SpliceSpec spec;
    spec.k_resets = 2;
    spec.parts = {build(BenchSpec::defaults(BenchKind::Bell)),
                  build(BenchSpec::defaults(BenchKind::Qft)),
                  build(BenchSpec::defaults(BenchKind::BernsteinVazirani))};
    Circuit c = splice(spec).circuit;
    CHECK(detect_full_reset_cuts(c).size() == 2);
    CHECK(detect_repetition(c).empty());
}

TEST_CASE("angle differences keep segments distinct") {
    BenchSpec a = BenchSpec::defaults(BenchKind::VariationalAnsatz);
    BenchSpec b = a;
    b.angles = {0.31, 0.7, 1.1, 0.2, 0.5, 0.9};
    SpliceSpec spec;
    spec.parts = {build(a), build(b)};
    spec.k_resets = 1;
    CHECK(detect_repetition(splice(spec).circuit).empty());
}

TEST_CASE("uncomputation evasion is a documented blind spot") {
    Circuit c = parse_file(testsupport::fixture_path("circuits/uncompute_evasion.qct"));
    CHECK(detect_full_reset_cuts(c).empty());
    CHECK(detect_repetition(c).empty());
}

TEST_CASE("underpricing audit compares billed against the quote") {
    Circuit composite = spliced_bells(32, 4);
    PerGate fair = reference_meter();
    Money quote = quote_per_gate(composite, fair);

    auto cheap = audit(composite, credits("4.50"), fair, 0.5);
    REQUIRE(cheap.size() == 1);
    CHECK(cheap[0].kind == FindingKind::UnderpricedTask);
    CHECK(cheap[0].note.find(quote.to_string()) != std::string::npos);

    Money at_bound = Money::from_micros(quote.micros / 2, Currency::Credits);
    CHECK(audit(composite, at_bound, fair, 0.5).empty());
    CHECK(audit(composite, quote, fair, 1.0).empty());
    Money below = Money::from_micros(quote.micros - 1, Currency::Credits);
    CHECK(audit(composite, below, fair, 1.0).size() == 1);
}

TEST_CASE("audit threshold zero never fires") {
    Circuit bell = build(BenchSpec::defaults(BenchKind::Bell));
    CHECK(audit(bell, credits("0"), reference_meter(), 0.0).empty());
    CHECK(audit(bell, Money::from_micros(-100, Currency::Credits), reference_meter(), 0.0)
              .empty());
}

TEST_CASE("findings render as tab-separated report lines") {
    Circuit c = spliced_bells(2, 1);
    auto findings = detect_full_reset_cuts(c);
    auto reps = detect_repetition(c);
    findings.insert(findings.end(), reps.begin(), reps.end());
    std::string text = findings_to_text(findings);
    CHECK(text.find("full_reset_cut\t") != std::string::npos);
    CHECK(text.find("repeated_segment\t") != std::string::npos);
    CHECK(count_kind(findings, FindingKind::FullResetCut) == 1);
}

}
