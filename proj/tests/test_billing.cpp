#include <stdexcept>

#include "doctest.h"
#include "qsplice/money.hpp"
#include "qsplice/pricing.hpp"
#include "qsplice/report.hpp"

using namespace qsplice;
using doctest::Approx;

namespace {

Money credits(const char* text) { return Money::parse(text, Currency::Credits); }
Money usd(const char* text) { return Money::parse(text, Currency::USD); }

GateCensus bell_census() {
    GateCensus g;
    g.n_1q = 1;
    g.n_2q = 1;
    g.n_meas = 2;
    g.depth = 2;
    return g;
}

PerGate reference_meter() {
    PerGate m;
    m.per_task = credits("0.30");
    m.per_1q = credits("0.02");
    m.per_2q = credits("0.04");
    m.per_meas = credits("0.01");
    m.per_reset = credits("0.03");
    return m;
}

}  // namespace

TEST_SUITE("billing") {

TEST_CASE("money parses decimal text exactly") {
    CHECK(credits("2").micros == 2000000);
    CHECK(credits("0.30").micros == 300000);
    CHECK(usd("0.00145").micros == 1450);
    CHECK(credits("-1.5").micros == -1500000);
    CHECK(credits("0.000001").micros == 1);
    CHECK_THROWS_AS(Money::parse("0.0000001", Currency::USD), std::invalid_argument);
    CHECK_THROWS_AS(Money::parse("", Currency::USD), std::invalid_argument);
    CHECK_THROWS_AS(Money::parse("1.2.3", Currency::USD), std::invalid_argument);
    CHECK_THROWS_AS(Money::parse("abc", Currency::USD), std::invalid_argument);
}

TEST_CASE("money renders minimally with a floor on fraction digits") {
    CHECK(credits("1.5").to_string() == "1.50");
    CHECK(credits("10.5").to_string() == "10.50");
    CHECK(credits("0.000141").to_string() == "0.000141");
    CHECK(credits("2").to_string() == "2.00");
    CHECK(credits("2").to_string(0) == "2");
    CHECK(credits("-0.25").to_string() == "-0.25");
    CHECK(credits("1.25").to_fixed(2) == "1.25");
    CHECK(credits("1.2345").to_fixed(2) == "1.23");
    CHECK(credits("1.235").to_fixed(2) == "1.24");
}

TEST_CASE("money arithmetic stays in integer micros") {
    Money a = credits("1.10");
    Money b = credits("0.15");
    CHECK((a + b).micros == 1250000);
    CHECK((a - b).micros == 950000);
    CHECK((b * 4).micros == 600000);
    CHECK(a > b);
    CHECK(b <= a);
    CHECK_THROWS_AS(a + usd("1.00"), std::invalid_argument);
    CHECK_THROWS_AS((void)(a < usd("1.00")), std::invalid_argument);
}

TEST_CASE("display rounding is half up, independent of binary floats") {
    // 0.0005625 printed at 6 digits must go UP; float round-to-even gives
    // ...562 and would disagree with the published sweep tables.
    CHECK(ratio_to_decimal(2250000, 4000 * 1000000LL, 6) == "0.000563");
    CHECK(ratio_to_decimal(1, 2, 0) == "1");
    CHECK(ratio_to_decimal(-1, 2, 0) == "-1");
    CHECK(ratio_to_decimal(10500000, 8000 * 1000000LL, 6) == "0.001313");
    CHECK(rounded_scaled_ratio(5, 1000, 2) == 1);
    CHECK(rounded_scaled_ratio(1300, 3, 2) == 43333);
}

TEST_CASE("per-task-per-shot pricing") {
    PerTaskPerShot model{usd("0.30"), usd("0.0009")};
    TaskReceipt r;
    r.shots = 1000;
    Money cost = price(model, r);
    CHECK(cost == usd("1.20"));
    CHECK(model_currency(PricingModel{model}) == Currency::USD);
}

TEST_CASE("time-based pricing bills whole granules") {
    TimeBased model{credits("0.75"), 1};
    TaskReceipt r;
    r.wall_time_s = 2;
    CHECK(price(model, r) == credits("1.5"));
    r.wall_time_s = 14;
    CHECK(price(model, r) == credits("10.5"));
    r.wall_time_s = 0;
    CHECK(price(model, r).micros == 0);

    TimeBased coarse{usd("0.01"), 60};
    TaskReceipt q;
    q.wall_time_s = 61;
    CHECK(price(coarse, q) == usd("1.20"));
    q.wall_time_s = 60;
    CHECK(price(coarse, q) == usd("0.60"));
}

TEST_CASE("per-gate pricing charges the census, not the shots") {
    TaskReceipt r;
    r.shots = 100000;
    r.census = bell_census();
    Money cost = price(reference_meter(), r);
    CHECK(cost == credits("0.38"));
}

TEST_CASE("avoided cost counts the unbilled per-shot fees") {
    Money a = avoided_cost(8, 1000, usd("0.0009"));
    CHECK(a == usd("6.30"));
    CHECK(avoided_cost(1, 1000, usd("0.0009")).micros == 0);
}

TEST_CASE("savings on the eight-part packed job") {
    Money cost = credits("2.25");
    Money baseline = credits("12");
    SavingsReport s = savings(cost, baseline, 1000, 8);
    CHECK(s.free_computation == credits("9.75"));
    CHECK(s.cost_per_shot.to_decimal(6) == "0.000281");
    CHECK(s.baseline_cost_per_shot.to_decimal(6) == "0.001500");
    CHECK(s.excess_pct.to_fixed(2) == "433.33");
    CHECK(s.ratio_pct.to_fixed(2) == "533.33");
    CHECK(s.free_fraction_pct.to_fixed(2) == "76.92");
    CHECK(s.excess_pct.value() == Approx(433.333333).epsilon(1e-9));
}

TEST_CASE("savings of an honest single task are neutral") {
    SavingsReport s = savings(credits("1.5"), credits("1.5"), 1000, 1);
    CHECK(s.excess_pct.to_fixed(2) == "0.00");
    CHECK(s.ratio_pct.to_fixed(2) == "100.00");
    CHECK(s.free_computation.micros == 0);
    CHECK_FALSE(s.free_fraction_pct.defined);
    CHECK(s.free_fraction_pct.to_fixed(2) == "NA");
}

TEST_CASE("savings against a zero cost stay defined as text") {
    SavingsReport s = savings(credits("0"), credits("3"), 10, 2);
    CHECK_FALSE(s.excess_pct.defined);
    CHECK(s.excess_pct.to_fixed(2) == "NA");
    CHECK(s.free_computation == credits("3"));
}

TEST_CASE("default baseline is 0.0015 credits per shot") {
    CHECK(default_baseline_per_shot() == credits("0.0015"));
}

TEST_CASE("time model interpolates and clamps") {
    TimeModel tm(default_time_calibration());
    CHECK(tm.estimate(1) == Approx(2.0));
    CHECK(tm.estimate(32) == Approx(6.0));
    CHECK(tm.estimate(64) == Approx(14.0));
    CHECK(tm.estimate(48) == Approx(10.0));
    CHECK(tm.estimate(3) == Approx(2.5));
    CHECK(tm.estimate(128) == Approx(14.0));
    CHECK(tm.estimate(0.25) == Approx(2.0));

    CHECK_THROWS_AS(TimeModel({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(TimeModel({{1.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);

    TimeModel sorted = fit_time_model({{8, 3}, {1, 2}});
    CHECK(sorted.estimate(8) == Approx(3.0));
}

TEST_CASE("catalog text round-trips and validates") {
    Catalog c = parse_catalog(builtin_catalog_text());
    CHECK(c.entries.size() == builtin_catalog().entries.size());
    const PricingModel* m = c.find("target_machine");
    REQUIRE(m != nullptr);
    REQUIRE(std::holds_alternative<TimeBased>(*m));
    CHECK(std::get<TimeBased>(*m).per_second == credits("0.75"));

    const PricingModel* ankaa = c.find("rigetti_ankaa3");
    REQUIRE(ankaa != nullptr);
    REQUIRE(std::holds_alternative<PerTaskPerShot>(*ankaa));
    CHECK(std::get<PerTaskPerShot>(*ankaa).per_shot == usd("0.0009"));

    CHECK(c.find("missing") == nullptr);

    CHECK_THROWS_WITH_AS(parse_catalog("m time_based 0.75 1 doubloons\n"),
                         doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_AS(parse_catalog("m per_gate 0.1 0.1 0.1 credits\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_catalog("a time_based 1 1 USD\na time_based 1 1 USD\n"),
                    std::runtime_error);
}

TEST_CASE("receipts parse with row-numbered errors") {
    auto rows = parse_receipts_csv(
        "label,parts,resets,shots,wall_time_s\n"
        "# comment\n"
        "bell_x8,8,4,1000,3\n"
        "\n"
        "bell_x1,1,4,1000,2\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].label == "bell_x8");
    CHECK(rows[0].parts == 8);
    CHECK(rows[1].wall_time_s == 2);

    CHECK_THROWS_AS(parse_receipts_csv("nope,bad,header\n"), CsvError);
    try {
        parse_receipts_csv("label,parts,resets,shots,wall_time_s\nok,1,0,10,1\nbad,x,0,10,1\n");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.row == 3);
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
    CHECK_THROWS_AS(
        parse_receipts_csv("label,parts,resets,shots,wall_time_s\nzero,0,0,10,1\n"), CsvError);
    CHECK_THROWS_AS(
        parse_receipts_csv("label,parts,resets,shots,wall_time_s\nshort,1,0\n"), CsvError);
}

TEST_CASE("report row renders the packed-job metrics exactly") {
    ReceiptRow r;
    r.label = "bell_x8";
    r.parts = 8;
    r.resets = 4;
    r.shots = 1000;
    r.wall_time_s = 3;
    TimeBased target{credits("0.75"), 1};
    ReportRow row = price_receipt(r, PricingModel{target}, default_baseline_per_shot());
    CHECK(row.eff_shots == 8000);
    CHECK(row.cost == credits("2.25"));

    std::string csv = render_report_csv({row});
    CHECK(csv ==
          "label,parts,resets,shots,eff_shots,time_s,cost,cost_per_shot,baseline_cost,"
          "free_comp,excess_pct,ratio_pct,free_fraction_pct\n"
          "bell_x8,8,4,1000,8000,3,2.25,0.000281,12.00,9.75,433.33,533.33,76.92\n");
}

}
