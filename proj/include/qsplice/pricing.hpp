#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsplice/circuit.hpp"
#include "qsplice/money.hpp"

namespace qsplice {

// Cloud billing models.
struct PerTaskPerShot {
    Money per_task;
    Money per_shot;
};

struct TimeBased {
    Money per_second;
    uint32_t granularity_s = 1;  // wall time is billed in whole multiples
};

struct PerGate {
    Money per_task;
    Money per_1q;
    Money per_2q;
    Money per_meas;
    Money per_reset;
};

using PricingModel = std::variant<PerTaskPerShot, TimeBased, PerGate>;

Currency model_currency(const PricingModel& m);

// What one submission looked like to the biller. parts is descriptive
// metadata (1 for an honest task); pricing never multiplies by it.
struct TaskReceipt {
    uint64_t shots = 0;
    uint64_t wall_time_s = 0;
    GateCensus census;
    uint64_t parts = 1;
};

//   PerTaskPerShot: per_task + shots * per_shot
//   TimeBased:      ceil(wall/granularity) * granularity * per_second
//   PerGate:        per_task + census counts x unit prices
Money price(const PricingModel& m, const TaskReceipt& r);

// Per-shot fees a splicer never pays: (parts - 1) * shots * per_shot.
Money avoided_cost(uint64_t parts, uint64_t shots, Money per_shot);

// Exact cost-per-shot rational (micros / shots). Displayed at 6 decimals.
struct PerShotCost {
    int64_t cost_micros = 0;
    uint64_t shots = 1;

    double value() const;
    std::string to_decimal(int digits = 6) const;
};

// Exact percentage rational, undefined when the denominator is zero
// (rendered "NA", never infinity).
struct Percent {
    bool defined = false;
    int64_t num = 0;   // percent units: value = num / den
    int64_t den = 1;

    double value() const;
    std::string to_fixed(int digits = 2) const;  // "NA" when undefined
};

struct SavingsReport {
    Money cost;
    Money baseline_cost;
    Money free_computation;        // baseline_cost - cost
    PerShotCost cost_per_shot;     // cost / (shots * parts)
    PerShotCost baseline_cost_per_shot;
    Percent excess_pct;            // (baseline_per_shot / attack_per_shot - 1) * 100
    Percent ratio_pct;             // (baseline_per_shot / attack_per_shot) * 100
    Percent free_fraction_pct;     // (free - cost) / free * 100
};

// Default honest-baseline rate: 0.001500 credits per shot.
Money default_baseline_per_shot();

SavingsReport savings(Money cost, Money baseline_cost, uint64_t shots, uint64_t parts);

// Monotone piecewise-linear wall-time estimator, exact at the calibration
// points, clamped outside their range. Calibration pairs are
// (parts, seconds) with parts strictly increasing.
class TimeModel {
  public:
    explicit TimeModel(std::vector<std::pair<double, double>> points);
    double estimate(double parts) const;
    const std::vector<std::pair<double, double>>& points() const { return points_; }

  private:
    std::vector<std::pair<double, double>> points_;
};

TimeModel fit_time_model(std::vector<std::pair<double, double>> calibration);
// Observed queue-to-result seconds for 1..64 spliced copies on the reference
// machine; default calibration for what-if estimates.
const std::vector<std::pair<double, double>>& default_time_calibration();

// Pricing catalog text: one entry per line, '#' comments.
//   NAME per_task_per_shot TASK SHOT CCY
//   NAME time_based PER_SECOND GRANULARITY CCY
//   NAME per_gate TASK P1Q P2Q PMEAS PRESET CCY
// CCY is USD or credits.
struct CatalogEntry {
    std::string name;
    PricingModel model;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    const PricingModel* find(const std::string& name) const;
};

Catalog parse_catalog(std::string_view text);
Catalog read_catalog_file(const std::string& path);
// Shipped defaults: published per-shot and per-second provider rates, the
// 0.75 credits/s reference machine, and a per-gate reference meter.
const Catalog& builtin_catalog();
std::string builtin_catalog_text();

}  // namespace qsplice
