#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsplice/money.hpp"
#include "qsplice/pricing.hpp"

namespace qsplice {

// One billed submission as it appears in a receipts CSV:
//   label,parts,resets,shots,wall_time_s
// with a header row. resets is descriptive metadata.
struct ReceiptRow {
    std::string label;
    uint64_t parts = 1;
    uint64_t resets = 0;
    uint64_t shots = 0;
    uint64_t wall_time_s = 0;
};

// Throws CsvError (with the 1-based row number) on malformed rows.
class CsvError : public std::runtime_error {
  public:
    CsvError(size_t row, std::string message);
    size_t row;
    std::string message;
};

std::vector<ReceiptRow> parse_receipts_csv(std::string_view text);
std::vector<ReceiptRow> read_receipts_file(const std::string& path);

struct ReportRow {
    ReceiptRow receipt;
    uint64_t eff_shots = 0;
    Money cost;
    SavingsReport savings;
};

ReportRow price_receipt(const ReceiptRow& r, const PricingModel& model, Money baseline_per_shot);

// CSV with header:
// label,parts,resets,shots,eff_shots,time_s,cost,cost_per_shot,baseline_cost,
// free_comp,excess_pct,ratio_pct,free_fraction_pct
// Money cells use 2 decimals, per-shot cells 6, percent cells 2 (all half-up,
// computed exactly); undefined percentages render as NA.
std::string render_report_csv(const std::vector<ReportRow>& rows);

std::vector<ReportRow> price_receipts(const std::vector<ReceiptRow>& rows,
                                      const PricingModel& model, Money baseline_per_shot);

}  // namespace qsplice
