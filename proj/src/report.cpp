#include "qsplice/report.hpp"

#include <fstream>
#include <sstream>

namespace qsplice {

CsvError::CsvError(size_t row_no, std::string msg)
    : std::runtime_error("receipts row " + std::to_string(row_no) + ": " + msg),
      row(row_no),
      message(std::move(msg)) {}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    out.push_back(field);
    for (auto& f : out) {
        size_t a = f.find_first_not_of(" \t");
        size_t b = f.find_last_not_of(" \t");
        f = a == std::string::npos ? "" : f.substr(a, b - a + 1);
    }
    return out;
}

uint64_t parse_count(const std::string& s, size_t row, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw CsvError(row, std::string("expected non-negative integer for ") + what + ", got '" +
                                s + "'");
    }
    return std::strtoull(s.c_str(), nullptr, 10);
}

}  // namespace

std::vector<ReceiptRow> parse_receipts_csv(std::string_view text) {
    std::vector<ReceiptRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t row_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        row_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (!saw_header) {
            if (fields.size() != 5 || fields[0] != "label" || fields[1] != "parts" ||
                fields[2] != "resets" || fields[3] != "shots" || fields[4] != "wall_time_s") {
                throw CsvError(row_no,
                               "expected header 'label,parts,resets,shots,wall_time_s'");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != 5) {
            throw CsvError(row_no, "expected 5 fields, got " + std::to_string(fields.size()));
        }
        ReceiptRow r;
        r.label = fields[0];
        r.parts = parse_count(fields[1], row_no, "parts");
        r.resets = parse_count(fields[2], row_no, "resets");
        r.shots = parse_count(fields[3], row_no, "shots");
        r.wall_time_s = parse_count(fields[4], row_no, "wall_time_s");
        if (r.parts < 1) throw CsvError(row_no, "parts must be >= 1");
        if (r.shots < 1) throw CsvError(row_no, "shots must be >= 1");
        rows.push_back(std::move(r));
    }
    if (!saw_header) throw CsvError(row_no == 0 ? 1 : row_no, "missing header row");
    return rows;
}

std::vector<ReceiptRow> read_receipts_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open receipts file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_receipts_csv(buf.str());
}

ReportRow price_receipt(const ReceiptRow& r, const PricingModel& model, Money baseline_per_shot) {
    ReportRow row;
    row.receipt = r;
    row.eff_shots = r.parts * r.shots;
    TaskReceipt receipt;
    receipt.shots = r.shots;
    receipt.wall_time_s = r.wall_time_s;
    receipt.parts = r.parts;
    row.cost = price(model, receipt);
    Money baseline = baseline_per_shot * static_cast<int64_t>(row.eff_shots);
    row.savings = savings(row.cost, baseline, r.shots, r.parts);
    return row;
}

std::vector<ReportRow> price_receipts(const std::vector<ReceiptRow>& rows,
                                      const PricingModel& model, Money baseline_per_shot) {
    std::vector<ReportRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(price_receipt(r, model, baseline_per_shot));
    return out;
}

std::string render_report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "label,parts,resets,shots,eff_shots,time_s,cost,cost_per_shot,baseline_cost,"
           "free_comp,excess_pct,ratio_pct,free_fraction_pct\n";
    for (const auto& row : rows) {
        out << row.receipt.label << "," << row.receipt.parts << "," << row.receipt.resets << ","
            << row.receipt.shots << "," << row.eff_shots << "," << row.receipt.wall_time_s << ","
            << row.cost.to_fixed(2) << "," << row.savings.cost_per_shot.to_decimal(6) << ","
            << row.savings.baseline_cost.to_fixed(2) << ","
            << row.savings.free_computation.to_fixed(2) << ","
            << row.savings.excess_pct.to_fixed(2) << "," << row.savings.ratio_pct.to_fixed(2)
            << "," << row.savings.free_fraction_pct.to_fixed(2) << "\n";
    }
    return out.str();
}

}  // namespace qsplice
