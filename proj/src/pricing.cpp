#include "qsplice/pricing.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsplice {

Currency model_currency(const PricingModel& m) {
    return std::visit(
        [](const auto& model) {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, PerTaskPerShot>) return model.per_task.currency;
            else if constexpr (std::is_same_v<T, TimeBased>) return model.per_second.currency;
            else return model.per_task.currency;
        },
        m);
}

Money price(const PricingModel& m, const TaskReceipt& r) {
    if (std::holds_alternative<PerTaskPerShot>(m)) {
        const auto& p = std::get<PerTaskPerShot>(m);
        return p.per_task + p.per_shot * static_cast<int64_t>(r.shots);
    }
    if (std::holds_alternative<TimeBased>(m)) {
        const auto& p = std::get<TimeBased>(m);
        if (p.granularity_s < 1) {
            throw std::invalid_argument("time_based: granularity must be >= 1 second");
        }
        uint64_t blocks = (r.wall_time_s + p.granularity_s - 1) / p.granularity_s;
        return p.per_second * static_cast<int64_t>(blocks * p.granularity_s);
    }
    const auto& p = std::get<PerGate>(m);
    Money total = p.per_task;
    total += p.per_1q * static_cast<int64_t>(r.census.n_1q);
    total += p.per_2q * static_cast<int64_t>(r.census.n_2q);
    total += p.per_meas * static_cast<int64_t>(r.census.n_meas);
    total += p.per_reset * static_cast<int64_t>(r.census.n_reset);
    return total;
}

Money avoided_cost(uint64_t parts, uint64_t shots, Money per_shot) {
    if (parts < 1) throw std::invalid_argument("avoided_cost: parts must be >= 1");
    return per_shot * static_cast<int64_t>((parts - 1) * shots);
}

double PerShotCost::value() const {
    return static_cast<double>(cost_micros) / 1e6 / static_cast<double>(shots);
}

std::string PerShotCost::to_decimal(int digits) const {
    // cost_micros / (1e6 * shots), rendered exactly.
    return ratio_to_decimal(cost_micros, static_cast<int64_t>(shots) * 1'000'000, digits);
}

double Percent::value() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Percent::to_fixed(int digits) const {
    if (!defined) return "NA";
    return ratio_to_decimal(num, den, digits);
}

Money default_baseline_per_shot() { return Money::from_micros(1500, Currency::Credits); }

SavingsReport savings(Money cost, Money baseline_cost, uint64_t shots, uint64_t parts) {
    if (shots < 1 || parts < 1) {
        throw std::invalid_argument("savings: shots and parts must be >= 1");
    }
    SavingsReport r;
    r.cost = cost;
    r.baseline_cost = baseline_cost;
    r.free_computation = baseline_cost - cost;
    int64_t eff = static_cast<int64_t>(shots * parts);
    r.cost_per_shot = PerShotCost{cost.micros, static_cast<uint64_t>(eff)};
    r.baseline_cost_per_shot = PerShotCost{baseline_cost.micros, static_cast<uint64_t>(eff)};

    // Per-shot denominators cancel: baseline_ps / attack_ps == baseline / cost.
    if (cost.micros != 0) {
        r.ratio_pct = Percent{true, baseline_cost.micros * 100, cost.micros};
        r.excess_pct = Percent{true, (baseline_cost.micros - cost.micros) * 100, cost.micros};
    }
    int64_t free = r.free_computation.micros;
    if (free != 0) {
        r.free_fraction_pct = Percent{true, (free - cost.micros) * 100, free};
    }
    return r;
}

TimeModel::TimeModel(std::vector<std::pair<double, double>> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw std::invalid_argument("time model needs at least 2 calibration points");
    }
    for (size_t i = 1; i < points_.size(); i++) {
        if (!(points_[i - 1].first < points_[i].first)) {
            throw std::invalid_argument("time model calibration parts must be strictly increasing");
        }
    }
}

double TimeModel::estimate(double parts) const {
    if (parts <= points_.front().first) return points_.front().second;
    if (parts >= points_.back().first) return points_.back().second;
    for (size_t i = 1; i < points_.size(); i++) {
        if (parts <= points_[i].first) {
            auto [x0, y0] = points_[i - 1];
            auto [x1, y1] = points_[i];
            return y0 + (parts - x0) * (y1 - y0) / (x1 - x0);
        }
    }
    return points_.back().second;
}

TimeModel fit_time_model(std::vector<std::pair<double, double>> calibration) {
    std::sort(calibration.begin(), calibration.end());
    return TimeModel(std::move(calibration));
}

const std::vector<std::pair<double, double>>& default_time_calibration() {
    static const std::vector<std::pair<double, double>> kPoints = {
        {1, 2}, {2, 2}, {4, 3}, {8, 3}, {16, 4}, {32, 6}, {64, 14},
    };
    return kPoints;
}

namespace {

Currency parse_currency(const std::string& tok, size_t line_no) {
    if (tok == "USD" || tok == "usd") return Currency::USD;
    if (tok == "credits" || tok == "CREDITS") return Currency::Credits;
    throw std::runtime_error("catalog line " + std::to_string(line_no) +
                             ": unknown currency '" + tok + "'");
}

}  // namespace

const PricingModel* Catalog::find(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return &e.model;
    }
    return nullptr;
}

Catalog parse_catalog(std::string_view text) {
    Catalog cat;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string name, kind;
        if (!(ls >> name)) continue;
        if (!(ls >> kind)) {
            throw std::runtime_error("catalog line " + std::to_string(line_no) +
                                     ": missing model kind");
        }
        auto take = [&](const char* what) {
            std::string tok;
            if (!(ls >> tok)) {
                throw std::runtime_error("catalog line " + std::to_string(line_no) +
                                         ": missing " + what);
            }
            return tok;
        };
        auto done = [&]() {
            std::string extra;
            if (ls >> extra) {
                throw std::runtime_error("catalog line " + std::to_string(line_no) +
                                         ": unexpected token '" + extra + "'");
            }
        };
        try {
            if (kind == "per_task_per_shot") {
                std::string task = take("task price"), shot = take("shot price");
                Currency c = parse_currency(take("currency"), line_no);
                done();
                cat.entries.push_back(
                    {name, PerTaskPerShot{Money::parse(task, c), Money::parse(shot, c)}});
            } else if (kind == "time_based") {
                std::string rate = take("per-second price"), gran = take("granularity");
                Currency c = parse_currency(take("currency"), line_no);
                done();
                if (gran.find_first_not_of("0123456789") != std::string::npos || gran.empty()) {
                    throw std::invalid_argument("granularity must be a positive integer");
                }
                uint32_t g = static_cast<uint32_t>(std::stoul(gran));
                if (g < 1) throw std::invalid_argument("granularity must be >= 1");
                cat.entries.push_back({name, TimeBased{Money::parse(rate, c), g}});
            } else if (kind == "per_gate") {
                std::string task = take("task price"), p1 = take("1q price"),
                            p2 = take("2q price"), pm = take("measure price"),
                            pr = take("reset price");
                Currency c = parse_currency(take("currency"), line_no);
                done();
                cat.entries.push_back({name, PerGate{Money::parse(task, c), Money::parse(p1, c),
                                                     Money::parse(p2, c), Money::parse(pm, c),
                                                     Money::parse(pr, c)}});
            } else {
                throw std::invalid_argument("unknown model kind '" + kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("catalog line " + std::to_string(line_no) + ": " + e.what());
        }
        for (size_t i = 0; i + 1 < cat.entries.size(); i++) {
            if (cat.entries[i].name == cat.entries.back().name) {
                throw std::runtime_error("catalog line " + std::to_string(line_no) +
                                         ": duplicate entry name '" + name + "'");
            }
        }
    }
    return cat;
}

Catalog read_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open catalog file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

std::string builtin_catalog_text() {
    return
        "# Provider price list. One entry per line:\n"
        "#   NAME per_task_per_shot TASK SHOT CCY\n"
        "#   NAME time_based PER_SECOND GRANULARITY CCY\n"
        "#   NAME per_gate TASK P1Q P2Q PMEAS PRESET CCY\n"
        "ionq_forte per_task_per_shot 0.30 0.08 USD\n"
        "ionq_aria per_task_per_shot 0.30 0.03 USD\n"
        "iqm_garnet per_task_per_shot 0.30 0.00145 USD\n"
        "quera_aquila per_task_per_shot 0.30 0.01 USD\n"
        "rigetti_ankaa3 per_task_per_shot 0.30 0.0009 USD\n"
        "pasqal_fresnel time_based 0.08333 1 USD\n"
        "azure_rigetti_ankaa3 time_based 1.30 1 USD\n"
        "ibm_quantum time_based 1.60 1 USD\n"
        "iqm_resonance time_based 0.30 1 USD\n"
        "target_machine time_based 0.75 1 credits\n"
        "per_gate_reference per_gate 0.30 0.02 0.04 0.01 0.03 credits\n";
}

const Catalog& builtin_catalog() {
    static const Catalog kCatalog = parse_catalog(builtin_catalog_text());
    return kCatalog;
}

}  // namespace qsplice
