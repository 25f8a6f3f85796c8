#include "qsplice/guard.hpp"

#include <map>
#include <sstream>

#include "qsplice/text.hpp"

namespace qsplice {

const char* finding_kind_name(FindingKind k) {
    switch (k) {
        case FindingKind::FullResetCut: return "full_reset_cut";
        case FindingKind::RepeatedSegment: return "repeated_segment";
        case FindingKind::UnderpricedTask: return "underpriced_task";
    }
    return "?";
}

Money quote_per_gate(const Circuit& c, const PerGate& model) {
    TaskReceipt r;
    r.census = census(c);
    return price(PricingModel{model}, r);
}

namespace {

struct ResetRun {
    size_t begin = 0;
    size_t end = 0;  // inclusive
    std::vector<bool> covered;
    bool any_reset = false;
};

// Maximal contiguous runs of Reset/Barrier ops. A run whose resets touch
// every qubit is one separator cut; scattered or subset resets never qualify.
std::vector<ResetRun> full_runs(const Circuit& c) {
    std::vector<ResetRun> cuts;
    ResetRun run;
    run.covered.assign(c.width, false);
    bool open = false;
    auto close = [&](size_t end) {
        if (!open) return;
        run.end = end;
        if (run.any_reset) {
            bool all = true;
            for (bool b : run.covered) all = all && b;
            if (all) cuts.push_back(run);
        }
        run.covered.assign(c.width, false);
        run.any_reset = false;
        open = false;
    };
    for (size_t i = 0; i < c.ops.size(); i++) {
        const auto& op = c.ops[i];
        if (op.op == Op::Reset) {
            if (!open) {
                run.begin = i;
                open = true;
            }
            run.covered[op.qubits[0]] = true;
            run.any_reset = true;
        } else if (op.op == Op::Barrier) {
            // transparent inside a run; does not open one
        } else {
            close(i == 0 ? 0 : i - 1);
        }
    }
    close(c.ops.empty() ? 0 : c.ops.size() - 1);
    return cuts;
}

// Trims trailing barriers from the recorded end index so the span covers
// resets only.
size_t trim_end(const Circuit& c, size_t begin, size_t end) {
    while (end > begin && c.ops[end].op != Op::Reset) end--;
    return end;
}

}  // namespace

std::vector<AbuseFinding> detect_full_reset_cuts(const Circuit& c) {
    std::vector<AbuseFinding> out;
    auto cuts = full_runs(c);
    for (const auto& run : cuts) {
        AbuseFinding f;
        f.kind = FindingKind::FullResetCut;
        f.span_begin = run.begin;
        f.span_end = trim_end(c, run.begin, run.end);
        f.segment_count = cuts.size() + 1;
        std::ostringstream note;
        note << "all " << c.width << " qubits reset; circuit splits into " << cuts.size() + 1
             << " segments";
        f.note = note.str();
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

// Canonical segment form: ops serialized with creg names replaced by their
// local first-use ordinal, so relabeled copies hash equal.
std::string canonical_segment(const Circuit& c, size_t begin, size_t end) {
    std::map<std::string, size_t> reg_ids;
    std::ostringstream out;
    for (size_t i = begin; i < end; i++) {
        const auto& op = c.ops[i];
        if (op.op == Op::Barrier) continue;
        out << op_name(op.op);
        for (uint32_t q : op.qubits) out << " q" << q;
        for (double a : op.angles) out << " " << format_angle(a);
        if (op.op == Op::Measure || op.op == Op::CondX) {
            auto [it, inserted] = reg_ids.try_emplace(op.creg, reg_ids.size());
            out << " r" << it->second << "[" << op.cbit << "]";
        }
        out << ";";
    }
    return out.str();
}

}  // namespace

std::vector<AbuseFinding> detect_repetition(const Circuit& c) {
    auto cuts = full_runs(c);
    struct Segment {
        size_t begin;
        size_t end;  // exclusive
    };
    std::vector<Segment> segments;
    size_t pos = 0;
    for (const auto& run : cuts) {
        segments.push_back({pos, run.begin});
        pos = run.end + 1;
    }
    segments.push_back({pos, c.ops.size()});

    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < segments.size(); i++) {
        std::string canon = canonical_segment(c, segments[i].begin, segments[i].end);
        if (canon.empty()) continue;  // separator-adjacent empty segments
        groups[canon].push_back(i);
    }

    std::vector<AbuseFinding> out;
    for (const auto& [canon, members] : groups) {
        if (members.size() < 2) continue;
        const Segment& first = segments[members.front()];
        AbuseFinding f;
        f.kind = FindingKind::RepeatedSegment;
        f.span_begin = first.begin;
        f.span_end = first.end == first.begin ? first.begin : first.end - 1;
        f.segment_count = members.size();
        std::ostringstream note;
        note << "segment repeats " << members.size() << " times across reset cuts";
        f.note = note.str();
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<AbuseFinding> audit(const Circuit& c, Money billed, const PerGate& fair,
                                double threshold) {
    std::vector<AbuseFinding> out;
    if (threshold <= 0.0) return out;
    Money quote = quote_per_gate(c, fair);
    auto bound = static_cast<int64_t>(static_cast<double>(quote.micros) * threshold);
    if (billed.micros < bound) {
        AbuseFinding f;
        f.kind = FindingKind::UnderpricedTask;
        f.span_begin = 0;
        f.span_end = c.ops.empty() ? 0 : c.ops.size() - 1;
        std::ostringstream note;
        note << "billed " << billed.to_string() << " " << currency_name(billed.currency)
             << " under per-gate quote " << quote.to_string() << " " << currency_name(quote.currency)
             << " (threshold " << threshold << ")";
        f.note = note.str();
        out.push_back(std::move(f));
    }
    return out;
}

std::string findings_to_text(const std::vector<AbuseFinding>& findings) {
    std::ostringstream out;
    for (const auto& f : findings) {
        out << finding_kind_name(f.kind) << "\t" << f.span_begin << "-" << f.span_end << "\t"
            << f.note << "\n";
    }
    return out.str();
}

}  // namespace qsplice
