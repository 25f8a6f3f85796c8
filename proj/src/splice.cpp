#include "qsplice/splice.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsplice {

SpliceResult splice(const SpliceSpec& spec) {
    if (spec.parts.empty()) {
        throw std::invalid_argument("splice: parts list is empty");
    }
    if (!spec.prefixes.empty() && spec.prefixes.size() != spec.parts.size()) {
        throw std::invalid_argument("splice: prefixes must match parts one to one");
    }
    for (size_t i = 0; i < spec.parts.size(); i++) {
        auto violations = validate(spec.parts[i]);
        if (!violations.empty()) {
            throw std::invalid_argument("splice: part " + std::to_string(i) + " is invalid:\n" +
                                        violations_to_string(violations));
        }
    }

    Circuit composite;
    composite.width = 0;
    for (const auto& p : spec.parts) {
        composite.width = std::max(composite.width, p.width);
    }
    composite.label = "composite";

    SpliceMap map;
    map.effective_shots_factor = spec.parts.size();

    std::set<std::string> names;
    size_t offset = 0;
    std::vector<std::string> prefixes(spec.parts.size());
    for (size_t i = 0; i < spec.parts.size(); i++) {
        prefixes[i] = spec.prefixes.empty() ? "p" + std::to_string(i) + "_" : spec.prefixes[i];
        PartSpan span;
        span.label = spec.parts[i].label.empty() ? "part" + std::to_string(i) : spec.parts[i].label;
        span.offset = offset;
        for (const auto& r : spec.parts[i].cregs) {
            std::string name = prefixes[i] + r.name;
            if (!names.insert(name).second) {
                throw std::invalid_argument("splice: duplicate creg name after relabeling: " + name);
            }
            composite.cregs.push_back({name, r.size});
            span.regs.push_back({name, offset, r.size});
            offset += r.size;
            span.total_bits += r.size;
        }
        map.parts.push_back(std::move(span));
    }
    map.total_bits = offset;

    for (size_t i = 0; i < spec.parts.size(); i++) {
        if (i > 0) {
            // Separator: k rounds of resetting every composite qubit.
            for (uint32_t round = 0; round < spec.k_resets; round++) {
                for (uint32_t q = 0; q < composite.width; q++) {
                    composite.ops.push_back(Instruction::reset(q));
                }
            }
        }
        for (const auto& op : spec.parts[i].ops) {
            Instruction copy = op;
            if (op.op == Op::Measure || op.op == Op::CondX) {
                copy.creg = prefixes[i] + op.creg;
            }
            composite.ops.push_back(std::move(copy));
        }
    }
    return SpliceResult{std::move(composite), std::move(map)};
}

std::vector<CountsTable> split_counts(const CountsTable& composite, const SpliceMap& map) {
    std::vector<CountsTable> out(map.parts.size());
    for (size_t i = 0; i < map.parts.size(); i++) {
        out[i].shots = composite.shots;
        out[i].seed = composite.seed;
        out[i].rng = composite.rng;
    }
    for (const auto& [key, count] : composite.counts) {
        if (key.size() != map.total_bits) {
            throw std::invalid_argument("split_counts: key '" + key +
                                        "' does not match the map's total bit count");
        }
        for (size_t i = 0; i < map.parts.size(); i++) {
            const PartSpan& span = map.parts[i];
            out[i].counts[key.substr(span.offset, span.total_bits)] += count;
        }
    }
    return out;
}

std::string splice_map_to_text(const SpliceMap& map) {
    std::ostringstream out;
    out << "# parts=" << map.parts.size() << " total_bits=" << map.total_bits
        << " effective_shots_factor=" << map.effective_shots_factor << "\n";
    for (size_t i = 0; i < map.parts.size(); i++) {
        const PartSpan& span = map.parts[i];
        out << i << "\t" << span.label << "\t";
        for (size_t j = 0; j < span.regs.size(); j++) {
            if (j > 0) out << ",";
            out << span.regs[j].name << ":" << span.regs[j].offset << ":" << span.regs[j].length;
        }
        out << "\n";
    }
    return out.str();
}

SpliceMap splice_map_from_text(std::string_view text) {
    SpliceMap map;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string kv;
            while (hs >> kv) {
                size_t eq = kv.find('=');
                if (eq == std::string::npos) continue;
                std::string key = kv.substr(0, eq);
                uint64_t val = std::strtoull(kv.c_str() + eq + 1, nullptr, 10);
                if (key == "total_bits") map.total_bits = val;
                if (key == "effective_shots_factor") map.effective_shots_factor = val;
            }
            continue;
        }
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos) {
            throw std::runtime_error("splice map line " + std::to_string(line_no) +
                                     ": expected PART_INDEX<TAB>LABEL<TAB>SPANS");
        }
        PartSpan span;
        span.label = line.substr(t1 + 1, t2 - t1 - 1);
        std::string spans = line.substr(t2 + 1);
        size_t pos = 0;
        bool first = true;
        while (pos < spans.size()) {
            size_t comma = spans.find(',', pos);
            std::string item = spans.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
            size_t c1 = item.rfind(':');
            size_t c0 = c1 == std::string::npos ? std::string::npos : item.rfind(':', c1 - 1);
            if (c0 == std::string::npos) {
                throw std::runtime_error("splice map line " + std::to_string(line_no) +
                                         ": expected NAME:OFFSET:LEN");
            }
            RegSpan reg;
            reg.name = item.substr(0, c0);
            reg.offset = std::strtoull(item.c_str() + c0 + 1, nullptr, 10);
            reg.length = std::strtoull(item.c_str() + c1 + 1, nullptr, 10);
            if (first) {
                span.offset = reg.offset;
                first = false;
            }
            span.total_bits += reg.length;
            span.regs.push_back(std::move(reg));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        map.parts.push_back(std::move(span));
    }
    return map;
}

void write_splice_map_file(const SpliceMap& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write splice map file: " + path);
    }
    out << splice_map_to_text(map);
}

SpliceMap read_splice_map_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open splice map file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return splice_map_from_text(buf.str());
}

}  // namespace qsplice
