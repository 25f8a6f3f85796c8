#include "qsplice/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsplice {

const char* op_name(Op op) {
    switch (op) {
        case Op::H: return "h";
        case Op::X: return "x";
        case Op::RZ: return "rz";
        case Op::U3: return "u3";
        case Op::CX: return "cx";
        case Op::CU3: return "cu3";
        case Op::Measure: return "measure";
        case Op::Reset: return "reset";
        case Op::CondX: return "xif";
        case Op::Barrier: return "barrier";
    }
    return "?";
}

Instruction Instruction::h(uint32_t q) { return Instruction{Op::H, {q}}; }

Instruction Instruction::x(uint32_t q) { return Instruction{Op::X, {q}}; }

Instruction Instruction::rz(double theta, uint32_t q) {
    Instruction g{Op::RZ, {q}};
    g.angles[0] = theta;
    return g;
}

Instruction Instruction::u3(double theta, double phi, double lambda, uint32_t q) {
    Instruction g{Op::U3, {q}};
    g.angles = {theta, phi, lambda};
    return g;
}

Instruction Instruction::cx(uint32_t control, uint32_t target) {
    return Instruction{Op::CX, {control, target}};
}

Instruction Instruction::cu3(double theta, double phi, double lambda, uint32_t control,
                             uint32_t target) {
    Instruction g{Op::CU3, {control, target}};
    g.angles = {theta, phi, lambda};
    return g;
}

Instruction Instruction::measure(uint32_t q, std::string creg, uint32_t bit) {
    Instruction g{Op::Measure, {q}};
    g.creg = std::move(creg);
    g.cbit = bit;
    return g;
}

Instruction Instruction::reset(uint32_t q) { return Instruction{Op::Reset, {q}}; }

Instruction Instruction::cond_x(std::string creg, uint32_t bit, uint32_t q) {
    Instruction g{Op::CondX, {q}};
    g.creg = std::move(creg);
    g.cbit = bit;
    return g;
}

Instruction Instruction::barrier(std::vector<uint32_t> qubits) {
    return Instruction{Op::Barrier, std::move(qubits)};
}

int Circuit::creg_index(const std::string& name) const {
    for (size_t i = 0; i < cregs.size(); i++) {
        if (cregs[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

uint32_t Circuit::total_creg_bits() const {
    uint32_t total = 0;
    for (const auto& r : cregs) total += r.size;
    return total;
}

GateCensus census(const Circuit& c) {
    GateCensus g;
    std::vector<uint64_t> level(c.width, 0);
    auto bump = [&](const std::vector<uint32_t>& qs) {
        uint64_t base = 0;
        for (uint32_t q : qs) base = std::max(base, level[q]);
        for (uint32_t q : qs) level[q] = base + 1;
    };
    for (const auto& op : c.ops) {
        switch (op.op) {
            case Op::Barrier:
                break;
            case Op::Measure:
                // Record-only: occupies no layer, so a circuit closed by
                // measurements keeps its gate depth.
                g.n_meas++;
                break;
            case Op::Reset:
                g.n_reset++;
                bump(op.qubits);
                break;
            case Op::CX:
            case Op::CU3:
                g.n_2q++;
                bump(op.qubits);
                break;
            default:
                g.n_1q++;
                bump(op.qubits);
                break;
        }
    }
    for (uint64_t l : level) g.depth = std::max(g.depth, l);
    return g;
}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

size_t expected_arity(Op op) {
    switch (op) {
        case Op::CX:
        case Op::CU3:
            return 2;
        case Op::Barrier:
            return 0;  // any
        default:
            return 1;
    }
}

}  // namespace

std::vector<Violation> validate(const Circuit& c) {
    std::vector<Violation> out;
    if (c.width < 1) out.push_back({-1, "circuit width must be >= 1"});
    std::set<std::string> seen;
    for (const auto& r : c.cregs) {
        if (!valid_name(r.name)) out.push_back({-1, "invalid creg name '" + r.name + "'"});
        if (r.size < 1) out.push_back({-1, "creg '" + r.name + "' must have size >= 1"});
        if (!seen.insert(r.name).second)
            out.push_back({-1, "duplicate creg name '" + r.name + "'"});
    }
    for (size_t i = 0; i < c.ops.size(); i++) {
        const auto& op = c.ops[i];
        int idx = static_cast<int>(i);
        std::string name = op_name(op.op);
        size_t arity = expected_arity(op.op);
        if (op.op != Op::Barrier && op.qubits.size() != arity) {
            out.push_back({idx, name + ": expected " + std::to_string(arity) + " qubit operands"});
            continue;
        }
        bool in_range = true;
        for (uint32_t q : op.qubits) {
            if (q >= c.width) {
                out.push_back({idx, name + ": qubit " + std::to_string(q) + " out of range (width " +
                                         std::to_string(c.width) + ")"});
                in_range = false;
            }
        }
        if (!in_range) continue;
        if ((op.op == Op::CX || op.op == Op::CU3) && op.qubits[0] == op.qubits[1]) {
            out.push_back({idx, name + ": control and target must differ"});
        }
        for (double a : op.angles) {
            if (!std::isfinite(a)) {
                out.push_back({idx, name + ": non-finite angle"});
                break;
            }
        }
        if (op.op == Op::Measure || op.op == Op::CondX) {
            int r = c.creg_index(op.creg);
            if (r < 0) {
                out.push_back({idx, name + ": creg '" + op.creg + "' not declared"});
            } else if (op.cbit >= c.cregs[static_cast<size_t>(r)].size) {
                out.push_back({idx, name + ": bit " + std::to_string(op.cbit) +
                                         " out of range for creg '" + op.creg + "'"});
            }
        }
    }
    return out;
}

bool is_valid(const Circuit& c) { return validate(c).empty(); }

std::string violations_to_string(const std::vector<Violation>& v) {
    std::ostringstream out;
    for (const auto& item : v) {
        if (item.op_index >= 0) out << "op " << item.op_index << ": ";
        out << item.message << "\n";
    }
    return out.str();
}

Circuit concat(const Circuit& a, const Circuit& b) {
    Circuit c;
    c.width = std::max(a.width, b.width);
    c.label = a.label;
    c.cregs = a.cregs;
    for (const auto& r : b.cregs) {
        int i = c.creg_index(r.name);
        if (i < 0) {
            c.cregs.push_back(r);
        } else if (c.cregs[static_cast<size_t>(i)].size != r.size) {
            throw std::invalid_argument("concat: creg '" + r.name + "' declared with two sizes");
        }
    }
    c.ops = a.ops;
    c.ops.insert(c.ops.end(), b.ops.begin(), b.ops.end());
    return c;
}

bool structurally_equal(const Circuit& a, const Circuit& b, double angle_tol) {
    if (a.width != b.width) return false;
    if (a.cregs.size() != b.cregs.size()) return false;
    for (size_t i = 0; i < a.cregs.size(); i++) {
        if (a.cregs[i].name != b.cregs[i].name || a.cregs[i].size != b.cregs[i].size) return false;
    }
    if (a.ops.size() != b.ops.size()) return false;
    for (size_t i = 0; i < a.ops.size(); i++) {
        const auto& x = a.ops[i];
        const auto& y = b.ops[i];
        if (x.op != y.op || x.qubits != y.qubits || x.creg != y.creg || x.cbit != y.cbit)
            return false;
        for (int j = 0; j < 3; j++) {
            double tol = angle_tol + 1e-12 * std::fabs(x.angles[j]);
            if (std::fabs(x.angles[j] - y.angles[j]) > tol) return false;
        }
    }
    return true;
}

}  // namespace qsplice
