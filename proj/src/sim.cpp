#include "qsplice/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qsplice/rng.hpp"

namespace qsplice {

namespace {

constexpr double kNormTolerance = 1e-9;

using cd = std::complex<double>;

void u3_matrix(double theta, double phi, double lambda, cd m[2][2]) {
    double ct = std::cos(theta / 2.0);
    double st = std::sin(theta / 2.0);
    m[0][0] = cd(ct, 0.0);
    m[0][1] = -std::polar(st, lambda);
    m[1][0] = std::polar(st, phi);
    m[1][1] = std::polar(ct, phi + lambda);
}

}  // namespace

StateVector::StateVector(uint32_t n_qubits) : n_(n_qubits) {
    if (n_qubits > 24) {
        throw std::invalid_argument("statevector limited to 24 qubits");
    }
    amp_.assign(size_t{1} << n_qubits, cd(0.0, 0.0));
    amp_[0] = cd(1.0, 0.0);
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cd& a : amp_) s += std::norm(a);
    return s;
}

void StateVector::apply_1q(const cd m[2][2], uint32_t q) {
    size_t mask = size_t{1} << q;
    size_t block = mask << 1;
    for (size_t base = 0; base < amp_.size(); base += block) {
        for (size_t i = base; i < base + mask; i++) {
            cd a0 = amp_[i];
            cd a1 = amp_[i | mask];
            amp_[i] = m[0][0] * a0 + m[0][1] * a1;
            amp_[i | mask] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply_controlled_1q(const cd m[2][2], uint32_t control, uint32_t target) {
    size_t cmask = size_t{1} << control;
    size_t tmask = size_t{1} << target;
    for (size_t i = 0; i < amp_.size(); i++) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            cd a0 = amp_[i];
            cd a1 = amp_[i | tmask];
            amp_[i] = m[0][0] * a0 + m[0][1] * a1;
            amp_[i | tmask] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply_x(uint32_t q) {
    size_t mask = size_t{1} << q;
    size_t block = mask << 1;
    for (size_t base = 0; base < amp_.size(); base += block) {
        for (size_t i = base; i < base + mask; i++) {
            std::swap(amp_[i], amp_[i | mask]);
        }
    }
}

void StateVector::apply(const Instruction& g) {
    static const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
    switch (g.op) {
        case Op::H: {
            cd m[2][2] = {{cd(kInvSqrt2, 0), cd(kInvSqrt2, 0)},
                          {cd(kInvSqrt2, 0), cd(-kInvSqrt2, 0)}};
            apply_1q(m, g.qubits[0]);
            break;
        }
        case Op::X:
            apply_x(g.qubits[0]);
            break;
        case Op::RZ: {
            cd m[2][2] = {{std::polar(1.0, -g.angles[0] / 2.0), cd(0, 0)},
                          {cd(0, 0), std::polar(1.0, g.angles[0] / 2.0)}};
            apply_1q(m, g.qubits[0]);
            break;
        }
        case Op::U3: {
            cd m[2][2];
            u3_matrix(g.angles[0], g.angles[1], g.angles[2], m);
            apply_1q(m, g.qubits[0]);
            break;
        }
        case Op::CX: {
            cd m[2][2] = {{cd(0, 0), cd(1, 0)}, {cd(1, 0), cd(0, 0)}};
            apply_controlled_1q(m, g.qubits[0], g.qubits[1]);
            break;
        }
        case Op::CU3: {
            cd m[2][2];
            u3_matrix(g.angles[0], g.angles[1], g.angles[2], m);
            apply_controlled_1q(m, g.qubits[0], g.qubits[1]);
            break;
        }
        case Op::Barrier:
            break;
        default:
            throw std::invalid_argument("apply: not a unitary op");
    }
}

double StateVector::prob_one(uint32_t q) const {
    size_t mask = size_t{1} << q;
    double p = 0.0;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (i & mask) p += std::norm(amp_[i]);
    }
    return p;
}

int StateVector::measure_collapse(uint32_t q, ShotRng& rng) {
    double p1 = prob_one(q);
    int outcome = rng.next_unit() < p1 ? 1 : 0;
    size_t mask = size_t{1} << q;
    double kept = 0.0;
    for (size_t i = 0; i < amp_.size(); i++) {
        bool one = (i & mask) != 0;
        if (one != (outcome == 1)) {
            amp_[i] = cd(0, 0);
        } else {
            kept += std::norm(amp_[i]);
        }
    }
    double scale = 1.0 / std::sqrt(kept);
    for (cd& a : amp_) a *= scale;
    return outcome;
}

std::string ShotRecord::key() const {
    std::string s;
    for (const auto& reg : bits) {
        for (size_t i = reg.size(); i-- > 0;) {
            s.push_back(reg[i] ? '1' : '0');
        }
    }
    return s;
}

uint64_t CountsTable::total() const {
    uint64_t t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
}

namespace {

int noisy_record(int true_bit, const NoiseModel& noise, ShotRng& rng) {
    double e = true_bit ? noise.eps_read_1to0 : noise.eps_read_0to1;
    return rng.bernoulli(e) ? 1 - true_bit : true_bit;
}

// Measurement with readout noise: collapse to the true outcome, flip only the
// record (unless apply_readout_to_state also flips the qubit).
int measure_with_readout(StateVector& sv, uint32_t q, const NoiseModel& noise, ShotRng& rng) {
    int true_bit = sv.measure_collapse(q, rng);
    int rec = noisy_record(true_bit, noise, rng);
    if (noise.apply_readout_to_state && rec != true_bit) sv.apply_x(q);
    return rec;
}

// CondX fires when bit == 1 but acts as identity with probability eps_condx.
void apply_cond_x(StateVector& sv, uint32_t q, int bit, const NoiseModel& noise, ShotRng& rng) {
    if (bit == 1 && !rng.bernoulli(noise.eps_condx)) sv.apply_x(q);
}

void check_norm(const StateVector& sv) {
    if (std::fabs(sv.norm() - 1.0) > kNormTolerance) {
        throw std::logic_error("statevector norm drifted beyond 1e-9");
    }
}

ShotRecord run_shot_prepared(const Circuit& c, const NoiseModel& noise, ShotRng& rng,
                             StateVector* final_state) {
    StateVector sv(c.width);
    ShotRecord rec;
    rec.bits.resize(c.cregs.size());
    for (size_t i = 0; i < c.cregs.size(); i++) {
        rec.bits[i].assign(c.cregs[i].size, 0);
    }
    for (const auto& op : c.ops) {
        switch (op.op) {
            case Op::Measure: {
                int r = c.creg_index(op.creg);
                int bit = measure_with_readout(sv, op.qubits[0], noise, rng);
                rec.bits[static_cast<size_t>(r)][op.cbit] = static_cast<uint8_t>(bit);
                break;
            }
            case Op::Reset: {
                // Desugars to a measurement into hidden scratch plus a CondX
                // on that scratch bit; the scratch never reaches the record.
                int scratch = measure_with_readout(sv, op.qubits[0], noise, rng);
                apply_cond_x(sv, op.qubits[0], scratch, noise, rng);
                break;
            }
            case Op::CondX: {
                int r = c.creg_index(op.creg);
                int bit = rec.bits[static_cast<size_t>(r)][op.cbit];
                apply_cond_x(sv, op.qubits[0], bit, noise, rng);
                break;
            }
            case Op::Barrier:
                break;
            default:
                sv.apply(op);
                check_norm(sv);
                break;
        }
    }
    if (final_state) *final_state = sv;
    return rec;
}

}  // namespace

ShotRecord run_shot(const Circuit& c, const NoiseModel& noise, ShotRng& rng,
                    StateVector* final_state) {
    auto violations = validate(c);
    if (!violations.empty()) {
        throw std::invalid_argument("run_shot: invalid circuit:\n" +
                                    violations_to_string(violations));
    }
    return run_shot_prepared(c, noise, rng, final_state);
}

CountsTable run_shots(const Circuit& c, const NoiseModel& noise, uint64_t shots, uint64_t seed) {
    auto violations = validate(c);
    if (!violations.empty()) {
        throw std::invalid_argument("run_shots: invalid circuit:\n" +
                                    violations_to_string(violations));
    }
    CountsTable table;
    table.shots = shots;
    table.seed = seed;
    table.rng = kRngName;

    auto run_range = [&](uint64_t begin, uint64_t end, std::map<std::string, uint64_t>& counts) {
        for (uint64_t i = begin; i < end; i++) {
            ShotRng rng(ShotRng::derive(seed, i));
            ShotRecord rec = run_shot_prepared(c, noise, rng, nullptr);
            counts[rec.key()]++;
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    uint64_t n_threads = std::min<uint64_t>(hw == 0 ? 1 : hw, 8);
    if (shots < 16384 || n_threads < 2) {
        run_range(0, shots, table.counts);
        return table;
    }

    // Per-shot seeds make chunking invisible: any chunk split aggregates to
    // the same multiset of records.
    std::vector<std::map<std::string, uint64_t>> partial(n_threads);
    std::vector<std::thread> workers;
    uint64_t chunk = (shots + n_threads - 1) / n_threads;
    for (uint64_t t = 0; t < n_threads; t++) {
        uint64_t begin = t * chunk;
        uint64_t end = std::min(shots, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back(run_range, begin, end, std::ref(partial[t]));
    }
    for (auto& w : workers) w.join();
    for (const auto& p : partial) {
        for (const auto& [k, v] : p) table.counts[k] += v;
    }
    return table;
}

std::string counts_to_text(const CountsTable& t) {
    std::ostringstream out;
    out << "# shots=" << t.shots << " seed=" << t.seed << " rng=" << t.rng << "\n";
    for (const auto& [k, v] : t.counts) {
        out << k << "\t" << v << "\n";
    }
    return out.str();
}

CountsTable counts_from_text(std::string_view text) {
    CountsTable t;
    t.rng.clear();
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    bool saw_header = false;
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
                std::string val = kv.substr(eq + 1);
                if (key == "shots") t.shots = std::strtoull(val.c_str(), nullptr, 10);
                if (key == "seed") t.seed = std::strtoull(val.c_str(), nullptr, 10);
                if (key == "rng") t.rng = val;
            }
            saw_header = true;
            continue;
        }
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error("counts line " + std::to_string(line_no) +
                                     ": expected BITSTRING<TAB>COUNT");
        }
        std::string bits = line.substr(0, tab);
        std::string count = line.substr(tab + 1);
        if (bits.find_first_not_of("01") != std::string::npos || count.empty() ||
            count.find_first_not_of("0123456789") != std::string::npos) {
            throw std::runtime_error("counts line " + std::to_string(line_no) +
                                     ": expected BITSTRING<TAB>COUNT");
        }
        t.counts[bits] += std::strtoull(count.c_str(), nullptr, 10);
    }
    if (!saw_header) t.shots = t.total();
    return t;
}

void write_counts_file(const CountsTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write counts file: " + path);
    }
    out << counts_to_text(t);
}

CountsTable read_counts_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open counts file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return counts_from_text(buf.str());
}

CountsTable merge_counts(const CountsTable& a, const CountsTable& b) {
    CountsTable t = a;
    t.shots = a.shots + b.shots;
    for (const auto& [k, v] : b.counts) t.counts[k] += v;
    return t;
}

}  // namespace qsplice
