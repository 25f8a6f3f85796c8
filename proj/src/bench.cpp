#include "qsplice/bench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsplice/rng.hpp"

namespace qsplice {

namespace {

constexpr double kPi = std::numbers::pi;

void measure_all(Circuit& c, const std::string& reg) {
    c.cregs.push_back({reg, c.width});
    for (uint32_t q = 0; q < c.width; q++) {
        c.ops.push_back(Instruction::measure(q, reg, q));
    }
}

// Controlled phase diag(1,1,1,e^{i*theta}) in the native gate set.
Instruction cphase(double theta, uint32_t control, uint32_t target) {
    return Instruction::cu3(0.0, 0.0, theta, control, target);
}

// CZ via H-conjugated CX.
void append_cz(Circuit& c, uint32_t a, uint32_t b) {
    c.ops.push_back(Instruction::h(b));
    c.ops.push_back(Instruction::cx(a, b));
    c.ops.push_back(Instruction::h(b));
}

Circuit build_bell() {
    Circuit c;
    c.width = 2;
    c.label = "bell";
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::cx(0, 1));
    measure_all(c, "c");
    return c;
}

Circuit build_ghz(uint32_t n) {
    Circuit c;
    c.width = n;
    c.label = "ghz" + std::to_string(n);
    c.ops.push_back(Instruction::h(0));
    for (uint32_t q = 0; q + 1 < n; q++) {
        c.ops.push_back(Instruction::cx(q, q + 1));
    }
    measure_all(c, "c");
    return c;
}

// Maps |k> to (1/sqrt(2^n)) sum_l exp(2*pi*i*k*l/2^n) |l> with qubit j holding
// bit j of the index. Rotations first, then the bit-reversing swaps.
void append_qft(Circuit& c, uint32_t n) {
    for (uint32_t j = n; j-- > 0;) {
        c.ops.push_back(Instruction::h(j));
        for (uint32_t m = 0; m < j; m++) {
            c.ops.push_back(cphase(kPi / static_cast<double>(1u << (j - m)), m, j));
        }
    }
    for (uint32_t i = 0; i < n / 2; i++) {
        uint32_t j = n - 1 - i;
        c.ops.push_back(Instruction::cx(i, j));
        c.ops.push_back(Instruction::cx(j, i));
        c.ops.push_back(Instruction::cx(i, j));
    }
}

void append_inverse_qft(Circuit& c, uint32_t n) {
    for (uint32_t i = 0; i < n / 2; i++) {
        uint32_t j = n - 1 - i;
        c.ops.push_back(Instruction::cx(i, j));
        c.ops.push_back(Instruction::cx(j, i));
        c.ops.push_back(Instruction::cx(i, j));
    }
    for (uint32_t j = 0; j < n; j++) {
        for (uint32_t m = j; m-- > 0;) {
            c.ops.push_back(cphase(-kPi / static_cast<double>(1u << (j - m)), m, j));
        }
        c.ops.push_back(Instruction::h(j));
    }
}

Circuit build_qft(uint32_t n) {
    Circuit c;
    c.width = n;
    c.label = "qft" + std::to_string(n);
    append_qft(c, n);
    measure_all(c, "c");
    return c;
}

// q0 carries the prepared state, (q1,q2) the Bell pair; the conditional Z
// correction is H-conjugated into the conditional X available in the gate set.
Circuit build_teleportation() {
    Circuit c;
    c.width = 3;
    c.label = "teleport";
    c.cregs.push_back({"m", 2});
    c.cregs.push_back({"out", 1});
    c.ops.push_back(Instruction::u3(kPi / 3.0, 0.0, 0.0, 0));
    c.ops.push_back(Instruction::h(1));
    c.ops.push_back(Instruction::cx(1, 2));
    c.ops.push_back(Instruction::cx(0, 1));
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::measure(0, "m", 0));
    c.ops.push_back(Instruction::measure(1, "m", 1));
    c.ops.push_back(Instruction::cond_x("m", 1, 2));
    c.ops.push_back(Instruction::h(2));
    c.ops.push_back(Instruction::cond_x("m", 0, 2));
    c.ops.push_back(Instruction::h(2));
    c.ops.push_back(Instruction::measure(2, "out", 0));
    return c;
}

Circuit build_ansatz(uint32_t n, uint32_t layers, const std::vector<double>& angles) {
    Circuit c;
    c.width = n;
    c.label = "ansatz" + std::to_string(n) + "x" + std::to_string(layers);
    if (angles.size() != static_cast<size_t>(n) * layers) {
        throw std::invalid_argument("ansatz: need one angle per qubit per layer");
    }
    for (uint32_t l = 0; l < layers; l++) {
        for (uint32_t q = 0; q < n; q++) {
            c.ops.push_back(Instruction::u3(angles[l * n + q], 0.0, 0.0, q));
        }
        for (uint32_t q = 0; q + 1 < n; q++) {
            c.ops.push_back(Instruction::cx(q, q + 1));
        }
    }
    measure_all(c, "c");
    return c;
}

// Two-qubit Grover with one iteration: exact hit on the marked state.
Circuit build_grover2q(const std::string& marked) {
    if (marked.size() != 2 || marked.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("grover2q: marked state must be 2 bits of 0/1");
    }
    Circuit c;
    c.width = 2;
    c.label = "grover2q_" + marked;
    // marked is msb-first: marked[0] is qubit 1, marked[1] is qubit 0.
    bool q1_zero = marked[0] == '0';
    bool q0_zero = marked[1] == '0';
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::h(1));
    // Oracle: flip the sign of |marked>.
    if (q0_zero) c.ops.push_back(Instruction::x(0));
    if (q1_zero) c.ops.push_back(Instruction::x(1));
    append_cz(c, 0, 1);
    if (q0_zero) c.ops.push_back(Instruction::x(0));
    if (q1_zero) c.ops.push_back(Instruction::x(1));
    // Diffusion about the mean.
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::h(1));
    c.ops.push_back(Instruction::x(0));
    c.ops.push_back(Instruction::x(1));
    append_cz(c, 0, 1);
    c.ops.push_back(Instruction::x(0));
    c.ops.push_back(Instruction::x(1));
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::h(1));
    measure_all(c, "c");
    return c;
}

// n counting qubits, target prepared in |1>; the eigenphase phi is kicked
// back via controlled phase gates, then decoded by the inverse transform.
// When phi * 2^n is an integer the counting register is exact.
Circuit build_qpe(uint32_t n, double phase) {
    Circuit c;
    c.width = n + 1;
    c.label = "qpe" + std::to_string(n);
    c.cregs.push_back({"phase", n});
    c.cregs.push_back({"anc", 1});
    uint32_t target = n;
    c.ops.push_back(Instruction::x(target));
    for (uint32_t j = 0; j < n; j++) {
        c.ops.push_back(Instruction::h(j));
    }
    for (uint32_t j = 0; j < n; j++) {
        double theta = 2.0 * kPi * phase * static_cast<double>(1u << j);
        c.ops.push_back(cphase(theta, j, target));
    }
    append_inverse_qft(c, n);
    for (uint32_t j = 0; j < n; j++) {
        c.ops.push_back(Instruction::measure(j, "phase", j));
    }
    c.ops.push_back(Instruction::measure(target, "anc", 0));
    return c;
}

// Phase-kickback oracle of CX fans; the ancilla is uncomputed to |0> so the
// whole outcome is deterministic.
Circuit build_bv(const std::string& hidden) {
    if (hidden.empty() || hidden.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("bernstein-vazirani: hidden string must be bits");
    }
    uint32_t n = static_cast<uint32_t>(hidden.size());
    Circuit c;
    c.width = n + 1;
    c.label = "bv_" + hidden;
    c.cregs.push_back({"out", n});
    c.cregs.push_back({"anc", 1});
    uint32_t anc = n;
    c.ops.push_back(Instruction::x(anc));
    c.ops.push_back(Instruction::h(anc));
    for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::h(q));
    for (uint32_t q = 0; q < n; q++) {
        // hidden is msb-first: bit q of the secret is hidden[n-1-q].
        if (hidden[n - 1 - q] == '1') c.ops.push_back(Instruction::cx(q, anc));
    }
    for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::h(q));
    c.ops.push_back(Instruction::h(anc));
    c.ops.push_back(Instruction::x(anc));
    for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::measure(q, "out", q));
    c.ops.push_back(Instruction::measure(anc, "anc", 0));
    return c;
}

// Constant oracle: empty. Balanced oracle: CX fan from every input to the
// ancilla (f = parity). Inputs read all zeros iff the oracle is constant.
Circuit build_dj(uint32_t n, bool balanced) {
    Circuit c;
    c.width = n + 1;
    c.label = "dj" + std::to_string(n) + (balanced ? "_balanced" : "_constant");
    c.cregs.push_back({"out", n});
    c.cregs.push_back({"anc", 1});
    uint32_t anc = n;
    c.ops.push_back(Instruction::x(anc));
    c.ops.push_back(Instruction::h(anc));
    for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::h(q));
    if (balanced) {
        for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::cx(q, anc));
    }
    for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::h(q));
    c.ops.push_back(Instruction::h(anc));
    c.ops.push_back(Instruction::x(anc));
    for (uint32_t q = 0; q < n; q++) c.ops.push_back(Instruction::measure(q, "out", q));
    c.ops.push_back(Instruction::measure(anc, "anc", 0));
    return c;
}

}  // namespace

const char* bench_kind_name(BenchKind k) {
    switch (k) {
        case BenchKind::Bell: return "bell";
        case BenchKind::Ghz: return "ghz";
        case BenchKind::Qft: return "qft";
        case BenchKind::Teleportation: return "teleport";
        case BenchKind::VariationalAnsatz: return "ansatz";
        case BenchKind::Grover2Q: return "grover";
        case BenchKind::PhaseEstimation: return "qpe";
        case BenchKind::BernsteinVazirani: return "bv";
        case BenchKind::DeutschJozsa: return "dj";
    }
    return "?";
}

BenchKind bench_kind_from_name(const std::string& name) {
    for (BenchKind k : {BenchKind::Bell, BenchKind::Ghz, BenchKind::Qft,
                        BenchKind::Teleportation, BenchKind::VariationalAnsatz,
                        BenchKind::Grover2Q, BenchKind::PhaseEstimation,
                        BenchKind::BernsteinVazirani, BenchKind::DeutschJozsa}) {
        if (name == bench_kind_name(k)) return k;
    }
    throw std::invalid_argument("unknown benchmark kind '" + name + "'");
}

const std::vector<double>& default_ansatz_angles() {
    static const std::vector<double> kAngles = {0.3, 0.7, 1.1, 0.2, 0.5, 0.9};
    return kAngles;
}

BenchSpec BenchSpec::defaults(BenchKind kind) {
    BenchSpec s;
    s.kind = kind;
    switch (kind) {
        case BenchKind::Bell: break;
        case BenchKind::Ghz: s.n = 3; break;
        case BenchKind::Qft: s.n = 3; break;
        case BenchKind::Teleportation: break;
        case BenchKind::VariationalAnsatz:
            s.n = 3;
            s.layers = 2;
            break;
        case BenchKind::Grover2Q: s.marked = "11"; break;
        case BenchKind::PhaseEstimation:
            s.n = 3;
            s.phase = 0.125;
            break;
        case BenchKind::BernsteinVazirani: s.hidden = "101"; break;
        case BenchKind::DeutschJozsa:
            s.n = 3;
            s.balanced = true;
            break;
    }
    return s;
}

Circuit build(const BenchSpec& spec) {
    switch (spec.kind) {
        case BenchKind::Bell:
            return build_bell();
        case BenchKind::Ghz:
            if (spec.n < 2) throw std::invalid_argument("ghz: need n >= 2");
            return build_ghz(spec.n);
        case BenchKind::Qft:
            if (spec.n < 1) throw std::invalid_argument("qft: need n >= 1");
            return build_qft(spec.n);
        case BenchKind::Teleportation:
            return build_teleportation();
        case BenchKind::VariationalAnsatz: {
            if (spec.n < 2) throw std::invalid_argument("ansatz: need n >= 2");
            const auto& angles = spec.angles.empty() ? default_ansatz_angles() : spec.angles;
            return build_ansatz(spec.n, spec.layers, angles);
        }
        case BenchKind::Grover2Q:
            return build_grover2q(spec.marked);
        case BenchKind::PhaseEstimation:
            if (spec.n < 1) throw std::invalid_argument("qpe: need n >= 1 counting qubits");
            return build_qpe(spec.n, spec.phase);
        case BenchKind::BernsteinVazirani:
            return build_bv(spec.hidden);
        case BenchKind::DeutschJozsa:
            if (spec.n < 1) throw std::invalid_argument("dj: need n >= 1 inputs");
            return build_dj(spec.n, spec.balanced);
    }
    throw std::invalid_argument("unknown benchmark kind");
}

Circuit build_reset_test(uint32_t k) {
    if (k < 1 || k > 31) {
        throw std::invalid_argument("reset test: k must be in [1, 31]");
    }
    Circuit c;
    c.width = 1;
    c.label = "reset_test_k" + std::to_string(k);
    c.cregs.push_back({"r", k});
    c.ops.push_back(Instruction::x(0));
    for (uint32_t i = 0; i < k; i++) {
        c.ops.push_back(Instruction::barrier({0}));
        c.ops.push_back(Instruction::measure(0, "r", i));
        c.ops.push_back(Instruction::cond_x("r", i, 0));
    }
    return c;
}

std::vector<BenchKind> generate_mix(const MixSpec& spec) {
    if (spec.pool.empty()) {
        throw std::invalid_argument("mix: pool is empty");
    }
    ShotRng rng(ShotRng::derive(spec.seed, 0));
    std::vector<BenchKind> out;
    out.reserve(spec.count);
    for (uint32_t i = 0; i < spec.count; i++) {
        out.push_back(spec.pool[rng.below(spec.pool.size())]);
    }
    return out;
}

std::vector<BenchKind> default_mix_pool(bool nine_kinds) {
    std::vector<BenchKind> pool = {
        BenchKind::Bell,           BenchKind::Qft,
        BenchKind::Teleportation,  BenchKind::VariationalAnsatz,
        BenchKind::Grover2Q,       BenchKind::PhaseEstimation,
        BenchKind::BernsteinVazirani, BenchKind::DeutschJozsa,
    };
    if (nine_kinds) pool.push_back(BenchKind::Ghz);
    return pool;
}

namespace {

// Published composite workloads, in submission order.
constexpr BenchKind GHZ = BenchKind::Ghz;
constexpr BenchKind BV = BenchKind::BernsteinVazirani;
constexpr BenchKind BELL = BenchKind::Bell;
constexpr BenchKind TP = BenchKind::Teleportation;
constexpr BenchKind GR = BenchKind::Grover2Q;
constexpr BenchKind DJ = BenchKind::DeutschJozsa;
constexpr BenchKind PE = BenchKind::PhaseEstimation;
constexpr BenchKind VA = BenchKind::VariationalAnsatz;
constexpr BenchKind QFT = BenchKind::Qft;

const std::vector<BenchKind> kMix8 = {GHZ, BV, BELL, TP, GR, DJ, PE, VA};

const std::vector<BenchKind> kMix16 = {TP, VA, BV, BV, VA, TP, TP, BELL,
                                       BV, BV, BELL, BV, BV, GR, GR, BV};

const std::vector<BenchKind> kMix32 = {
    BV, DJ, DJ, TP, BV, PE, VA, DJ, TP, BELL, GR, BELL, PE, PE, PE, DJ,
    BV, VA, TP, TP, GR, BELL, BELL, DJ, VA, TP, VA, BV, GR, TP, BV, GR};

const std::vector<BenchKind> kMix48 = {
    VA, BELL, BV, BV, PE, GR, BV, BELL, BV, BELL, BV, PE, TP, BV, TP, TP,
    DJ, TP, VA, TP, PE, TP, GR, GR, PE, TP, VA, GR, TP, GR, BV, TP,
    VA, BELL, TP, DJ, BV, BELL, BELL, GR, PE, TP, BELL, BV, GR, GR, GR, DJ};

const std::vector<BenchKind> kMix64 = {
    BELL, VA, PE, TP, BV, VA, PE, VA, PE, PE, PE, GR, DJ, GR, TP, PE,
    DJ, TP, BV, PE, GR, DJ, TP, VA, DJ, BELL, BV, TP, TP, GR, BV, BV,
    TP, TP, PE, PE, DJ, PE, DJ, DJ, VA, BV, BELL, TP, TP, PE, BELL, GR,
    DJ, PE, DJ, DJ, TP, PE, BV, BELL, DJ, PE, VA, TP, BELL, DJ, GR, PE};

const std::vector<BenchKind> kMix80 = {
    TP, PE, BELL, DJ, GR, BELL, VA, PE, BELL, PE, PE, PE, DJ, TP, GR, GR,
    PE, PE, VA, TP, VA, TP, DJ, BV, PE, TP, BELL, BV, TP, PE, PE, PE,
    DJ, DJ, TP, DJ, DJ, DJ, BV, DJ, BV, GR, GR, PE, TP, TP, PE, GR,
    GR, PE, PE, BV, TP, GR, TP, BV, VA, VA, BELL, VA, BELL, TP, GR, GR,
    GR, TP, BELL, GR, PE, TP, BV, BELL, BV, BV, VA, TP, BV, DJ, GR, PE};

const std::vector<BenchKind> kMix4A = {QFT, DJ, BELL, TP};
const std::vector<BenchKind> kMix4B = {TP, DJ, PE, VA};
const std::vector<BenchKind> kMix4C = {BV, PE, QFT, GR};
const std::vector<BenchKind> kMix4D = {BELL, PE, BV, TP};

const std::vector<BenchKind>* preset_kinds(const std::string& name) {
    if (name == "mix8") return &kMix8;
    if (name == "mix16") return &kMix16;
    if (name == "mix32") return &kMix32;
    if (name == "mix48") return &kMix48;
    if (name == "mix64") return &kMix64;
    if (name == "mix80") return &kMix80;
    if (name == "mix4a") return &kMix4A;
    if (name == "mix4b") return &kMix4B;
    if (name == "mix4c") return &kMix4C;
    if (name == "mix4d") return &kMix4D;
    return nullptr;
}

}  // namespace

std::vector<BenchSpec> preset_mix(const std::string& name) {
    const std::vector<BenchKind>* kinds = preset_kinds(name);
    if (!kinds) {
        throw std::invalid_argument("unknown preset mix '" + name + "'");
    }
    std::vector<BenchSpec> out;
    out.reserve(kinds->size());
    for (BenchKind k : *kinds) out.push_back(BenchSpec::defaults(k));
    return out;
}

std::vector<std::string> preset_mix_names() {
    return {"mix4a", "mix4b", "mix4c", "mix4d", "mix8", "mix16", "mix32", "mix48", "mix64", "mix80"};
}

}  // namespace qsplice
