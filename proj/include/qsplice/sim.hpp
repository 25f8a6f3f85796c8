#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsplice/circuit.hpp"
#include "qsplice/rng.hpp"

namespace qsplice {

// Error channels applied by the trajectory simulator. Unitaries are ideal;
// noise enters through measurement records and through CondX failures.
//   eps_read_1to0 / eps_read_0to1: probability the recorded bit is flipped.
//   eps_condx: probability a triggered CondX acts as identity.
//   apply_readout_to_state: when true, a misread also projects the qubit onto
//   the recorded basis state. Default false: the qubit collapses to the true
//   outcome and only the record is flipped, which keeps the effective reset
//   fidelity an exact product (1-eps_read_1to0)*(1-eps_condx).
struct NoiseModel {
    double eps_read_1to0 = 0.0326;
    double eps_read_0to1 = 0.0326;
    double eps_condx = 0.0020;
    bool apply_readout_to_state = false;

    static NoiseModel defaults() { return NoiseModel{}; }
    static NoiseModel noiseless() { return NoiseModel{0.0, 0.0, 0.0, false}; }
};

class StateVector {
  public:
    explicit StateVector(uint32_t n_qubits);

    uint32_t n_qubits() const { return n_; }
    size_t size() const { return amp_.size(); }
    std::complex<double> amplitude(size_t i) const { return amp_[i]; }
    double norm() const;

    // Unitary kinds only (H, X, RZ, U3, CX, CU3; Barrier is a no-op).
    // Measure/Reset/CondX are trajectory steps handled by run_shot.
    void apply(const Instruction& g);

    void apply_1q(const std::complex<double> m[2][2], uint32_t q);
    void apply_controlled_1q(const std::complex<double> m[2][2], uint32_t control, uint32_t target);
    void apply_x(uint32_t q);

    // Probability that qubit q reads 1.
    double prob_one(uint32_t q) const;
    // Born-samples qubit q, collapses to the true outcome, renormalizes
    // exactly, and returns the true outcome.
    int measure_collapse(uint32_t q, ShotRng& rng);

  private:
    uint32_t n_;
    std::vector<std::complex<double>> amp_;
};

// Final classical register contents of one trajectory; bits[r][i] is bit i of
// declared register r. The most recent write to a bit wins.
struct ShotRecord {
    std::vector<std::vector<uint8_t>> bits;

    // Registers concatenated in declaration order, each rendered most
    // significant bit first (bit size-1 leftmost). This is the key layout of
    // CountsTable and of splice bit spans.
    std::string key() const;
};

struct CountsTable {
    std::map<std::string, uint64_t> counts;
    uint64_t shots = 0;
    uint64_t seed = 0;
    std::string rng = kRngName;

    uint64_t total() const;
};

// One trajectory. Throws std::invalid_argument when validate(c) fails. If
// final_state is non-null it receives the post-circuit state (used by the
// reset-residual oracles, which must observe the state without readout noise).
ShotRecord run_shot(const Circuit& c, const NoiseModel& noise, ShotRng& rng,
                    StateVector* final_state = nullptr);

// S independent trajectories with per-shot derived seeds. Bitwise identical
// output for identical (c, noise, shots, seed); shots may be evaluated
// concurrently, aggregation is by shot index.
CountsTable run_shots(const Circuit& c, const NoiseModel& noise, uint64_t shots, uint64_t seed);

// File form: "# shots=S seed=SEED rng=NAME" header, then BITSTRING<TAB>COUNT
// lines sorted lexicographically, LF endings.
std::string counts_to_text(const CountsTable& t);
CountsTable counts_from_text(std::string_view text);
void write_counts_file(const CountsTable& t, const std::string& path);
CountsTable read_counts_file(const std::string& path);

// Pools two tables (shots add, counts add). Seed metadata keeps the left
// seed; merging is used by the shot-independence property.
CountsTable merge_counts(const CountsTable& a, const CountsTable& b);

}  // namespace qsplice
