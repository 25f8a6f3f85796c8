#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qsplice {

enum class Op : uint8_t {
    H,
    X,
    RZ,
    U3,
    CX,
    CU3,
    Measure,
    Reset,
    CondX,
    Barrier,
};

const char* op_name(Op op);

// One IR instruction. qubits holds {target} for 1q ops, {control, target} for
// CX/CU3, and the barrier's qubit set. angles are (theta, phi, lambda); RZ uses
// only theta. creg/cbit are the classical operands of Measure and CondX.
struct Instruction {
    Op op = Op::Barrier;
    std::vector<uint32_t> qubits;
    std::array<double, 3> angles{0.0, 0.0, 0.0};
    std::string creg;
    uint32_t cbit = 0;

    static Instruction h(uint32_t q);
    static Instruction x(uint32_t q);
    static Instruction rz(double theta, uint32_t q);
    static Instruction u3(double theta, double phi, double lambda, uint32_t q);
    static Instruction cx(uint32_t control, uint32_t target);
    static Instruction cu3(double theta, double phi, double lambda, uint32_t control, uint32_t target);
    static Instruction measure(uint32_t q, std::string creg, uint32_t bit);
    static Instruction reset(uint32_t q);
    static Instruction cond_x(std::string creg, uint32_t bit, uint32_t q);
    static Instruction barrier(std::vector<uint32_t> qubits);
};

struct ClassicalRegister {
    std::string name;
    uint32_t size = 1;
};

struct Circuit {
    uint32_t width = 0;
    std::vector<ClassicalRegister> cregs;
    std::vector<Instruction> ops;
    std::string label;

    // Index into cregs, or -1 when the name is not declared.
    int creg_index(const std::string& name) const;
    uint32_t total_creg_bits() const;
};

// Aggregate op counts used by pricing and detection. CondX counts as a 1q
// unitary. depth is the longest chain of unitaries and resets along qubit
// lines; barriers and measurements do not occupy a layer.
struct GateCensus {
    uint64_t n_1q = 0;
    uint64_t n_2q = 0;
    uint64_t n_meas = 0;
    uint64_t n_reset = 0;
    uint64_t depth = 0;

    uint64_t total_ops() const { return n_1q + n_2q + n_meas + n_reset; }
    bool operator==(const GateCensus&) const = default;
};

GateCensus census(const Circuit& c);

struct Violation {
    // Index of the offending op, or -1 for a circuit-level problem.
    int op_index = -1;
    std::string message;
};

// Total validity check: width, creg declarations, operand ranges, angle
// finiteness, instruction arity. Empty result means the circuit is valid.
std::vector<Violation> validate(const Circuit& c);
bool is_valid(const Circuit& c);
// Formats "op 3: cx target 7 out of range (width 2)" style lines.
std::string violations_to_string(const std::vector<Violation>& v);

// Same ops appended after `a`'s; widths max, creg declarations merged by name
// (a shared name must agree on size, else a std::invalid_argument is thrown).
Circuit concat(const Circuit& a, const Circuit& b);

// Equality up to the label and an angle tolerance (serialization keeps 12
// significant digits, so exact double equality is too strict).
bool structurally_equal(const Circuit& a, const Circuit& b, double angle_tol = 1e-9);

}  // namespace qsplice
