#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "qsplice/circuit.hpp"

using namespace qsplice;

namespace {

Circuit bell_like() {
    Circuit c;
    c.width = 2;
    c.label = "bell";
    c.cregs.push_back({"c", 2});
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::cx(0, 1));
    c.ops.push_back(Instruction::barrier({}));
    c.ops.push_back(Instruction::measure(0, "c", 0));
    c.ops.push_back(Instruction::measure(1, "c", 1));
    return c;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("instruction factories fill operands") {
    Instruction h = Instruction::h(3);
    CHECK(h.op == Op::H);
    CHECK(h.qubits == std::vector<uint32_t>{3});

    Instruction rz = Instruction::rz(0.7, 1);
    CHECK(rz.op == Op::RZ);
    CHECK(rz.angles[0] == 0.7);

    Instruction u3 = Instruction::u3(0.1, 0.2, 0.3, 0);
    CHECK(u3.angles == std::array<double, 3>{0.1, 0.2, 0.3});

    Instruction cx = Instruction::cx(2, 5);
    CHECK(cx.qubits == std::vector<uint32_t>{2, 5});

    Instruction m = Instruction::measure(1, "out", 4);
    CHECK(m.creg == "out");
    CHECK(m.cbit == 4);

    Instruction xi = Instruction::cond_x("m", 1, 2);
    CHECK(xi.op == Op::CondX);
    CHECK(xi.creg == "m");
    CHECK(xi.cbit == 1);
    CHECK(xi.qubits == std::vector<uint32_t>{2});
}

TEST_CASE("census of the entangling pair") {
    GateCensus g = census(bell_like());
    CHECK(g.n_1q == 1);
    CHECK(g.n_2q == 1);
    CHECK(g.n_meas == 2);
    CHECK(g.n_reset == 0);
    CHECK(g.depth == 2);
    CHECK(g.total_ops() == 4);
}

TEST_CASE("census counts conditional X as a one-qubit gate") {
    Circuit c;
    c.width = 1;
    c.cregs.push_back({"r", 1});
    c.ops.push_back(Instruction::x(0));
    c.ops.push_back(Instruction::measure(0, "r", 0));
    c.ops.push_back(Instruction::cond_x("r", 0, 0));
    GateCensus g = census(c);
    CHECK(g.n_1q == 2);
    CHECK(g.n_meas == 1);
    CHECK(g.depth == 2);
}

TEST_CASE("census depth ignores barriers and measurements but not resets") {
    Circuit c;
    c.width = 2;
    c.cregs.push_back({"c", 2});
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::barrier({}));
    c.ops.push_back(Instruction::measure(0, "c", 0));
    c.ops.push_back(Instruction::reset(0));
    c.ops.push_back(Instruction::reset(1));
    c.ops.push_back(Instruction::h(0));
    GateCensus g = census(c);
    CHECK(g.n_reset == 2);
    // q0 line: h, reset, h.
    CHECK(g.depth == 3);
}

TEST_CASE("depth follows the longest qubit line, not the op count") {
    Circuit c;
    c.width = 2;
    c.ops.push_back(Instruction::h(0));
    c.ops.push_back(Instruction::h(1));
    c.ops.push_back(Instruction::h(1));
    CHECK(census(c).depth == 2);
    // The cx joins q0's line (1 op so far) to q1's (2 ops so far).
    c.ops.push_back(Instruction::cx(0, 1));
    CHECK(census(c).depth == 3);
}

TEST_CASE("validate accepts the well-formed circuit") {
    CHECK(is_valid(bell_like()));
    CHECK(validate(bell_like()).empty());
}

TEST_CASE("validate flags structural problems") {
    Circuit c = bell_like();
    c.width = 0;
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    c.ops.push_back(Instruction::h(2));
    auto v = validate(c);
    REQUIRE(v.size() == 1);
    CHECK(v[0].op_index == 5);

    c = bell_like();
    c.ops.push_back(Instruction::cx(1, 1));
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    c.ops.push_back(Instruction::measure(0, "nope", 0));
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    c.ops.push_back(Instruction::measure(0, "c", 2));
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    c.cregs.push_back({"c", 1});
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    c.cregs.push_back({"bad name", 1});
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    c.ops.push_back(Instruction::rz(std::numeric_limits<double>::quiet_NaN(), 0));
    CHECK_FALSE(is_valid(c));

    c = bell_like();
    Instruction broken = Instruction::h(0);
    broken.qubits.push_back(1);
    c.ops.push_back(broken);
    CHECK_FALSE(is_valid(c));
}

TEST_CASE("violations_to_string names the op index") {
    Circuit c = bell_like();
    c.ops.push_back(Instruction::h(9));
    std::string text = violations_to_string(validate(c));
    CHECK(text.find("op 5") != std::string::npos);
    CHECK(text.find("out of range") != std::string::npos);
}

TEST_CASE("concat appends ops and merges registers") {
    Circuit a = bell_like();
    Circuit b;
    b.width = 3;
    b.cregs.push_back({"d", 1});
    b.ops.push_back(Instruction::h(2));

    Circuit joined = concat(a, b);
    CHECK(joined.width == 3);
    CHECK(joined.ops.size() == a.ops.size() + 1);
    REQUIRE(joined.cregs.size() == 2);
    CHECK(joined.creg_index("c") == 0);
    CHECK(joined.creg_index("d") == 1);
    CHECK(joined.total_creg_bits() == 3);
}

TEST_CASE("concat keeps one declaration for a shared register name") {
    Circuit a = bell_like();
    Circuit b = bell_like();
    Circuit joined = concat(a, b);
    CHECK(joined.cregs.size() == 1);

    b.cregs[0].size = 3;
    CHECK_THROWS_AS(concat(a, b), std::invalid_argument);
}

TEST_CASE("structural equality ignores the label and tiny angle noise") {
    Circuit a = bell_like();
    Circuit b = bell_like();
    b.label = "other";
    CHECK(structurally_equal(a, b));

    b.ops[0] = Instruction::x(0);
    CHECK_FALSE(structurally_equal(a, b));

    Circuit p, q;
    p.width = 1;
    q.width = 1;
    p.ops.push_back(Instruction::rz(0.7, 0));
    q.ops.push_back(Instruction::rz(0.7 + 1e-13, 0));
    CHECK(structurally_equal(p, q));
    q.ops[0] = Instruction::rz(0.7 + 1e-6, 0);
    CHECK_FALSE(structurally_equal(p, q));
}

TEST_CASE("creg_index misses return -1") {
    CHECK(bell_like().creg_index("zzz") == -1);
}

}
