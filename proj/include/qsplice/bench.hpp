#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsplice/circuit.hpp"

namespace qsplice {

enum class BenchKind : uint8_t {
    Bell,
    Ghz,
    Qft,
    Teleportation,
    VariationalAnsatz,
    Grover2Q,
    PhaseEstimation,
    BernsteinVazirani,
    DeutschJozsa,
};

const char* bench_kind_name(BenchKind k);
// Accepts the names printed by bench_kind_name ("bell", "qft", ...).
BenchKind bench_kind_from_name(const std::string& name);

// Construction parameters; defaults(kind) pins the sizes used by fixtures and
// preset mixes (all widths 2..4).
struct BenchSpec {
    BenchKind kind = BenchKind::Bell;
    uint32_t n = 0;                // qft/ghz size, dj inputs, qpe counting bits
    std::string hidden = "101";    // bernstein-vazirani secret, msb first
    bool balanced = true;          // deutsch-jozsa oracle flavor
    std::string marked = "11";     // grover2q marked state, msb first
    double phase = 0.125;          // qpe eigenphase, estimated exactly when
                                   // phase * 2^n is an integer
    uint32_t layers = 2;           // ansatz layers
    std::vector<double> angles;    // ansatz thetas, empty = published defaults

    static BenchSpec defaults(BenchKind kind);
};

// The rotation angles baked into the default variational ansatz.
const std::vector<double>& default_ansatz_angles();

Circuit build(const BenchSpec& spec);

// Excitation-decay test circuit: X on the single qubit, then k stages of
// (barrier, measure into bit i, conditional X on that bit). The k records are
// user visible, one per stage. Requires 1 <= k <= 31.
Circuit build_reset_test(uint32_t k);

struct MixSpec {
    std::vector<BenchKind> pool;
    uint32_t count = 8;
    uint64_t seed = 0;
};

// count draws uniform with replacement from pool, seeded and reproducible.
std::vector<BenchKind> generate_mix(const MixSpec& spec);

// The eight-kind pool (no GHZ); pass nine_kinds to include it.
std::vector<BenchKind> default_mix_pool(bool nine_kinds = false);

// Published mix sequences: "mix8", "mix16", "mix32", "mix48", "mix64",
// "mix80", and the four-part "mix4a".."mix4d". Throws std::invalid_argument
// for other names.
std::vector<BenchSpec> preset_mix(const std::string& name);
std::vector<std::string> preset_mix_names();

}  // namespace qsplice
