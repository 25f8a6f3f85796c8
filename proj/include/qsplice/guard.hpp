#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsplice/circuit.hpp"
#include "qsplice/money.hpp"
#include "qsplice/pricing.hpp"

namespace qsplice {

enum class FindingKind : uint8_t {
    FullResetCut,
    RepeatedSegment,
    UnderpricedTask,
};

const char* finding_kind_name(FindingKind k);

struct AbuseFinding {
    FindingKind kind = FindingKind::FullResetCut;
    size_t span_begin = 0;   // op-index span, inclusive
    size_t span_end = 0;
    std::string note;
    uint64_t segment_count = 1;
};

// Pre-execution quote under a per-gate meter.
Money quote_per_gate(const Circuit& c, const PerGate& model);

// Flags maximal contiguous runs of Reset/Barrier ops whose resets cover every
// qubit of the circuit; each such run is one cut. A circuit with f cuts has
// f+1 segments. Resets on a strict subset of qubits are never flagged, and
// neither is a circuit that grounds its qubits by uncomputation instead of
// Reset ops (known blind spot, asserted by tests).
std::vector<AbuseFinding> detect_full_reset_cuts(const Circuit& c);

// Hashes the cut-delimited segments after erasing creg names (bit indices and
// qubit indices kept); any segment appearing >= 2 times yields one finding
// whose span covers the first occurrence and whose segment_count is the
// multiplicity.
std::vector<AbuseFinding> detect_repetition(const Circuit& c);

// Flags billed < quote_per_gate(c, fair) * threshold. threshold 0 never fires.
std::vector<AbuseFinding> audit(const Circuit& c, Money billed, const PerGate& fair,
                                double threshold = 0.5);

// Report lines: KIND<TAB>BEGIN-END<TAB>DETAIL, LF endings.
std::string findings_to_text(const std::vector<AbuseFinding>& findings);

}  // namespace qsplice
