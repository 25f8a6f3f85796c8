#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsplice/circuit.hpp"
#include "qsplice/sim.hpp"

namespace qsplice {

// N circuits packed into one submission: parts run back to back on the widest
// part's qubits, separated by k_resets rounds of Reset on every qubit (no
// resets before the first part or after the last). prefixes optionally
// overrides the per-part creg relabeling; empty means "p<i>_".
struct SpliceSpec {
    std::vector<Circuit> parts;
    uint32_t k_resets = 4;
    std::vector<std::string> prefixes;
};

struct RegSpan {
    std::string name;  // relabeled register name in the composite
    size_t offset = 0; // position within the composite counts key
    size_t length = 0;
};

struct PartSpan {
    std::string label;
    std::vector<RegSpan> regs;
    size_t offset = 0;
    size_t total_bits = 0;
};

struct SpliceMap {
    std::vector<PartSpan> parts;
    size_t total_bits = 0;
    uint64_t effective_shots_factor = 1;
};

struct SpliceResult {
    Circuit circuit;
    SpliceMap map;
};

// Throws std::invalid_argument on an empty parts list, an invalid part, or a
// duplicate creg name after relabeling.
SpliceResult splice(const SpliceSpec& spec);

// Marginalizes the composite counts back into one table per part. Each
// returned table has the same total as the input.
std::vector<CountsTable> split_counts(const CountsTable& composite, const SpliceMap& map);

// Sidecar file: "# parts=N total_bits=B effective_shots_factor=F" header,
// then one "PART_INDEX<TAB>LABEL<TAB>NAME:OFFSET:LEN[,...]" line per part.
std::string splice_map_to_text(const SpliceMap& map);
SpliceMap splice_map_from_text(std::string_view text);
void write_splice_map_file(const SpliceMap& map, const std::string& path);
SpliceMap read_splice_map_file(const std::string& path);

}  // namespace qsplice
