#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qsplice/circuit.hpp"

namespace qsplice {

// Parse failure for the .qct text format. line/column are 1-based; token is
// the offending lexeme (may be empty at end-of-line errors).
class ParseError : public std::runtime_error {
  public:
    ParseError(size_t line, size_t column, std::string message, std::string token);

    size_t line;
    size_t column;
    std::string message;
    std::string token;
};

// Grammar, one statement per line ('#' starts a comment, blank lines skipped):
//   qubits INT
//   creg NAME INT          (zero or more, before any instruction)
//   h Q | x Q | rz F Q | u3 F F F Q | cx Q Q | cu3 F F F Q Q
//   measure Q -> NAME[INT]
//   reset Q
//   xif NAME[INT] Q
//   barrier Q*             (empty qubit list means every qubit)
// Input accepts LF or CRLF. Throws ParseError; never crashes on any input.
Circuit parse(std::string_view text);
Circuit parse_file(const std::string& path);

// Canonical form: LF line endings, angles with 12 significant digits. The
// label is not part of the format; parse(serialize(c)) is structurally equal
// to c.
std::string serialize(const Circuit& c);
void write_circuit_file(const Circuit& c, const std::string& path);

std::string format_angle(double v);

}  // namespace qsplice
