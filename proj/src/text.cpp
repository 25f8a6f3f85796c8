#include "qsplice/text.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qsplice {

namespace {

std::string format_parse_message(size_t line, size_t column, const std::string& message,
                                 const std::string& token) {
    std::ostringstream out;
    out << "line " << line << ", column " << column << ": " << message;
    if (!token.empty()) out << " near '" << token << "'";
    return out.str();
}

struct Token {
    std::string text;
    size_t column = 0;  // 1-based
};

// Splits one logical line into whitespace-separated tokens, dropping '#'
// comments. Also splits "NAME[INT]" handling into the consumer.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            i++;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineParser {
  public:
    LineParser(size_t line_no, std::vector<Token> tokens)
        : line_(line_no), tokens_(std::move(tokens)) {}

    bool done() const { return next_ >= tokens_.size(); }

    const Token& peek() const { return tokens_[next_]; }

    Token take(const char* what) {
        if (done()) {
            size_t col = tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
            throw ParseError(line_, col, std::string("expected ") + what, "");
        }
        return tokens_[next_++];
    }

    void expect_end() {
        if (!done()) {
            throw ParseError(line_, peek().column, "unexpected trailing token", peek().text);
        }
    }

    uint32_t take_uint(const char* what) {
        Token t = take(what);
        if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(line_, t.column, std::string("expected ") + what, t.text);
        }
        errno = 0;
        unsigned long long v = std::strtoull(t.text.c_str(), nullptr, 10);
        if (errno != 0 || v > 0xFFFFFFFFULL) {
            throw ParseError(line_, t.column, std::string(what) + " out of range", t.text);
        }
        return static_cast<uint32_t>(v);
    }

    double take_float(const char* what) {
        Token t = take(what);
        errno = 0;
        char* end = nullptr;
        double v = std::strtod(t.text.c_str(), &end);
        if (end != t.text.c_str() + t.text.size() || t.text.empty() || errno == ERANGE) {
            throw ParseError(line_, t.column, std::string("expected ") + what, t.text);
        }
        return v;
    }

    std::string take_name(const char* what) {
        Token t = take(what);
        if (!is_name(t.text)) {
            throw ParseError(line_, t.column, std::string("expected ") + what, t.text);
        }
        return t.text;
    }

    // NAME[INT]
    std::pair<std::string, uint32_t> take_bit_ref() {
        Token t = take("creg bit reference NAME[INT]");
        size_t open = t.text.find('[');
        if (open == std::string::npos || t.text.back() != ']') {
            throw ParseError(line_, t.column, "expected creg bit reference NAME[INT]", t.text);
        }
        std::string name = t.text.substr(0, open);
        std::string idx = t.text.substr(open + 1, t.text.size() - open - 2);
        if (!is_name(name) || idx.empty() ||
            idx.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(line_, t.column, "expected creg bit reference NAME[INT]", t.text);
        }
        errno = 0;
        unsigned long long v = std::strtoull(idx.c_str(), nullptr, 10);
        if (errno != 0 || v > 0xFFFFFFFFULL) {
            throw ParseError(line_, t.column, "bit index out of range", t.text);
        }
        return {name, static_cast<uint32_t>(v)};
    }

    ParseError error(const std::string& message, const Token& t) const {
        return ParseError(line_, t.column, message, t.text);
    }

    size_t line() const { return line_; }

  private:
    static bool is_name(const std::string& s) {
        if (s.empty()) return false;
        if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char ch : s) {
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
        }
        return true;
    }

    size_t line_;
    std::vector<Token> tokens_;
    size_t next_ = 0;
};

}  // namespace

ParseError::ParseError(size_t line_no, size_t column_no, std::string msg, std::string tok)
    : std::runtime_error(format_parse_message(line_no, column_no, msg, tok)),
      line(line_no),
      column(column_no),
      message(std::move(msg)),
      token(std::move(tok)) {}

Circuit parse(std::string_view text) {
    Circuit c;
    bool saw_qubits = false;
    bool saw_instruction = false;

    size_t pos = 0;
    size_t line_no = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                        : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        LineParser lp(line_no, tokenize(line));
        if (lp.done()) continue;

        Token head = lp.take("statement");
        const std::string& kw = head.text;

        if (!saw_qubits) {
            if (kw != "qubits") {
                throw lp.error("first statement must be 'qubits INT'", head);
            }
            uint32_t n = lp.take_uint("qubit count");
            lp.expect_end();
            if (n < 1) {
                throw ParseError(line_no, head.column, "qubit count must be >= 1",
                                 std::to_string(n));
            }
            c.width = n;
            saw_qubits = true;
            continue;
        }

        if (kw == "qubits") {
            throw lp.error("duplicate 'qubits' statement", head);
        }

        if (kw == "creg") {
            if (saw_instruction) {
                throw lp.error("creg declarations must precede instructions", head);
            }
            std::string name = lp.take_name("creg name");
            uint32_t size = lp.take_uint("creg size");
            lp.expect_end();
            if (size < 1) {
                throw ParseError(line_no, head.column, "creg size must be >= 1", name);
            }
            if (c.creg_index(name) >= 0) {
                throw ParseError(line_no, head.column, "duplicate creg name", name);
            }
            c.cregs.push_back({name, size});
            continue;
        }

        auto take_qubit = [&](const char* what) {
            Token t = lp.peek();
            uint32_t q = lp.take_uint(what);
            if (q >= c.width) {
                throw ParseError(line_no, t.column, "qubit out of range", t.text);
            }
            return q;
        };
        auto take_bit = [&]() {
            Token t = lp.peek();
            auto [name, bit] = lp.take_bit_ref();
            int r = c.creg_index(name);
            if (r < 0) {
                throw ParseError(line_no, t.column, "creg '" + name + "' not declared", t.text);
            }
            if (bit >= c.cregs[static_cast<size_t>(r)].size) {
                throw ParseError(line_no, t.column, "bit index out of range for creg", t.text);
            }
            return std::pair<std::string, uint32_t>{name, bit};
        };

        saw_instruction = true;
        if (kw == "h") {
            c.ops.push_back(Instruction::h(take_qubit("qubit")));
        } else if (kw == "x") {
            c.ops.push_back(Instruction::x(take_qubit("qubit")));
        } else if (kw == "rz") {
            double theta = lp.take_float("angle");
            c.ops.push_back(Instruction::rz(theta, take_qubit("qubit")));
        } else if (kw == "u3") {
            double theta = lp.take_float("angle");
            double phi = lp.take_float("angle");
            double lambda = lp.take_float("angle");
            c.ops.push_back(Instruction::u3(theta, phi, lambda, take_qubit("qubit")));
        } else if (kw == "cx") {
            Token ctl_tok = lp.peek();
            uint32_t ctl = take_qubit("control qubit");
            Token tgt_tok = lp.peek();
            uint32_t tgt = take_qubit("target qubit");
            if (ctl == tgt) {
                throw ParseError(line_no, tgt_tok.column, "control and target must differ",
                                 tgt_tok.text);
            }
            (void)ctl_tok;
            c.ops.push_back(Instruction::cx(ctl, tgt));
        } else if (kw == "cu3") {
            double theta = lp.take_float("angle");
            double phi = lp.take_float("angle");
            double lambda = lp.take_float("angle");
            uint32_t ctl = take_qubit("control qubit");
            Token tgt_tok = lp.peek();
            uint32_t tgt = take_qubit("target qubit");
            if (ctl == tgt) {
                throw ParseError(line_no, tgt_tok.column, "control and target must differ",
                                 tgt_tok.text);
            }
            c.ops.push_back(Instruction::cu3(theta, phi, lambda, ctl, tgt));
        } else if (kw == "measure") {
            uint32_t q = take_qubit("qubit");
            Token arrow = lp.take("'->'");
            if (arrow.text != "->") {
                throw ParseError(line_no, arrow.column, "expected '->'", arrow.text);
            }
            auto [name, bit] = take_bit();
            c.ops.push_back(Instruction::measure(q, name, bit));
        } else if (kw == "reset") {
            c.ops.push_back(Instruction::reset(take_qubit("qubit")));
        } else if (kw == "xif") {
            auto [name, bit] = take_bit();
            c.ops.push_back(Instruction::cond_x(name, bit, take_qubit("qubit")));
        } else if (kw == "barrier") {
            std::vector<uint32_t> qs;
            while (!lp.done()) qs.push_back(take_qubit("qubit"));
            if (qs.empty()) {
                for (uint32_t q = 0; q < c.width; q++) qs.push_back(q);
            }
            c.ops.push_back(Instruction::barrier(std::move(qs)));
        } else {
            throw lp.error("unknown mnemonic", head);
        }
        lp.expect_end();
    }

    if (!saw_qubits) {
        throw ParseError(1, 1, "empty input: expected 'qubits INT'", "");
    }
    return c;
}

Circuit parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open circuit file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Circuit c = parse(buf.str());
    size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    c.label = dot == std::string::npos ? base : base.substr(0, dot);
    return c;
}

std::string format_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    std::string s = buf;
    // '%#g' can leave a dangling decimal point ("1.00000000000." never occurs,
    // but "0." styles do for exact integers with precision consumed).
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::string serialize(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.width << "\n";
    for (const auto& r : c.cregs) {
        out << "creg " << r.name << " " << r.size << "\n";
    }
    for (const auto& op : c.ops) {
        switch (op.op) {
            case Op::H:
                out << "h " << op.qubits[0] << "\n";
                break;
            case Op::X:
                out << "x " << op.qubits[0] << "\n";
                break;
            case Op::RZ:
                out << "rz " << format_angle(op.angles[0]) << " " << op.qubits[0] << "\n";
                break;
            case Op::U3:
                out << "u3 " << format_angle(op.angles[0]) << " " << format_angle(op.angles[1])
                    << " " << format_angle(op.angles[2]) << " " << op.qubits[0] << "\n";
                break;
            case Op::CX:
                out << "cx " << op.qubits[0] << " " << op.qubits[1] << "\n";
                break;
            case Op::CU3:
                out << "cu3 " << format_angle(op.angles[0]) << " " << format_angle(op.angles[1])
                    << " " << format_angle(op.angles[2]) << " " << op.qubits[0] << " "
                    << op.qubits[1] << "\n";
                break;
            case Op::Measure:
                out << "measure " << op.qubits[0] << " -> " << op.creg << "[" << op.cbit << "]\n";
                break;
            case Op::Reset:
                out << "reset " << op.qubits[0] << "\n";
                break;
            case Op::CondX:
                out << "xif " << op.creg << "[" << op.cbit << "] " << op.qubits[0] << "\n";
                break;
            case Op::Barrier: {
                out << "barrier";
                for (uint32_t q : op.qubits) out << " " << q;
                out << "\n";
                break;
            }
        }
    }
    return out.str();
}

void write_circuit_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write circuit file: " + path);
    }
    out << serialize(c);
}

}  // namespace qsplice
