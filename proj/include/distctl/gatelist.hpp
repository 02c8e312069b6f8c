#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distctl {

/// Gate kinds of the Clifford+T set handled by the toolchain.
///
/// InitA prepares a qubit in a distilled T state; it and T are the only kinds
/// that consume one distilled state each. CNOT is the only two-qubit kind.
enum class GateKind : std::uint8_t {
    InitZ,
    InitX,
    InitA,
    MeasureZ,
    MeasureX,
    H,
    S,
    T,
    Cnot,
};

constexpr bool consumes_t_state(GateKind k) {
    return k == GateKind::InitA || k == GateKind::T;
}

constexpr int gate_arity(GateKind k) {
    return k == GateKind::Cnot ? 2 : 1;
}

inline constexpr std::uint32_t no_qubit = std::numeric_limits<std::uint32_t>::max();

/// One circuit element. q0 is the CNOT control; q1 is the CNOT target and
/// holds no_qubit for single-qubit kinds.
struct Gate {
    GateKind kind = GateKind::H;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = no_qubit;

    static Gate unary(GateKind k, std::uint32_t q) { return {k, q, no_qubit}; }
    static Gate cnot(std::uint32_t control, std::uint32_t target) {
        return {GateKind::Cnot, control, target};
    }

    bool touches(std::uint32_t q) const {
        return q0 == q || (gate_arity(kind) == 2 && q1 == q);
    }
    bool operator==(const Gate&) const = default;
};

/// A circuit: qubit count plus the time-ordered gate sequence. Sequence order
/// defines the per-qubit dependency order.
struct GateList {
    std::uint32_t num_qubits = 0;
    std::vector<Gate> gates;

    bool operator==(const GateList&) const = default;
};

/// Raised by the text parsers; carries the 1-based source line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Throws std::invalid_argument when an operand is out of range, a CNOT
/// repeats an operand, or the operand count does not match the kind's arity.
void validate(const GateList& list);

/// Parses the gate list text format:
///
///   qubits <N>          required first non-comment line
///   init q<i> <Z|X|A>
///   measure q<i> <Z|X>
///   h q<i> | s q<i> | t q<i>
///   cnot q<c> q<t>
///
/// Keywords are case-insensitive; `#` starts a comment; blank lines are
/// skipped. Malformed input raises ParseError with line and token.
GateList parse_gate_list(std::string_view text);

/// Inverse of parse_gate_list; emits lowercase keywords, uppercase bases and a
/// trailing newline. parse_gate_list(serialize_gate_list(g)) == g.
std::string serialize_gate_list(const GateList& list);

/// Number of T-state-consuming gates (kind T plus kind InitA).
std::uint64_t t_count(const GateList& list);

} // namespace distctl
