#include "distctl/gatelist.hpp"

#include "parse_detail.hpp"

#include <cctype>
#include <charconv>

namespace distctl {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace detail {

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        ++line_no;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{line_no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::uint32_t parse_qubit(const std::string& token, std::size_t line, std::uint32_t num_qubits) {
    if (token.size() < 2 || (token[0] != 'q' && token[0] != 'Q'))
        throw ParseError(line, "expected qubit operand, got '" + token + "'");
    std::uint32_t index = 0;
    const char* begin = token.data() + 1;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, index);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, "expected qubit operand, got '" + token + "'");
    if (index >= num_qubits)
        throw ParseError(line, "operand out of range: '" + token + "'");
    return index;
}

std::uint32_t parse_qubits_header(const Line& line) {
    if (lower(line.tokens[0]) != "qubits")
        throw ParseError(line.number, "missing qubits header, got '" + line.tokens[0] + "'");
    if (line.tokens.size() != 2)
        throw ParseError(line.number, "qubits header takes one count");
    const std::string& tok = line.tokens[1];
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, "bad qubit count: '" + tok + "'");
    return n;
}

Gate parse_gate_tokens(const std::vector<std::string>& tokens, std::size_t first, std::size_t line,
                       std::uint32_t num_qubits) {
    const std::string keyword = lower(tokens[first]);
    const std::size_t argc = tokens.size() - first - 1;
    auto need = [&](std::size_t n) {
        if (argc != n)
            throw ParseError(line, "'" + keyword + "' takes " + std::to_string(n) +
                                       " argument(s), got " + std::to_string(argc));
    };
    if (keyword == "init") {
        need(2);
        std::uint32_t q = parse_qubit(tokens[first + 1], line, num_qubits);
        std::string basis = lower(tokens[first + 2]);
        if (basis == "z") return Gate::unary(GateKind::InitZ, q);
        if (basis == "x") return Gate::unary(GateKind::InitX, q);
        if (basis == "a") return Gate::unary(GateKind::InitA, q);
        throw ParseError(line, "bad init basis: '" + tokens[first + 2] + "'");
    }
    if (keyword == "measure") {
        need(2);
        std::uint32_t q = parse_qubit(tokens[first + 1], line, num_qubits);
        std::string basis = lower(tokens[first + 2]);
        if (basis == "z") return Gate::unary(GateKind::MeasureZ, q);
        if (basis == "x") return Gate::unary(GateKind::MeasureX, q);
        throw ParseError(line, "bad measure basis: '" + tokens[first + 2] + "'");
    }
    if (keyword == "h" || keyword == "s" || keyword == "t") {
        need(1);
        std::uint32_t q = parse_qubit(tokens[first + 1], line, num_qubits);
        GateKind k = keyword == "h" ? GateKind::H : keyword == "s" ? GateKind::S : GateKind::T;
        return Gate::unary(k, q);
    }
    if (keyword == "cnot") {
        need(2);
        std::uint32_t c = parse_qubit(tokens[first + 1], line, num_qubits);
        std::uint32_t t = parse_qubit(tokens[first + 2], line, num_qubits);
        if (c == t) throw ParseError(line, "cnot operands must be distinct");
        return Gate::cnot(c, t);
    }
    throw ParseError(line, "unknown gate: '" + tokens[first] + "'");
}

std::string gate_text(const Gate& g) {
    std::string q0 = "q" + std::to_string(g.q0);
    switch (g.kind) {
        case GateKind::InitZ: return "init " + q0 + " Z";
        case GateKind::InitX: return "init " + q0 + " X";
        case GateKind::InitA: return "init " + q0 + " A";
        case GateKind::MeasureZ: return "measure " + q0 + " Z";
        case GateKind::MeasureX: return "measure " + q0 + " X";
        case GateKind::H: return "h " + q0;
        case GateKind::S: return "s " + q0;
        case GateKind::T: return "t " + q0;
        case GateKind::Cnot: return "cnot " + q0 + " q" + std::to_string(g.q1);
    }
    return {};
}

} // namespace detail

void validate(const GateList& list) {
    for (const Gate& g : list.gates) {
        const int arity = gate_arity(g.kind);
        if (g.q0 >= list.num_qubits)
            throw std::invalid_argument("gate operand out of range");
        if (arity == 2) {
            if (g.q1 >= list.num_qubits)
                throw std::invalid_argument("gate operand out of range");
            if (g.q0 == g.q1)
                throw std::invalid_argument("cnot operands must be distinct");
        } else if (g.q1 != no_qubit) {
            throw std::invalid_argument("single-qubit gate carries a second operand");
        }
    }
}

GateList parse_gate_list(std::string_view text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing qubits header");
    GateList list;
    list.num_qubits = detail::parse_qubits_header(lines.front());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (detail::lower(line.tokens[0]) == "qubits")
            throw ParseError(line.number, "duplicate qubits header");
        list.gates.push_back(detail::parse_gate_tokens(line.tokens, 0, line.number, list.num_qubits));
    }
    return list;
}

std::string serialize_gate_list(const GateList& list) {
    std::string out = "qubits " + std::to_string(list.num_qubits) + "\n";
    for (const Gate& g : list.gates) {
        out += detail::gate_text(g);
        out += '\n';
    }
    return out;
}

std::uint64_t t_count(const GateList& list) {
    std::uint64_t n = 0;
    for (const Gate& g : list.gates)
        if (consumes_t_state(g.kind)) ++n;
    return n;
}

} // namespace distctl
