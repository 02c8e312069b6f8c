#pragma once

// Internal helpers shared by the gate list and schedule text parsers.

#include "distctl/gatelist.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace distctl::detail {

struct Line {
    std::size_t number = 0; // 1-based
    std::vector<std::string> tokens;
};

// Splits text into non-empty token lines; strips '#' comments and blanks.
std::vector<Line> tokenize(std::string_view text);

std::string lower(std::string_view s);

// Parses "q<N>"; throws ParseError on anything else.
std::uint32_t parse_qubit(const std::string& token, std::size_t line, std::uint32_t num_qubits);

// Parses one gate from tokens[first..]; consumes the whole remainder.
Gate parse_gate_tokens(const std::vector<std::string>& tokens, std::size_t first, std::size_t line,
                       std::uint32_t num_qubits);

// Parses the "qubits <N>" header tokens.
std::uint32_t parse_qubits_header(const Line& line);

std::string gate_text(const Gate& g);

} // namespace distctl::detail
