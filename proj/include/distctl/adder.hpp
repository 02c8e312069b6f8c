#pragma once

#include "distctl/gatelist.hpp"

#include <cstdint>

namespace distctl {

/// Parameters for the benchmark ripple-carry adder generator.
struct AdderSpec {
    std::uint32_t n = 0; // operand bit width, at least 2
};

/// Generates an n-bit Clifford+T ripple-carry adder over 3n qubits
/// (register A, register B, and n ancillae including the carry-out).
///
/// The circuit consists of n-1 carry blocks, each computing one temporary
/// AND into a fresh ancilla with exactly four T gates, followed by a
/// Clifford-plus-measurement tail that forms the sum bits and releases the
/// ancillae. The block dependency chain is laid out so that an ASAP schedule
/// spaces consecutive blocks exactly 14 time steps apart, placing the four
/// T gates at steps 14k + {2, 5, 8, 11} for carry block k. The two
/// boundary blocks deviate: block 0 ramps in at {3, 6, 9, 12}, and block 1
/// sits at 14 + {1, 4, 10, 10} with its two colliding T gates splitting
/// into {1, 4, 10, 11} under T serialization. One distilled state is
/// consumed every 3.5 steps on average. The tail chains four steps per
/// block, giving a total scheduled depth of 18n - 16 steps and a T-count
/// of 4n - 4.
///
/// Widths below 8 bits build fine but fall outside the calibrated resource
/// model (boundary effects dominate the block structure).
///
/// Throws std::invalid_argument for n < 2.
GateList generate_adder(const AdderSpec& spec);

inline GateList generate_adder(std::uint32_t n) { return generate_adder(AdderSpec{n}); }

} // namespace distctl
