#include "distctl/adder.hpp"

#include <stdexcept>

namespace distctl {

GateList generate_adder(const AdderSpec& spec) {
    const std::uint32_t n = spec.n;
    if (n < 2) throw std::invalid_argument("adder width must be at least 2");

    GateList out;
    out.num_qubits = 3 * n;
    auto a = [&](std::uint32_t i) { return i; };
    auto b = [&](std::uint32_t i) { return n + i; };
    auto anc = [&](std::uint32_t i) { return 2 * n + i; };
    const std::uint32_t carry_out = 3 * n - 1;

    auto put = [&](GateKind k, std::uint32_t q) { out.gates.push_back(Gate::unary(k, q)); };
    auto cx = [&](std::uint32_t c, std::uint32_t t) { out.gates.push_back(Gate::cnot(c, t)); };

    // Register preparation.
    for (std::uint32_t i = 0; i < n; ++i) put(GateKind::InitZ, a(i));
    for (std::uint32_t i = 0; i < n; ++i) put(GateKind::InitZ, b(i));
    for (std::uint32_t i = 0; i + 1 < n; ++i) put(GateKind::InitX, anc(i));
    put(GateKind::InitZ, carry_out);

    // First carry block: temporary AND of a0 and b0 into anc0. No carry-in,
    // so the leading CNOT ladder provides the ramp that keeps the first T
    // three steps after the start.
    {
        const std::uint32_t qa = a(0), qb = b(0), qo = anc(0);
        cx(qa, qb);
        cx(qa, qo);
        put(GateKind::T, qa);
        cx(qb, qo);
        put(GateKind::H, qo);
        put(GateKind::S, qo);
        put(GateKind::T, qo);
        put(GateKind::S, qb);
        put(GateKind::H, qb);
        cx(qa, qb);
        put(GateKind::H, qb);
        put(GateKind::S, qb);
        put(GateKind::T, qb);
        cx(qb, qo);
        put(GateKind::H, qo);
        put(GateKind::T, qo);
        put(GateKind::H, qo);
    }

    // Second carry block. Its second phase correction lands on the same
    // step as the ancilla T, the one place two T gates run in parallel
    // until T serialization splits them.
    if (n >= 3) {
        const std::uint32_t qa = a(1), qb = b(1);
        const std::uint32_t qc = anc(0), qo = anc(1);
        cx(qc, qa);
        put(GateKind::T, qa);
        cx(qc, qb);
        cx(qa, qo);
        cx(qb, qo);
        put(GateKind::T, qb);
        put(GateKind::H, qo);
        put(GateKind::S, qo);
        cx(qa, qo);
        put(GateKind::H, qo);
        put(GateKind::S, qo);
        cx(qb, qo);
        put(GateKind::T, qo);
        put(GateKind::T, qb);
        cx(qa, qo);
        put(GateKind::S, qo);
        put(GateKind::H, qo);
    }

    // Carry blocks 2..n-2: fold the incoming carry into the operand bits,
    // then compute the next temporary AND. The trailing H on the ancilla is
    // the hand-off that spaces consecutive blocks 14 steps apart.
    for (std::uint32_t i = 2; i + 1 < n; ++i) {
        const std::uint32_t qa = a(i), qb = b(i);
        const std::uint32_t qc = anc(i - 1), qo = anc(i);
        cx(qc, qa);
        cx(qc, qb);
        put(GateKind::S, qa);
        put(GateKind::T, qa);
        cx(qc, qo);
        cx(qb, qo);
        put(GateKind::H, qb);
        put(GateKind::T, qb);
        put(GateKind::S, qo);
        put(GateKind::H, qo);
        cx(qa, qo);
        put(GateKind::S, qo);
        put(GateKind::T, qo);
        cx(qb, qo);
        put(GateKind::H, qo);
        put(GateKind::T, qo);
        cx(qa, qo);
        put(GateKind::H, qo);
    }

    // High bit: sum and Clifford-only carry-out.
    {
        const std::uint32_t qa = a(n - 1), qb = b(n - 1), qc = anc(n - 2);
        cx(qa, qb);
        cx(qc, qb);
        cx(qc, carry_out);
        cx(qa, carry_out);
        cx(qb, carry_out);
        put(GateKind::MeasureZ, qa);
        put(GateKind::MeasureZ, qb);
        put(GateKind::MeasureZ, carry_out);
    }

    // Descending uncompute: release each temporary AND by measurement, fix up
    // the operand bits, and fold the lower carry into the sum bit. The CNOT
    // onto the lower ancilla chains the blocks four steps apart.
    for (std::uint32_t i = n - 2; i >= 1; --i) {
        const std::uint32_t qa = a(i), qb = b(i);
        const std::uint32_t qc = anc(i - 1), qo = anc(i);
        cx(qo, qb);
        put(GateKind::H, qo);
        put(GateKind::MeasureX, qo);
        cx(qa, qb);
        put(GateKind::S, qb);
        cx(qc, qb);
        put(GateKind::MeasureZ, qb);
        put(GateKind::MeasureZ, qa);
    }
    {
        const std::uint32_t qa = a(0), qb = b(0), qo = anc(0);
        cx(qo, qb);
        put(GateKind::H, qo);
        put(GateKind::MeasureX, qo);
        cx(qa, qb);
        put(GateKind::S, qb);
        put(GateKind::MeasureZ, qb);
        put(GateKind::MeasureZ, qa);
    }

    return out;
}

} // namespace distctl
