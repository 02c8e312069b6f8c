#pragma once

#include "distctl/gatelist.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace distctl {

/// Cheap identity marker for the gate list a schedule was built from.
struct SourceMark {
    std::uint32_t num_qubits = 0;
    std::uint64_t gate_count = 0;
    std::uint64_t t_count = 0;

    bool operator==(const SourceMark&) const = default;
};

/// Gates assigned to discrete time steps. Within a step no two gates share a
/// qubit, and for each qubit the step order of its gates equals their order
/// in the source gate list. When t_serialized holds, every step carries at
/// most one T-consuming gate.
struct Schedule {
    std::uint32_t num_qubits = 0;
    std::vector<std::vector<Gate>> steps;
    bool t_serialized = false;
    SourceMark source;

    bool operator==(const Schedule&) const = default;
};

/// Per-step counts of T-consuming gates; entries sum to the source T-count.
struct TDistribution {
    std::vector<std::uint64_t> per_step;
};

/// Places each gate at the earliest step after all earlier gates on its
/// operand qubits. Deterministic; depth-minimal under the dependency order.
Schedule schedule_asap(const GateList& list);

/// Rearranges a schedule so that every step holds at most one T-consuming
/// gate. Steps are scanned in time order; of the colliding gates the one
/// with the longest remaining dependency chain stays (ties to the lowest
/// qubit index) and the others move to the next step where their qubit is
/// free, displacing later gates only when the per-qubit order would break.
/// The gate multiset and all per-qubit orders are preserved.
Schedule serialize_t(const Schedule& s);

/// Number of time steps through the last occupied step; trailing empty
/// steps do not count, interior empty steps do.
std::uint64_t depth(const Schedule& s);

TDistribution t_distribution(const Schedule& s);

/// Largest number of T-consuming gates sharing one step.
std::uint64_t max_parallel_t(const Schedule& s);

/// Total T-consuming gates across all steps.
std::uint64_t schedule_t_count(const Schedule& s);

/// Recovers the gate list in flattened (step-major) order.
GateList flatten(const Schedule& s);

/// Text form: the gate list format with each gate line prefixed by
/// `@<step> `. Parsing validates step collisions and per-qubit order.
std::string serialize_schedule(const Schedule& s);
Schedule parse_schedule(std::string_view text);

/// CSV with header `step,t_count`, one row per step.
std::string distribution_csv(const TDistribution& d);

} // namespace distctl
