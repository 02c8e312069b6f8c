#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace distctl {

/// Geometry of the three-partition layout (distillery above pool above
/// computation), measured in plumbing pieces. One time step of the circuit
/// is pieces_per_step pieces of depth; a qubit or pooled connection is a
/// line pair two pieces wide.
struct LayoutParams {
    std::uint32_t box_depth = 6;   // one distillation box, depth
    std::uint32_t box_width = 16;  // one distillation box, width
    std::uint32_t box_height = 10; // one distillation box, height
    std::uint32_t dist_t = 3;      // steps per distillation = box_depth / pieces_per_step
    std::uint32_t qubits_per_row = 7;
    std::uint32_t pool_capacity_default = 7;
    std::uint32_t pieces_per_step = 2;
    std::uint32_t pool_row_height = 2;

    /// Throws std::invalid_argument when dist_t disagrees with the box depth
    /// or the row width cannot host qubits_per_row line pairs plus routing.
    void validate() const;
};

/// Layout depth in pieces for a circuit of the given depth in time steps.
std::uint64_t layout_depth(std::uint64_t final_depth_steps, const LayoutParams& params);

/// Rows needed to place the qubits at qubits_per_row per row.
std::uint64_t qubit_rows(std::uint64_t num_qubits, const LayoutParams& params);

/// Stacked height: distillation box + pool row + one row per qubit group.
std::uint64_t layout_height(std::uint64_t num_qubits, const LayoutParams& params);

/// Controlled mode pins the width to the distillation box; uncontrolled mode
/// widens to fit the peak pool as line pairs plus a routing column. In
/// controlled mode 2*max_pool must fit into box_width.
std::uint64_t layout_width(std::uint64_t max_pool, bool controlled, const LayoutParams& params);

/// Steps the distillery alone needs for t_count states.
std::uint64_t min_execution_time(std::uint64_t t_count, const LayoutParams& params);

/// Bounding box and bookkeeping for one simulated run.
struct ResourceReport {
    std::uint64_t n = 0; // adder width, or qubit count for general circuits
    std::uint64_t t_count = 0;
    std::string mode; // "controlled" or "uncontrolled"
    std::optional<std::uint64_t> capacity;
    std::uint64_t depth = 0;  // pieces
    std::uint64_t width = 0;  // pieces
    std::uint64_t height = 0; // pieces
    std::uint64_t volume = 0; // pieces^3
    std::uint64_t max_pool = 0;
    std::uint64_t delays = 0;
    std::optional<double> improvement;
};

ResourceReport build_report(std::uint64_t n, std::uint64_t t_count, bool controlled,
                            std::optional<std::uint64_t> capacity, std::uint64_t final_depth_steps,
                            std::uint64_t num_qubits, std::uint64_t max_pool, std::uint64_t delays,
                            const LayoutParams& params);

/// Volume ratio of a baseline over a controlled run of the same circuit.
double improvement(const ResourceReport& baseline, const ResourceReport& controlled);

/// Flat key-value JSON document with keys n, t_count, mode, capacity, depth,
/// width, height, volume, max_pool, delays and, when present, improvement.
std::string report_json(const ResourceReport& report);

} // namespace distctl
