#pragma once

#include "distctl/distsim.hpp"
#include "distctl/layout.hpp"
#include "distctl/schedule.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace distctl {

/// Everything one estimate run produces: the serialized schedule, both
/// simulation traces and both bounding-box reports (improvement filled in
/// on the controlled one).
struct EstimateResult {
    Schedule serialized;
    SimTrace uncontrolled_trace;
    SimTrace controlled_trace;
    ResourceReport uncontrolled;
    ResourceReport controlled;
};

/// Schedules the circuit, serializes the T gates, simulates the distillery
/// with and without pool control and assembles the resource reports.
/// `report_n` labels the reports (adder width or qubit count); `bare` drops
/// the distillery and pool partitions from the box.
EstimateResult run_estimate(const GateList& circuit, std::uint64_t report_n,
                            std::uint64_t capacity, const LayoutParams& params, bool bare = false);

/// Command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

} // namespace distctl
