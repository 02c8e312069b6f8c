#pragma once

#include "distctl/schedule.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distctl {

/// Connection pool condition, derived from occupancy. With an unbounded
/// capacity the Full state is unreachable.
enum class PoolState : std::uint8_t { Full, Empty, Accepting };

PoolState pool_state(std::uint64_t occupancy, std::optional<std::uint64_t> capacity);

/// Distillery condition. Distilled, Start and Stop are instantaneous
/// transition markers: they never span a whole step and show up in the event
/// log (Start as DistillOn, Stop as DistillOff); between steps the distillery
/// is either Working or Stopped.
enum class DistilleryState : std::uint8_t { Working, Distilled, Stopped, Start, Stop };

std::string_view to_string(DistilleryState s);

struct SimConfig {
    std::optional<std::uint64_t> capacity; // nullopt = unbounded (uncontrolled mode)
    std::uint32_t dist_t = 3;              // time steps per distillation
    /// Number of states the distillery is asked to produce. Defaults to the
    /// schedule's T-count, which is also the only value that lets every
    /// consumer finish; anything else is rejected.
    std::optional<std::uint64_t> total_to_distill;
};

enum class EventKind : std::uint8_t { DistillOn, DistillOff, Delay };

std::string_view to_string(EventKind k);

/// Step-by-step record of a simulation run.
///
/// Rows are snapshots at the end of each step, after that step's
/// consumptions and after any distillation that completes with the step.
/// A state deposited at the end of step t is available to consumers from
/// step t+1 on; produced - consumed = occupancy holds on every row.
struct SimTrace {
    struct Row {
        std::uint64_t step = 0;
        std::uint64_t occupancy = 0;
        std::uint64_t produced = 0;
        std::uint64_t consumed = 0;
        DistilleryState state = DistilleryState::Stopped;

        bool operator==(const Row&) const = default;
    };
    struct Event {
        std::uint64_t step = 0;
        EventKind kind = EventKind::Delay;

        bool operator==(const Event&) const = default;
    };

    std::vector<Row> rows;
    std::vector<Event> events;
    std::uint64_t final_depth = 0;
    /// Step at which each schedule step actually executed (shifted by the
    /// delays that precede it).
    std::vector<std::uint64_t> executed_step;
    std::optional<std::uint64_t> capacity;
    SourceMark source;
    std::uint64_t schedule_depth = 0;
};

/// Runs the distillery and pool state machines against the schedule's
/// demand for distilled states.
///
/// Per step: (1) the T-consuming gates due this step pop one connection
/// each, in qubit order; a pop while the distillery is stopped short of its
/// total restarts it within the same step; if the pool runs empty with
/// demand left, a Delay event is recorded and the remaining schedule shifts
/// one step later. (2) At the step's end a running distillation advances;
/// when it completes, the state is deposited unconditionally - a
/// distillation cannot be interrupted - and the distillery stops if the
/// pool is now full or if it has produced its total, otherwise the next
/// distillation begins at once. The distillery starts working at step 0
/// whenever there is anything to distill, so with dist_t = 3 the first
/// state is deposited at the end of step 2 and consumable from step 3.
SimTrace simulate(const Schedule& s, const SimConfig& cfg);

std::uint64_t max_occupancy(const SimTrace& trace);

/// Last step at which the occupancy equals its maximum.
std::uint64_t max_occupancy_step(const SimTrace& trace);

/// First step at or after the peak with an empty pool; nullopt when the
/// pool never held anything.
std::optional<std::uint64_t> pool_empty_step(const SimTrace& trace);

std::uint64_t delay_count(const SimTrace& trace);

/// CSV with header `step,occupancy,produced,consumed,state`.
std::string trace_csv(const SimTrace& trace);

/// CSV with header `step,event`.
std::string events_csv(const SimTrace& trace);

/// The executed schedule as scheduled gate list text with `@<step>
/// distillOn` / `@<step> distillOff` lines interleaved where the distillery
/// stopped and restarted. The trace must come from the given schedule.
std::string annotate(const Schedule& s, const SimTrace& trace);

} // namespace distctl
