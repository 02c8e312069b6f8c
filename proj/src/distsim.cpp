#include "distctl/distsim.hpp"

#include "parse_detail.hpp"

#include <algorithm>
#include <stdexcept>

namespace distctl {

PoolState pool_state(std::uint64_t occupancy, std::optional<std::uint64_t> capacity) {
    if (capacity && occupancy == *capacity) return PoolState::Full;
    if (occupancy == 0) return PoolState::Empty;
    return PoolState::Accepting;
}

std::string_view to_string(DistilleryState s) {
    switch (s) {
        case DistilleryState::Working: return "working";
        case DistilleryState::Distilled: return "distilled";
        case DistilleryState::Stopped: return "stopped";
        case DistilleryState::Start: return "start";
        case DistilleryState::Stop: return "stop";
    }
    return {};
}

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::DistillOn: return "distillOn";
        case EventKind::DistillOff: return "distillOff";
        case EventKind::Delay: return "delay";
    }
    return {};
}

SimTrace simulate(const Schedule& s, const SimConfig& cfg) {
    if (cfg.dist_t < 1) throw std::invalid_argument("dist_t must be at least 1");
    if (cfg.capacity && *cfg.capacity == 0)
        throw std::invalid_argument("pool capacity must be positive");

    const std::uint64_t d = depth(s);
    const std::uint64_t demand = schedule_t_count(s);
    const std::uint64_t total = cfg.total_to_distill.value_or(demand);
    if (total != demand)
        throw std::invalid_argument("total_to_distill must equal the schedule's T-count");

    auto step_demand = [&](std::uint64_t i) {
        std::uint64_t n = 0;
        for (const Gate& g : s.steps[i])
            if (consumes_t_state(g.kind)) ++n;
        return n;
    };

    SimTrace trace;
    trace.capacity = cfg.capacity;
    trace.source = s.source;
    trace.schedule_depth = d;
    trace.executed_step.assign(d, 0);

    std::uint64_t occupancy = 0, produced = 0, consumed = 0;
    std::uint32_t progress = 0;
    bool working = total > 0;

    std::uint64_t pos = 0;
    std::uint64_t remaining = d > 0 ? step_demand(0) : 0;
    for (std::uint64_t t = 0; pos < d; ++t) {
        // Consume: satisfy as much of the current step's demand as the pool
        // allows. A pop while the distillery is stopped short of its total
        // restarts it within this step.
        const std::uint64_t pops = std::min(remaining, occupancy);
        if (pops > 0) {
            occupancy -= pops;
            consumed += pops;
            remaining -= pops;
            if (!working && produced < total) {
                working = true;
                progress = 0;
                trace.events.push_back({t, EventKind::DistillOn});
            }
        }
        if (remaining > 0) {
            trace.events.push_back({t, EventKind::Delay});
        } else {
            trace.executed_step[pos] = t;
            ++pos;
            remaining = pos < d ? step_demand(pos) : 0;
        }
        // Produce: a distillation that completes with this step deposits
        // unconditionally; the state becomes consumable from the next step.
        if (working && ++progress == cfg.dist_t) {
            progress = 0;
            ++occupancy;
            ++produced;
            if ((cfg.capacity && occupancy == *cfg.capacity) || produced == total) {
                working = false;
                trace.events.push_back({t, EventKind::DistillOff});
            }
        }
        trace.rows.push_back({t, occupancy, produced, consumed,
                              working ? DistilleryState::Working : DistilleryState::Stopped});
    }
    trace.final_depth = trace.rows.size();
    return trace;
}

std::uint64_t max_occupancy(const SimTrace& trace) {
    std::uint64_t best = 0;
    for (const auto& row : trace.rows) best = std::max(best, row.occupancy);
    return best;
}

std::uint64_t max_occupancy_step(const SimTrace& trace) {
    const std::uint64_t best = max_occupancy(trace);
    std::uint64_t step = 0;
    for (const auto& row : trace.rows)
        if (row.occupancy == best) step = row.step;
    return step;
}

std::optional<std::uint64_t> pool_empty_step(const SimTrace& trace) {
    if (max_occupancy(trace) == 0) return std::nullopt;
    for (std::uint64_t i = max_occupancy_step(trace); i < trace.rows.size(); ++i)
        if (trace.rows[i].occupancy == 0) return trace.rows[i].step;
    return std::nullopt;
}

std::uint64_t delay_count(const SimTrace& trace) {
    std::uint64_t n = 0;
    for (const auto& e : trace.events)
        if (e.kind == EventKind::Delay) ++n;
    return n;
}

std::string trace_csv(const SimTrace& trace) {
    std::string out = "step,occupancy,produced,consumed,state\n";
    for (const auto& row : trace.rows) {
        out += std::to_string(row.step) + "," + std::to_string(row.occupancy) + "," +
               std::to_string(row.produced) + "," + std::to_string(row.consumed) + "," +
               std::string(to_string(row.state)) + "\n";
    }
    return out;
}

std::string events_csv(const SimTrace& trace) {
    std::string out = "step,event\n";
    for (const auto& e : trace.events)
        out += std::to_string(e.step) + "," + std::string(to_string(e.kind)) + "\n";
    return out;
}

std::string annotate(const Schedule& s, const SimTrace& trace) {
    if (trace.source != s.source || trace.schedule_depth != depth(s))
        throw std::invalid_argument("trace does not belong to this schedule");

    std::string out = "qubits " + std::to_string(s.num_qubits) + "\n";
    std::size_t event_idx = 0;
    std::uint64_t pos = 0;
    for (std::uint64_t t = 0; t < trace.final_depth; ++t) {
        while (pos < trace.executed_step.size() && trace.executed_step[pos] == t) {
            for (const Gate& g : s.steps[pos]) {
                out += "@" + std::to_string(t) + " " + detail::gate_text(g);
                out += '\n';
            }
            ++pos;
        }
        for (; event_idx < trace.events.size() && trace.events[event_idx].step == t; ++event_idx) {
            const EventKind k = trace.events[event_idx].kind;
            if (k == EventKind::Delay) continue;
            out += "@" + std::to_string(t) + " " + std::string(to_string(k));
            out += '\n';
        }
    }
    return out;
}

} // namespace distctl
