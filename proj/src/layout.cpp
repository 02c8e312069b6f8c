#include "distctl/layout.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace distctl {

void LayoutParams::validate() const {
    if (pieces_per_step == 0 || dist_t == 0)
        throw std::invalid_argument("pieces_per_step and dist_t must be positive");
    if (box_depth != dist_t * pieces_per_step)
        throw std::invalid_argument("dist_t must equal box_depth / pieces_per_step");
    if (2 * (qubits_per_row + 1) > box_width)
        throw std::invalid_argument("qubits_per_row line pairs plus routing exceed box_width");
}

std::uint64_t layout_depth(std::uint64_t final_depth_steps, const LayoutParams& params) {
    return static_cast<std::uint64_t>(params.pieces_per_step) * final_depth_steps;
}

std::uint64_t qubit_rows(std::uint64_t num_qubits, const LayoutParams& params) {
    if (params.qubits_per_row == 0) throw std::invalid_argument("qubits_per_row must be positive");
    return (num_qubits + params.qubits_per_row - 1) / params.qubits_per_row;
}

std::uint64_t layout_height(std::uint64_t num_qubits, const LayoutParams& params) {
    return params.box_height + params.pool_row_height + qubit_rows(num_qubits, params);
}

std::uint64_t layout_width(std::uint64_t max_pool, bool controlled, const LayoutParams& params) {
    if (controlled) {
        if (2 * max_pool > params.box_width)
            throw std::invalid_argument("pool capacity too large for the distillation box width");
        return params.box_width;
    }
    return std::max<std::uint64_t>(params.box_width, 2 * max_pool + 1);
}

std::uint64_t min_execution_time(std::uint64_t t_count, const LayoutParams& params) {
    return t_count * params.dist_t;
}

ResourceReport build_report(std::uint64_t n, std::uint64_t t_count, bool controlled,
                            std::optional<std::uint64_t> capacity, std::uint64_t final_depth_steps,
                            std::uint64_t num_qubits, std::uint64_t max_pool, std::uint64_t delays,
                            const LayoutParams& params) {
    ResourceReport r;
    r.n = n;
    r.t_count = t_count;
    r.mode = controlled ? "controlled" : "uncontrolled";
    r.capacity = capacity;
    r.depth = layout_depth(final_depth_steps, params);
    r.width = layout_width(max_pool, controlled, params);
    r.height = layout_height(num_qubits, params);
    r.volume = r.depth * r.width * r.height;
    r.max_pool = max_pool;
    r.delays = delays;
    return r;
}

double improvement(const ResourceReport& baseline, const ResourceReport& controlled) {
    if (baseline.n != controlled.n || baseline.t_count != controlled.t_count)
        throw std::invalid_argument("reports describe different circuits");
    if (controlled.volume == 0) throw std::invalid_argument("controlled volume is zero");
    return static_cast<double>(baseline.volume) / static_cast<double>(controlled.volume);
}

std::string report_json(const ResourceReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["t_count"] = report.t_count;
    j["mode"] = report.mode;
    if (report.capacity)
        j["capacity"] = *report.capacity;
    else
        j["capacity"] = "unbounded";
    j["depth"] = report.depth;
    j["width"] = report.width;
    j["height"] = report.height;
    j["volume"] = report.volume;
    j["max_pool"] = report.max_pool;
    j["delays"] = report.delays;
    if (report.improvement) j["improvement"] = *report.improvement;
    return j.dump(2);
}

} // namespace distctl
