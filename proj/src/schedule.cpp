#include "distctl/schedule.hpp"

#include "parse_detail.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace distctl {

namespace {

void trim_trailing_empty(std::vector<std::vector<Gate>>& steps) {
    while (!steps.empty() && steps.back().empty()) steps.pop_back();
}

} // namespace

Schedule schedule_asap(const GateList& list) {
    validate(list);
    Schedule s;
    s.num_qubits = list.num_qubits;
    s.t_serialized = false;
    s.source = SourceMark{list.num_qubits, list.gates.size(), t_count(list)};
    std::vector<std::uint64_t> next_free(list.num_qubits, 0);
    for (const Gate& g : list.gates) {
        std::uint64_t at = next_free[g.q0];
        if (gate_arity(g.kind) == 2) at = std::max(at, next_free[g.q1]);
        if (at >= s.steps.size()) s.steps.resize(at + 1);
        s.steps[at].push_back(g);
        next_free[g.q0] = at + 1;
        if (gate_arity(g.kind) == 2) next_free[g.q1] = at + 1;
    }
    return s;
}

std::uint64_t depth(const Schedule& s) {
    std::uint64_t d = 0;
    for (std::uint64_t i = 0; i < s.steps.size(); ++i)
        if (!s.steps[i].empty()) d = i + 1;
    return d;
}

TDistribution t_distribution(const Schedule& s) {
    TDistribution dist;
    dist.per_step.assign(depth(s), 0);
    for (std::uint64_t i = 0; i < dist.per_step.size(); ++i)
        for (const Gate& g : s.steps[i])
            if (consumes_t_state(g.kind)) ++dist.per_step[i];
    return dist;
}

std::uint64_t max_parallel_t(const Schedule& s) {
    std::uint64_t best = 0;
    for (const auto& step : s.steps) {
        std::uint64_t here = 0;
        for (const Gate& g : step)
            if (consumes_t_state(g.kind)) ++here;
        best = std::max(best, here);
    }
    return best;
}

std::uint64_t schedule_t_count(const Schedule& s) {
    std::uint64_t n = 0;
    for (const auto& step : s.steps)
        for (const Gate& g : step)
            if (consumes_t_state(g.kind)) ++n;
    return n;
}

GateList flatten(const Schedule& s) {
    GateList list;
    list.num_qubits = s.num_qubits;
    for (const auto& step : s.steps)
        for (const Gate& g : step) list.gates.push_back(g);
    return list;
}

namespace {

struct Slot {
    Gate gate;
    std::uint64_t chain = 0; // longest forward dependency chain, in gates
};

// Chain lengths over the flattened dependency structure; unchanged by the
// moves below, so they are computed once up front.
std::vector<std::vector<Slot>> make_slots(const Schedule& s) {
    std::vector<std::vector<Slot>> steps(s.steps.size());
    std::vector<const Gate*> flat;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        steps[i].reserve(s.steps[i].size());
        for (std::size_t j = 0; j < s.steps[i].size(); ++j) {
            steps[i].push_back({s.steps[i][j], 0});
            flat.push_back(&s.steps[i][j]);
            where.emplace_back(i, j);
        }
    }
    std::vector<std::uint64_t> next_chain(s.num_qubits, 0);
    for (std::size_t k = flat.size(); k-- > 0;) {
        const Gate& g = *flat[k];
        std::uint64_t chain = 1 + next_chain[g.q0];
        if (gate_arity(g.kind) == 2) chain = std::max(chain, 1 + next_chain[g.q1]);
        steps[where[k].first][where[k].second].chain = chain;
        next_chain[g.q0] = chain;
        if (gate_arity(g.kind) == 2) next_chain[g.q1] = chain;
    }
    return steps;
}

bool shares_qubit(const Gate& a, const Gate& b) {
    if (b.touches(a.q0)) return true;
    return gate_arity(a.kind) == 2 && b.touches(a.q1);
}

// Moves a slot out of `from` into the following step. Every same-qubit gate
// at a later step is a successor, so skipping an occupied step would break
// the per-qubit order; the occupants ripple forward instead.
void push_forward(std::vector<std::vector<Slot>>& steps, Slot slot, std::size_t from) {
    std::vector<std::pair<Slot, std::size_t>> work;
    work.emplace_back(std::move(slot), from);
    while (!work.empty()) {
        auto [cur, prev] = std::move(work.back());
        work.pop_back();
        const std::size_t at = prev + 1;
        if (at >= steps.size()) steps.resize(at + 1);
        auto& step = steps[at];
        std::vector<Slot> displaced;
        for (std::size_t j = step.size(); j-- > 0;) {
            if (shares_qubit(cur.gate, step[j].gate)) {
                displaced.insert(displaced.begin(), step[j]);
                step.erase(step.begin() + static_cast<std::ptrdiff_t>(j));
            }
        }
        step.push_back(cur);
        for (Slot& d : displaced) work.emplace_back(std::move(d), at);
    }
}

} // namespace

Schedule serialize_t(const Schedule& s) {
    auto steps = make_slots(s);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        while (true) {
            std::vector<std::size_t> t_slots;
            for (std::size_t j = 0; j < steps[i].size(); ++j)
                if (consumes_t_state(steps[i][j].gate.kind)) t_slots.push_back(j);
            if (t_slots.size() <= 1) break;
            std::size_t keep = t_slots[0];
            for (std::size_t j : t_slots) {
                const Slot& cand = steps[i][j];
                const Slot& best = steps[i][keep];
                if (cand.chain > best.chain ||
                    (cand.chain == best.chain && cand.gate.q0 < best.gate.q0))
                    keep = j;
            }
            // Move the losers, lowest qubit first.
            std::vector<std::size_t> losers;
            for (std::size_t j : t_slots)
                if (j != keep) losers.push_back(j);
            std::sort(losers.begin(), losers.end(), [&](std::size_t x, std::size_t y) {
                return steps[i][x].gate.q0 < steps[i][y].gate.q0;
            });
            // Erase from the back so stored indices stay valid.
            std::vector<Slot> moving;
            for (std::size_t j : losers) moving.push_back(steps[i][j]);
            std::sort(losers.rbegin(), losers.rend());
            for (std::size_t j : losers)
                steps[i].erase(steps[i].begin() + static_cast<std::ptrdiff_t>(j));
            for (Slot& m : moving) push_forward(steps, m, i);
        }
    }
    Schedule out;
    out.num_qubits = s.num_qubits;
    out.t_serialized = true;
    out.source = s.source;
    out.steps.resize(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i)
        for (const Slot& slot : steps[i]) out.steps[i].push_back(slot.gate);
    trim_trailing_empty(out.steps);
    return out;
}

std::string serialize_schedule(const Schedule& s) {
    std::string out = "qubits " + std::to_string(s.num_qubits) + "\n";
    for (std::uint64_t i = 0; i < s.steps.size(); ++i) {
        for (const Gate& g : s.steps[i]) {
            out += "@" + std::to_string(i) + " " + detail::gate_text(g);
            out += '\n';
        }
    }
    return out;
}

Schedule parse_schedule(std::string_view text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing qubits header");
    Schedule s;
    s.num_qubits = detail::parse_qubits_header(lines.front());
    std::vector<std::int64_t> last_step(s.num_qubits, -1);
    std::uint64_t gate_count = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const std::string& head = line.tokens[0];
        if (head.size() < 2 || head[0] != '@')
            throw ParseError(line.number, "expected '@<step>' prefix, got '" + head + "'");
        std::uint64_t step = 0;
        auto [ptr, ec] = std::from_chars(head.data() + 1, head.data() + head.size(), step);
        if (ec != std::errc{} || ptr != head.data() + head.size())
            throw ParseError(line.number, "bad step prefix: '" + head + "'");
        if (line.tokens.size() < 2)
            throw ParseError(line.number, "step prefix without a gate");
        Gate g = detail::parse_gate_tokens(line.tokens, 1, line.number, s.num_qubits);
        auto claim = [&](std::uint32_t q) {
            if (static_cast<std::int64_t>(step) <= last_step[q])
                throw ParseError(line.number,
                                 "qubit q" + std::to_string(q) + " already busy at step " +
                                     std::to_string(step));
            last_step[q] = static_cast<std::int64_t>(step);
        };
        claim(g.q0);
        if (gate_arity(g.kind) == 2) claim(g.q1);
        if (step >= s.steps.size()) s.steps.resize(step + 1);
        s.steps[step].push_back(g);
        ++gate_count;
    }
    trim_trailing_empty(s.steps);
    s.t_serialized = max_parallel_t(s) <= 1;
    s.source = SourceMark{s.num_qubits, gate_count, schedule_t_count(s)};
    return s;
}

std::string distribution_csv(const TDistribution& d) {
    std::string out = "step,t_count\n";
    for (std::uint64_t i = 0; i < d.per_step.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(d.per_step[i]) + "\n";
    return out;
}

} // namespace distctl
