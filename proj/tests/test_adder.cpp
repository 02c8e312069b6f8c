#include "distctl/adder.hpp"

#include "distctl/schedule.hpp"

#include <doctest.h>

using namespace distctl;

namespace {

std::uint64_t last_t_index(const GateList& g) {
    std::uint64_t last = 0;
    for (std::uint64_t i = 0; i < g.gates.size(); ++i)
        if (consumes_t_state(g.gates[i].kind)) last = i;
    return last;
}

} // namespace

TEST_SUITE("adder") {

TEST_CASE("rejects degenerate widths") {
    CHECK_THROWS_AS(generate_adder(0u), std::invalid_argument);
    CHECK_THROWS_AS(generate_adder(1u), std::invalid_argument);
}

TEST_CASE("T-count is 4n-4 and the register is 3n wide") {
    for (std::uint32_t n : {2u, 3u, 4u, 5u, 8u, 16u, 64u, 128u, 256u, 512u}) {
        CAPTURE(n);
        GateList g = generate_adder(n);
        CHECK(g.num_qubits == 3 * n);
        CHECK(t_count(g) == 4ull * n - 4);
        CHECK_NOTHROW(validate(g));
    }
}

TEST_CASE("benchmark T-counts") {
    CHECK(t_count(generate_adder(64u)) == 252);
    CHECK(t_count(generate_adder(128u)) == 508);
    CHECK(t_count(generate_adder(256u)) == 1020);
    CHECK(t_count(generate_adder(512u)) == 2044);
    CHECK(t_count(generate_adder(3u)) == 8);
    CHECK(t_count(generate_adder(2u)) == 4);
}

TEST_CASE("every T-consuming gate precedes a non-empty Clifford tail") {
    for (std::uint32_t n : {2u, 3u, 8u, 64u}) {
        CAPTURE(n);
        GateList g = generate_adder(n);
        CHECK(last_t_index(g) < g.gates.size() - 1);
    }
}

TEST_CASE("scheduled depth follows 18n-16") {
    for (std::uint32_t n : {2u, 3u, 4u, 8u, 64u, 256u, 512u}) {
        CAPTURE(n);
        Schedule s = schedule_asap(generate_adder(n));
        CHECK(depth(s) == 18ull * n - 16);
        CHECK(depth(serialize_t(s)) == 18ull * n - 16);
    }
}

TEST_CASE("serialized T gates fall on the documented block offsets") {
    Schedule s = serialize_t(schedule_asap(generate_adder(5u)));
    std::vector<std::uint64_t> t_steps;
    for (std::uint64_t i = 0; i < s.steps.size(); ++i)
        for (const Gate& g : s.steps[i])
            if (consumes_t_state(g.kind)) t_steps.push_back(i);
    CHECK(t_steps == std::vector<std::uint64_t>{3, 6, 9, 12, 15, 18, 24, 25, 30, 33, 36, 39, 44,
                                                47, 50, 53});
}

TEST_CASE("generation is deterministic") {
    CHECK(generate_adder(9u) == generate_adder(9u));
}

} // TEST_SUITE
