#include "distctl/layout.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace distctl;

TEST_SUITE("layout") {

TEST_CASE("layout depth doubles the step count") {
    LayoutParams p;
    CHECK(layout_depth(2288, p) == 4576);
    CHECK(layout_depth(1136, p) == 2272);
    CHECK(layout_depth(0, p) == 0);
}

TEST_CASE("qubit rows") {
    LayoutParams p;
    CHECK(qubit_rows(77, p) == 11);
    CHECK(qubit_rows(7, p) == 1);
    CHECK(qubit_rows(192, p) == 28);
    CHECK(qubit_rows(0, p) == 0);
}

TEST_CASE("heights of the benchmark adders") {
    LayoutParams p;
    CHECK(layout_height(192, p) == 40);
    CHECK(layout_height(384, p) == 67);
    CHECK(layout_height(768, p) == 122);
    CHECK(layout_height(1536, p) == 232);
}

TEST_CASE("controlled width is the box width") {
    LayoutParams p;
    CHECK(layout_width(7, true, p) == 16);
    CHECK(layout_width(0, true, p) == 16);
    CHECK_THROWS_AS(layout_width(9, true, p), std::invalid_argument);
}

TEST_CASE("uncontrolled width fits the peak pool as line pairs plus routing") {
    LayoutParams p;
    CHECK(layout_width(36, false, p) == 73);
    CHECK(layout_width(72, false, p) == 145);
    CHECK(layout_width(146, false, p) == 293);
    CHECK(layout_width(292, false, p) == 585);
    CHECK(layout_width(0, false, p) == 16);
    CHECK(layout_width(5, false, p) == 16);
}

TEST_CASE("minimum execution time") {
    LayoutParams p;
    CHECK(min_execution_time(252, p) == 756);
    CHECK(min_execution_time(508, p) == 1524);
    CHECK(min_execution_time(0, p) == 0);
}

TEST_CASE("volume and improvement") {
    LayoutParams p;
    ResourceReport base = build_report(512, 2044, false, std::nullopt, 9200, 1536, 292, 0, p);
    ResourceReport ctl = build_report(512, 2044, true, 7, 9200, 1536, 7, 0, p);
    CHECK(base.volume == 18400ull * 585 * 232);
    CHECK(ctl.volume == 18400ull * 16 * 232);
    CHECK(improvement(base, ctl) == doctest::Approx(36.5625));
    CHECK(improvement(base, base) == doctest::Approx(1.0));

    ResourceReport base64 = build_report(64, 252, false, std::nullopt, 1136, 192, 36, 0, p);
    ResourceReport ctl64 = build_report(64, 252, true, 7, 1136, 192, 7, 0, p);
    CHECK(improvement(base64, ctl64) == doctest::Approx(4.5625));
}

TEST_CASE("improvement rejects mismatched or degenerate reports") {
    LayoutParams p;
    ResourceReport a = build_report(64, 252, false, std::nullopt, 1136, 192, 36, 0, p);
    ResourceReport other = build_report(128, 508, true, 7, 2288, 384, 7, 0, p);
    CHECK_THROWS_AS(improvement(a, other), std::invalid_argument);
    ResourceReport zero = build_report(64, 252, true, 7, 0, 192, 0, 0, p);
    CHECK_THROWS_AS(improvement(a, zero), std::invalid_argument);
}

TEST_CASE("params validation") {
    LayoutParams p;
    CHECK_NOTHROW(p.validate());
    LayoutParams bad_dist = p;
    bad_dist.dist_t = 4;
    CHECK_THROWS_AS(bad_dist.validate(), std::invalid_argument);
    LayoutParams bad_row = p;
    bad_row.qubits_per_row = 8;
    CHECK_THROWS_AS(bad_row.validate(), std::invalid_argument);
}

TEST_CASE("extents are monotone in their inputs") {
    LayoutParams p;
    for (std::uint64_t x = 1; x < 200; ++x) {
        CHECK(layout_depth(x, p) >= layout_depth(x - 1, p));
        CHECK(layout_height(x, p) >= layout_height(x - 1, p));
        CHECK(layout_width(x, false, p) >= layout_width(x - 1, false, p));
    }
}

TEST_CASE("report json carries the exact key set") {
    LayoutParams p;
    ResourceReport r = build_report(64, 252, true, 7, 1136, 192, 7, 0, p);
    r.improvement = 4.5625;
    std::string j = report_json(r);
    for (const char* key : {"\"n\"", "\"t_count\"", "\"mode\"", "\"capacity\"", "\"depth\"",
                            "\"width\"", "\"height\"", "\"volume\"", "\"max_pool\"", "\"delays\"",
                            "\"improvement\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(j.find("\"mode\": \"controlled\"") != std::string::npos);

    ResourceReport base = build_report(64, 252, false, std::nullopt, 1136, 192, 36, 0, p);
    std::string jb = report_json(base);
    CHECK(jb.find("\"capacity\": \"unbounded\"") != std::string::npos);
    CHECK(jb.find("improvement") == std::string::npos);
}

} // TEST_SUITE
