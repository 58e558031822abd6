#include <limits>

#include "doctest.h"
#include "zetaline/report.hpp"

using namespace zetaline;

TEST_CASE("CSV output") {
    Report r = Report::checks("verify", "demo", 3);
    r.add_check("a,b", 0.1, 0.30000000000000004, 1e-6, false);
    r.add_check("ok", 1.0, 1.0, 0.0, true);
    CHECK(r.failures == 1);
    CHECK_FALSE(r.passed());
    CHECK(to_csv(r) ==
          "check,predicted,observed,tolerance,pass\n\"a,b\",0.1,0.30000000000000004,1e-06,fail\nok,1,1,0,pass\n");
}

TEST_CASE("empty table still has a header") {
    Report r;
    r.table.columns = {"x", "y"};
    CHECK(to_csv(r) == "x,y\n");
}

TEST_CASE("JSON output") {
    Report r = Report::checks("verify", "demo", 9);
    r.meta.emplace_back("k", "v");
    r.add_check("ok", 1.0, 1.0, 0.0, true);
    Table extra;
    extra.columns = {"T"};
    extra.add({2.5});
    r.sections.emplace_back("trace", extra);
    const std::string j = to_json(r);
    CHECK(j.find("\"schema\": \"v1\"") != std::string::npos);
    CHECK(j.find("\"seed\": 9") != std::string::npos);
    CHECK(j.find("\"passed\": true") != std::string::npos);
    CHECK(j.find("\"trace\"") != std::string::npos);
    CHECK(j.find("\"k\": \"v\"") != std::string::npos);
}

TEST_CASE("cell formatting") {
    CHECK(format_cell(Cell{1e-300}) == "1e-300");
    CHECK(format_cell(Cell{std::int64_t{-7}}) == "-7");
    CHECK(format_cell(Cell{true}) == "pass");
    CHECK(format_cell(Cell{std::numeric_limits<double>::infinity()}) == "inf");
}
