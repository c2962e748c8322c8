#include <doctest.h>

#include <json.hpp>

#include "dyckdes/export.hpp"
#include "dyckdes/tables.hpp"

using namespace dyckdes;

// Golden pin of the reference descent-count table, rows 0..7.
static const char* kEulerianCsv7 =
    "n,k,count\n"
    "0,0,1\n"
    "1,0,1\n"
    "2,0,1\n"
    "2,1,1\n"
    "3,0,0\n"
    "3,1,4\n"
    "3,2,1\n"
    "4,0,0\n"
    "4,1,2\n"
    "4,2,11\n"
    "4,3,1\n"
    "5,0,0\n"
    "5,1,0\n"
    "5,2,15\n"
    "5,3,26\n"
    "5,4,1\n"
    "6,0,0\n"
    "6,1,0\n"
    "6,2,5\n"
    "6,3,69\n"
    "6,4,57\n"
    "6,5,1\n"
    "7,0,0\n"
    "7,1,0\n"
    "7,2,0\n"
    "7,3,56\n"
    "7,4,252\n"
    "7,5,120\n"
    "7,6,1\n";

TEST_CASE("eulerian CSV matches the golden table") {
    CHECK(eulerian_csv(eulerian_rows(7)) == kEulerianCsv7);
}

TEST_CASE("eulerian CSV for max_n 0") {
    CHECK(eulerian_csv(eulerian_rows(0)) == "n,k,count\n0,0,1\n");
}

TEST_CASE("tristat CSV contains the expected sparse rows") {
    auto t = build_tables(3);
    std::string all = tristat_csv(t.a);
    CHECK(all.find("3,1,0,3\n") != std::string::npos);
    CHECK(all.find("0,0,0,1\n") != std::string::npos);
    std::vector<TriStatTable> irr(t.b.begin() + 1, t.b.end());
    CHECK(tristat_csv(irr).find("3,0,1,1\n") != std::string::npos);
}

TEST_CASE("JSON export carries counts as strings and is well-formed") {
    auto rows = eulerian_rows(3);
    auto j = nlohmann::json::parse(eulerian_json(rows, 3));
    CHECK(j["kind"] == "eulerian");
    CHECK(j["max_n"] == 3);
    CHECK(j["rows"].back()["count"] == "1");
    CHECK(j["rows"].back()["n"] == 3);

    auto t = build_tables(2);
    auto jt = nlohmann::json::parse(tristat_json(t.a, 2, TableKind::all_paths));
    CHECK(jt["kind"] == "tristat");
    CHECK(jt["rows"].size() == 4);
}
