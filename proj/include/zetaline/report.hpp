#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zetaline {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

// A named result table plus metadata and optional auxiliary tables (e.g. search traces).
struct Report {
    std::string command;
    std::string name;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> meta;
    Table table;
    std::vector<std::pair<std::string, Table>> sections;
    bool has_checks = false;
    int failures = 0;

    // Check rows use the columns check,predicted,observed,tolerance,pass.
    static Report checks(std::string command, std::string name, std::uint64_t seed);
    void add_check(const std::string& id, double predicted, double observed, double tolerance, bool pass);
    bool passed() const { return failures == 0; }
};

// Locale-independent shortest round-trip formatting.
std::string format_cell(const Cell& c);

void write_csv(const Report& r, std::ostream& out);
void write_json(const Report& r, std::ostream& out);
std::string to_csv(const Report& r);
std::string to_json(const Report& r);

}  // namespace zetaline
