#include "zetaline/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace zetaline {

void Table::add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

Report Report::checks(std::string command, std::string name, std::uint64_t seed) {
    Report r;
    r.command = std::move(command);
    r.name = std::move(name);
    r.seed = seed;
    r.has_checks = true;
    r.table.columns = {"check", "predicted", "observed", "tolerance", "pass"};
    return r;
}

void Report::add_check(const std::string& id, double predicted, double observed, double tolerance, bool pass) {
    table.add({id, predicted, observed, tolerance, pass});
    if (!pass) ++failures;
}

std::string format_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (std::isnan(*d)) return "nan";
        if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, *d);
        return std::string(buf, res.ptr);
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&c)) return *b ? "pass" : "fail";
    return std::get<std::string>(c);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return format_cell(c);
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (const auto* b = std::get_if<bool>(&c)) return *b;
    return std::get<std::string>(c);
}

nlohmann::ordered_json table_json(const Table& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t j = 0; j < t.columns.size() && j < row.size(); ++j) obj[t.columns[j]] = cell_json(row[j]);
        rows.push_back(std::move(obj));
    }
    return {{"columns", t.columns}, {"rows", rows}};
}

}  // namespace

void write_csv(const Report& r, std::ostream& out) {
    for (std::size_t j = 0; j < r.table.columns.size(); ++j) out << (j ? "," : "") << r.table.columns[j];
    out << '\n';
    for (const auto& row : r.table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_escape(format_cell(row[j]));
        out << '\n';
    }
}

void write_json(const Report& r, std::ostream& out) {
    nlohmann::ordered_json j;
    j["schema"] = "v1";
    j["command"] = r.command;
    j["name"] = r.name;
    j["seed"] = r.seed;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.meta) meta[k] = v;
    j["meta"] = meta;
    const auto main = table_json(r.table);
    j["columns"] = main["columns"];
    j["rows"] = main["rows"];
    nlohmann::ordered_json sections = nlohmann::ordered_json::object();
    for (const auto& [name, t] : r.sections) sections[name] = table_json(t);
    j["sections"] = sections;
    if (r.has_checks) {
        j["failures"] = r.failures;
        j["passed"] = r.passed();
    }
    out << j.dump(2) << '\n';
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    write_csv(r, os);
    return os.str();
}

std::string to_json(const Report& r) {
    std::ostringstream os;
    write_json(r, os);
    return os.str();
}

}  // namespace zetaline
