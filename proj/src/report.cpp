#include "qint/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qint {

void Report::add(const std::string& id, double value, double tol_) {
    checks.push_back({id, value, tol_, value <= tol_});
}

void Report::add_floor(const std::string& id, double value, double floor) {
    checks.push_back({id, value, floor, value >= floor});
}

void Report::info(const std::string& id, double value) {
    checks.push_back({id, value, std::numeric_limits<double>::quiet_NaN(), true});
}

bool Report::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_json(const Report& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"command\": \"" << r.command << "\",\n";
    os << "  \"seed\": " << r.seed << ",\n";
    os << "  \"nodes\": " << r.nodes << ",\n";
    os << "  \"tol\": " << fmt17(r.tol) << ",\n";
    os << "  \"checks\": [\n";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        os << "    {\"assert_id\": \"" << c.assert_id << "\", \"value\": " << fmt17(c.value)
           << ", \"tol\": ";
        if (std::isnan(c.tol)) {
            os << "null";
        } else {
            os << fmt17(c.tol);
        }
        os << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
        os << (i + 1 < r.checks.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"pass\": " << (r.pass() ? "true" : "false") << "\n";
    os << "}\n";
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    os << "assert_id,value,tol,pass\n";
    for (const auto& c : r.checks) {
        os << c.assert_id << "," << fmt17(c.value) << ",";
        if (std::isnan(c.tol)) {
            os << "";
        } else {
            os << fmt17(c.tol);
        }
        os << "," << (c.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

}  // namespace

void write_json(const Report& r, const std::string& path) { write_file(path, render_json(r)); }
void write_csv(const Report& r, const std::string& path) { write_file(path, render_csv(r)); }

}  // namespace qint
