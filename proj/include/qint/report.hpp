#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qint {

// One assertion row of an experiment report. assert_id is a stable
// kebab-case identifier; value is the measured residual or quantity; the row
// passes when value <= tol (or when tol is NaN, in which case the row is
// informational and always passes).
struct CheckRow {
    std::string assert_id;
    double value = 0.0;
    double tol = 0.0;
    bool pass = true;
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    int nodes = 0;
    double tol = 0.0;
    std::vector<CheckRow> checks;

    void add(const std::string& id, double value, double tol);
    // Lower-bound assertion: passes when value >= floor. The floor is stored
    // in the tol column; the id should carry an "-at-least" suffix so the row
    // reads unambiguously.
    void add_floor(const std::string& id, double value, double floor);
    void info(const std::string& id, double value);  // informational row
    bool pass() const;
};

// %.17g rendering used for every float in reports (deterministic, lossless)
std::string fmt17(double v);

// Deterministic writers: fixed key order, no timestamps, '\n' line ends.
void write_json(const Report& r, const std::string& path);
void write_csv(const Report& r, const std::string& path);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);

}  // namespace qint
