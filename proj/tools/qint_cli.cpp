#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qint/experiments.hpp"
#include "qint/report.hpp"

namespace {

// Applies the config file on top of the defaults. Unknown keys and type
// mismatches are config errors (usage exit code), not assertion failures.
void apply_config(const nlohmann::json& doc, const std::string& command,
                  qint::ExperimentConfig& cfg, std::string& out_dir) {
    if (!doc.is_object()) throw std::runtime_error("config root must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "seed") {
            if (!value.is_number_unsigned()) throw std::runtime_error("config: seed must be a nonnegative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "nodes") {
            if (!value.is_number_integer() || value.get<int>() <= 0)
                throw std::runtime_error("config: nodes must be a positive integer");
            cfg.nodes = value.get<int>();
        } else if (key == "tol") {
            if (!value.is_number() || value.get<double>() <= 0.0)
                throw std::runtime_error("config: tol must be a positive number");
            cfg.tol = value.get<double>();
        } else if (key == "out") {
            if (!value.is_string()) throw std::runtime_error("config: out must be a string");
            out_dir = value.get<std::string>();
        } else if (key == "command") {
            if (!value.is_string() || value.get<std::string>() != command)
                throw std::runtime_error("config: command does not match the invoked subcommand");
        } else {
            throw std::runtime_error("config: unknown key '" + key + "'");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic integral-formula experiment harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int nodes = 0;
    double tol = 0.0;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "report output directory");
    app.add_option("--seed", seed, "random seed override");
    app.add_option("--nodes", nodes, "quadrature nodes per axis override");
    app.add_option("--tol", tol, "headline tolerance override");

    for (const std::string& name : qint::command_names()) {
        app.add_subcommand(name)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    qint::ExperimentConfig cfg;

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config file: " << config_path << "\n";
            return 2;
        }
        try {
            const nlohmann::json doc = nlohmann::json::parse(in);
            apply_config(doc, command, cfg, out_dir);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    if (app.count("--seed") > 0) cfg.seed = seed;
    if (app.count("--nodes") > 0) {
        if (nodes <= 0) {
            std::cerr << "error: --nodes must be positive\n";
            return 2;
        }
        cfg.nodes = nodes;
    }
    if (app.count("--tol") > 0) {
        if (tol <= 0.0) {
            std::cerr << "error: --tol must be positive\n";
            return 2;
        }
        cfg.tol = tol;
    }

    const qint::Runner runner = qint::find_runner(command);
    if (runner == nullptr) {
        std::cerr << "error: unknown subcommand: " << command << "\n";
        return 2;
    }

    qint::Report report;
    try {
        report = runner(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory: " << out_dir << "\n";
        return 2;
    }
    const std::string stem = out_dir + "/" + command;
    try {
        qint::write_json(report, stem + ".json");
        qint::write_csv(report, stem + ".csv");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (const qint::CheckRow& row : report.checks) {
        std::cout << (row.pass ? "PASS" : "FAIL") << "  " << row.assert_id << "  value="
                  << qint::fmt17(row.value);
        if (!std::isnan(row.tol)) std::cout << "  tol=" << qint::fmt17(row.tol);
        std::cout << "\n";
    }
    std::cout << command << ": " << (report.pass() ? "PASS" : "FAIL") << " ("
              << report.checks.size() << " checks)\n";
    return report.pass() ? 0 : 1;
}
