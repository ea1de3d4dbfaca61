#include "amp/cli.hpp"

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "amp/checks.hpp"
#include "amp/config.hpp"
#include "amp/csvio.hpp"
#include "amp/presets.hpp"

namespace amp {

namespace {

namespace fs = std::filesystem;

// Convenience plot script for the 1-axis tables: every value column against
// the first.
void write_gnuplot(const fs::path& path, const std::string& csv_name, const Table& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set xlabel '" << t.columns.front() << "'\n"
        << "plot";
    for (std::size_t c = 2; c <= t.columns.size(); ++c)
        out << (c == 2 ? " " : ", ") << "'" << csv_name << "' using 1:" << c << " with lines";
    out << "\npause -1\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_artifact(const std::string& stem, const Table& table, const nlohmann::json& meta,
                    const fs::path& dir, bool gnuplot) {
    fs::create_directories(dir);
    const fs::path csv = dir / (stem + ".csv");
    write_csv(csv, table);
    write_json(dir / (stem + ".meta.json"), meta);
    std::cout << "wrote " << csv.string() << "\n";
    if (gnuplot) write_gnuplot(dir / (stem + ".gp"), csv.filename().string(), table);
}

int cmd_figure(const std::string& id, const fs::path& dir, bool gnuplot) {
    if (!is_figure_id(id)) {
        std::string known;
        for (const auto& f : figure_ids()) known += (known.empty() ? "" : ", ") + f;
        throw ConfigError("unknown figure id '" + id + "'; known ids: " + known);
    }
    const FigureArtifact art = make_figure(id);
    write_artifact(art.id, art.table, art.meta, dir, gnuplot);
    return 0;
}

int cmd_table1() {
    std::printf("%-24s %-8s %12s %12s\n", "scheme", "geometry", "computed_%", "reference_%");
    for (const Table1Row& row : table1_rows())
        std::printf("%-24s %-8s %12.2f %12.1f\n", row.scheme.c_str(), row.geometry.c_str(),
                    row.computed_percent, row.reference_percent);
    return 0;
}

int cmd_sweep(const fs::path& config_file, const fs::path& dir, bool gnuplot) {
    const RunConfig cfg = load_run_config(config_file);
    if (!cfg.sweep)
        throw ConfigError(config_file.string() + ": no [sweep] section; nothing to run");
    const SweepOutcome out = run_config_sweep(cfg);
    const std::string stem =
        cfg.output_path ? *cfg.output_path : config_file.stem().string();
    write_artifact(stem, sweep_table(cfg, out.grid), sweep_meta(cfg, out), dir, gnuplot);

    const auto& axes = out.grid.spec.axes;
    std::cout << "grid maximum " << cfg.objective << " = " << format_double(out.grid.max_value);
    for (std::size_t i = 0; i < axes.size(); ++i)
        std::cout << (i == 0 ? " at " : ", ") << axes[i].param << " = "
                  << format_double(out.grid.argmax[i]);
    std::cout << "\nrefined maximum = " << format_double(out.refined.value);
    for (std::size_t i = 0; i < axes.size(); ++i)
        std::cout << (i == 0 ? " at " : ", ") << axes[i].param << " = "
                  << format_double(out.refined.x[i]);
    std::cout << (out.refined.converged ? "\n" : " (refinement hit its iteration cap)\n");
    return 0;
}

int cmd_check() {
    bool all_pass = true;
    for (const CriterionResult& r : run_all_criteria()) {
        std::printf("criterion %d: %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"reflection gain of a driven atom coupled to a 1D waveguide"};
    app.require_subcommand(1);

    std::string fig_id;
    std::string out_dir = ".";
    std::string config_file;
    bool gnuplot = false;

    CLI::App* fig = app.add_subcommand("figure", "write one bundled sweep dataset as CSV");
    fig->add_option("id", fig_id, "dataset id, e.g. fig2a")->required();
    fig->add_option("--out", out_dir, "output directory (default: .)");
    fig->add_flag("--gnuplot", gnuplot, "also write a gnuplot script");

    app.add_subcommand("table1", "print the summary gain table (computed vs reference)");

    CLI::App* sw = app.add_subcommand("sweep", "run a sweep described by a config file");
    sw->add_option("--config", config_file, "TOML or JSON run configuration")->required();
    sw->add_option("--out", out_dir, "output directory (default: .)");
    sw->add_flag("--gnuplot", gnuplot, "also write a gnuplot script");

    app.add_subcommand("check", "run the built-in acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is a config error
    }

    try {
        if (fig->parsed()) return cmd_figure(fig_id, out_dir, gnuplot);
        if (app.get_subcommand("table1")->parsed()) return cmd_table1();
        if (sw->parsed()) return cmd_sweep(config_file, out_dir, gnuplot);
        if (app.get_subcommand("check")->parsed()) return cmd_check();
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace amp
