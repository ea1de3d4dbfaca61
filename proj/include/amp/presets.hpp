#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amp/config.hpp"
#include "amp/csvio.hpp"

namespace amp {

// Canned figure reproductions. Each id yields one CSV table plus sidecar
// metadata; parameters a caption leaves open (fig3 anharmonicity, fig6 drive
// detuning) are recorded under meta["assumed"].
struct FigureArtifact {
    std::string id;
    Table table;
    nlohmann::json meta;
};

const std::vector<std::string>& figure_ids();
bool is_figure_id(const std::string& id);

// The RunConfig behind single-sweep figures (fig2a, fig2c, fig3a, fig4a,
// fig5a, fig6a/b/c); composite figures (fig2b, fig3b, fig4b, fig5c) assemble
// several runs and throw here.
RunConfig figure_preset(const std::string& id);

FigureArtifact make_figure(const std::string& id);

// Long-format table for a sweep grid (axis columns + objective column) and
// the deterministic sidecar for it. Shared by `figure` and `sweep` so a user
// config replicating a preset emits byte-identical CSV.
Table sweep_table(const RunConfig& cfg, const SweepResult& grid);
nlohmann::json sweep_meta(const RunConfig& cfg, const SweepOutcome& out);

// Summary-table rows: computed amplitude gain (percent) next to the bundled
// reference value for all six scheme/geometry combinations.
struct Table1Row {
    std::string scheme;
    std::string geometry;
    double computed_percent = 0.0;
    double reference_percent = 0.0;
};

std::vector<Table1Row> table1_rows();

}  // namespace amp
