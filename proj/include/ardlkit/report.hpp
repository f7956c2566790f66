#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ardlkit/ardl.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/ingest.hpp"
#include "ardlkit/unit_root.hpp"
#include "json.hpp"

namespace ardlkit::report {

using json = nlohmann::ordered_json;

struct ModelKey {
    ingest::OilBenchmark dependent = ingest::OilBenchmark::Wti;
    ingest::CovidScope scope = ingest::CovidScope::Total;

    std::string id() const;  // "wti_total", "brent_outside_china", ...
};

// WTI then BRENT, each total / china / outside_china.
std::vector<ModelKey> all_models();

struct Options {
    ardl::CvTable table = ardl::CvTable::PssCase2;
    double level = 0.05;
    unsigned workers = 0;
    double t_floor = ardl::kNormalizationFloor;
    int diag_lags = 4;
    unit_root::TestKind unit_root_test = unit_root::TestKind::PhillipsPerron;
    bool bewley = false;  // also report Bewley-regression long-run standard errors
};

struct ModelResult {
    ModelKey key;
    ingest::PanelConfig config;
    Dataset panel;
    ardl::Selection selection;
    ardl::ArdlFit fit;
    ardl::BoundsResult bounds;
    std::string conclusion;  // graded: 5% then 10%
    std::optional<ardl::LongRunEquation> long_run;
    std::optional<ardl::LongRunEquation> bewley;
    std::optional<ardl::EcmFit> ecm;
    diag::Report diagnostics;
    std::vector<std::string> warnings;
};

ModelResult run_model(const ingest::PanelConfig& base, const ModelKey& key, const Options& options);

// Display label of a design term, e.g. "L1.vix" -> "VIX_{t}" (long-run form) and
// "D.covid_total.L1" -> "ΔCOVID-19_{t}" once the column's shift is applied.
std::string long_run_label(const Dataset& panel, std::string_view column);
std::string short_run_label(const Dataset& panel, std::string_view term);

json bounds_json(const ModelResult& m);
json fit_json(const ModelResult& m);
json diagnostics_json(const diag::Report& r);

std::string render_bounds(const std::vector<ModelResult>& models);
// Long-run block, short-run block and tests block, one column pair per model.
std::string render_fits(const std::vector<ModelResult>& models);

struct SummaryEntry {
    std::string variable;
    ColumnSummary stats;
};
// Raw levels of every source inside the window, each on its own calendar.
std::vector<SummaryEntry> summary_panel(const ingest::PanelConfig& config);
json summary_json(const std::vector<SummaryEntry>& s);
std::string render_summary(const std::vector<SummaryEntry>& s);

struct UnitRootEntry {
    std::string variable;
    unit_root::Classification result;
};
// Columns of the estimation panel (as transformed and shifted), one entry per deterministic case.
std::vector<UnitRootEntry> unit_root_panel(const ingest::PanelConfig& config, unit_root::TestKind kind,
                                           unit_root::Deterministic d);
json unit_root_json(const std::vector<UnitRootEntry>& entries, bool annotate);
std::string render_unit_roots(const std::vector<UnitRootEntry>& entries);

void write_cusum_csv(const ModelResult& m, const std::filesystem::path& path);

struct Bundle {
    json doc;
    std::string text;
    std::vector<ModelResult> models;
};

Bundle replicate(const ingest::PanelConfig& config, const Options& options, const std::vector<ModelKey>& models);

// Writes replicate.json, replicate.txt and cusum_<model>.csv into `dir`.
void write_bundle(const Bundle& bundle, const std::filesystem::path& dir);

std::string dump(const json& j);  // two-space indent, trailing newline

}  // namespace ardlkit::report
