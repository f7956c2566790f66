#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ardlkit/timeseries.hpp"

namespace ardlkit::ingest {

enum class SourceKind { WhoCovid, EiaOil, CboeVix, EpuDaily };
enum class CovidScope { Total, China, OutsideChina };
enum class OilBenchmark { Wti, Brent };

std::string_view source_kind_name(SourceKind k);
std::string_view covid_scope_name(CovidScope s);
CovidScope parse_covid_scope(std::string_view text);  // total|china|outside_china (outside accepted)
std::string_view oil_name(OilBenchmark b);
OilBenchmark parse_oil(std::string_view text);

/**
 * Where one snapshot lives and how its columns map.
 *
 * who_covid reads two value columns (total new cases, China new cases); the
 * outside-China series is their difference. Every other kind reads one column.
 */
struct SourceSpec {
    SourceKind kind = SourceKind::EiaOil;
    std::filesystem::path path;
    std::string date_column = "date";
    std::vector<std::string> value_columns;
    CovidScope scope = CovidScope::Total;
    std::string units;
};

// Public URL each snapshot was taken from, for error messages and docs.
std::string_view source_url(SourceKind k);

Series load_source(const SourceSpec& spec);

struct PanelConfig {
    OilBenchmark dependent = OilBenchmark::Wti;
    CovidScope covid_scope = CovidScope::Total;
    int covid_shift = 1;   // WHO figures reported at t+1 explain the oil price at t
    int vix_shift = 0;
    int epu_shift = -1;    // EPU enters with a one-day delay
    Transform oil_transform = Transform::Log;
    Transform covid_transform = Transform::Log1p;
    Transform vix_transform = Transform::Log;
    Transform epu_transform = Transform::Log;
    Date window_start{2020, 1, 21};
    Date window_end{2020, 3, 9};
    int max_lag = 4;

    std::filesystem::path data_dir = "data";
    std::string who_file = "who_covid.csv";
    std::string oil_file = "eia_oil.csv";
    std::string vix_file = "cboe_vix.csv";
    std::string epu_file = "epu_daily.csv";
    std::vector<Date> plot_outliers{Date{2020, 2, 17}};

    // Applies one key=value setting; throws Error(Config) for unknown keys or bad values.
    void set(std::string_view key, std::string_view value);
    std::map<std::string, std::string> to_map() const;

    // The documented config keys, in help order.
    static const std::vector<std::pair<std::string, std::string>>& keys();
};

// Parses `key = value` lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_key_values(const std::filesystem::path& path);

std::vector<SourceSpec> default_sources(const PanelConfig& config);

// Column names the panel uses.
std::string oil_column(const PanelConfig& config);
std::string covid_column(const PanelConfig& config);
inline constexpr std::string_view kVixColumn = "vix";
inline constexpr std::string_view kEpuColumn = "epu";

/**
 * Loads, shifts (on each source's own calendar), transforms, intersects and
 * windows the sources. Column order: oil (dependent), COVID, VIX, EPU.
 * Throws Error(SampleTooSmall) when fewer than max_lag + 10 rows remain.
 */
Dataset build_dataset(const PanelConfig& config, const std::vector<SourceSpec>& sources);
Dataset build_dataset(const PanelConfig& config);

/**
 * Plot panel: untransformed, unshifted sources on the union calendar inside the
 * window, so weekend WHO reports (including excluded-from-figure outliers) appear.
 */
Dataset build_plot_dataset(const PanelConfig& config);

// Writes date, every column in level units, and an `outlier` 0/1 flag column.
void export_plot_data(const Dataset& dataset, const std::filesystem::path& path,
                      const std::vector<Date>& outliers);
// Reads an exported plot CSV back (columns keep level transform, zero shift).
Dataset import_plot_data(const std::filesystem::path& path);

}  // namespace ardlkit::ingest
