#include "ardlkit/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "ardlkit/csv.hpp"
#include "ardlkit/error.hpp"

namespace ardlkit::ingest {

std::string_view source_kind_name(SourceKind k) {
    switch (k) {
        case SourceKind::WhoCovid: return "who_covid";
        case SourceKind::EiaOil: return "eia_oil";
        case SourceKind::CboeVix: return "cboe_vix";
        case SourceKind::EpuDaily: return "epu_daily";
    }
    return "";
}

std::string_view source_url(SourceKind k) {
    switch (k) {
        case SourceKind::WhoCovid:
            return "https://www.who.int/emergencies/diseases/novel-coronavirus-2019/situation-reports";
        case SourceKind::EiaOil: return "https://www.eia.gov/dnav/pet/pet_pri_spt_s1_d.htm";
        case SourceKind::CboeVix: return "https://www.cboe.com/tradable_products/vix/vix_historical_data/";
        case SourceKind::EpuDaily: return "https://www.policyuncertainty.com/us_daily.html";
    }
    return "";
}

std::string_view covid_scope_name(CovidScope s) {
    switch (s) {
        case CovidScope::Total: return "total";
        case CovidScope::China: return "china";
        case CovidScope::OutsideChina: return "outside_china";
    }
    return "";
}

CovidScope parse_covid_scope(std::string_view text) {
    if (text == "total") return CovidScope::Total;
    if (text == "china") return CovidScope::China;
    if (text == "outside_china" || text == "outside") return CovidScope::OutsideChina;
    throw Error(ErrorKind::Config, "unknown covid scope '" + std::string(text) + "' (total|china|outside_china)");
}

std::string_view oil_name(OilBenchmark b) { return b == OilBenchmark::Wti ? "wti" : "brent"; }

OilBenchmark parse_oil(std::string_view text) {
    if (text == "wti") return OilBenchmark::Wti;
    if (text == "brent") return OilBenchmark::Brent;
    throw Error(ErrorKind::Config, "unknown dependent '" + std::string(text) + "' (wti|brent)");
}

namespace {

std::string where(const SourceSpec& spec, std::size_t line) {
    return spec.path.string() + ":" + std::to_string(line);
}

}  // namespace

Series load_source(const SourceSpec& spec) {
    if (!std::filesystem::exists(spec.path)) {
        throw Error(ErrorKind::Io, "missing " + std::string(source_kind_name(spec.kind)) + " snapshot '" +
                                       spec.path.string() + "' (source: " + std::string(source_url(spec.kind)) +
                                       ")");
    }
    const auto table = csv::read(spec.path);
    const auto date_col = table.column(spec.date_column);
    const std::size_t want = spec.kind == SourceKind::WhoCovid ? 2 : 1;
    if (spec.value_columns.size() != want) {
        throw Error(ErrorKind::Config, std::string(source_kind_name(spec.kind)) + " needs " +
                                           std::to_string(want) + " value column(s)");
    }
    std::vector<std::size_t> cols;
    for (const auto& name : spec.value_columns) cols.push_back(table.column(name));

    std::vector<Date> dates;
    std::vector<double> values;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const auto line = table.line_numbers[r];
        Date d;
        try {
            d = Date::parse(row[date_col]);
        } catch (const Error& e) {
            throw Error(ErrorKind::Parse, where(spec, line) + ": " + e.what());
        }
        std::vector<double> v;
        bool missing = false;
        for (auto c : cols) {
            if (row[c].empty() || row[c] == "NA" || row[c] == ".") {
                missing = true;
                break;
            }
            bool ok = false;
            v.push_back(csv::parse_double(row[c], ok));
            if (!ok || !std::isfinite(v.back())) {
                throw Error(ErrorKind::Parse, where(spec, line) + ": non-numeric value '" + row[c] + "' in column '" +
                                                  table.header[c] + "'");
            }
        }
        if (missing) continue;

        double value = v[0];
        if (spec.kind == SourceKind::WhoCovid) {
            const double total = v[0], china = v[1];
            const double outside = total - china;
            if (outside < 0) {
                throw Error(ErrorKind::Data, where(spec, line) + ": China count " + row[cols[1]] +
                                                 " exceeds total " + row[cols[0]] + " on " + d.iso());
            }
            value = spec.scope == CovidScope::Total ? total : spec.scope == CovidScope::China ? china : outside;
        }
        if (!dates.empty() && !(dates.back() < d)) {
            throw Error(ErrorKind::Parse, where(spec, line) + ": date " + d.iso() + " out of order or duplicated");
        }
        dates.push_back(d);
        values.push_back(value);
    }

    std::string name;
    switch (spec.kind) {
        case SourceKind::WhoCovid: name = "covid_" + std::string(covid_scope_name(spec.scope)); break;
        case SourceKind::EiaOil: name = spec.value_columns[0]; break;
        case SourceKind::CboeVix: name = "vix"; break;
        case SourceKind::EpuDaily: name = "epu"; break;
    }
    return Series(std::move(name), std::move(dates), std::move(values), spec.units);
}

namespace {

int parse_int(std::string_view key, std::string_view text) {
    if (!text.empty() && text[0] == '+') text.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::Config, "key '" + std::string(key) + "': expected integer, got '" + std::string(text) + "'");
    }
    return v;
}

Date parse_date_value(std::string_view key, std::string_view text) {
    try {
        return Date::parse(text);
    } catch (const Error&) {
        throw Error(ErrorKind::Config, "key '" + std::string(key) + "': expected YYYY-MM-DD, got '" + std::string(text) + "'");
    }
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& PanelConfig::keys() {
    static const std::vector<std::pair<std::string, std::string>> k = {
        {"dependent", "oil benchmark used as dependent variable: wti|brent"},
        {"covid_scope", "WHO new-case series: total|china|outside_china"},
        {"shift.covid", "COVID column shift in days (+1 = value reported next day)"},
        {"shift.vix", "VIX column shift in days"},
        {"shift.epu", "EPU column shift in days (-1 = previous day)"},
        {"transform.oil", "level|log|log1p"},
        {"transform.covid", "level|log|log1p"},
        {"transform.vix", "level|log|log1p"},
        {"transform.epu", "level|log|log1p"},
        {"window.start", "first panel date (YYYY-MM-DD)"},
        {"window.end", "last panel date (YYYY-MM-DD)"},
        {"max_lag", "maximum ARDL lag order"},
        {"data_dir", "directory holding the snapshot CSVs"},
        {"file.who", "WHO snapshot file name"},
        {"file.oil", "EIA oil snapshot file name"},
        {"file.vix", "CBOE VIX snapshot file name"},
        {"file.epu", "EPU snapshot file name"},
        {"plot.outliers", "comma-separated dates flagged in plot exports"},
    };
    return k;
}

void PanelConfig::set(std::string_view key, std::string_view value) {
    const std::string v(value);
    if (key == "dependent") dependent = parse_oil(v);
    else if (key == "covid_scope") covid_scope = parse_covid_scope(v);
    else if (key == "shift.covid") covid_shift = parse_int(key, v);
    else if (key == "shift.vix") vix_shift = parse_int(key, v);
    else if (key == "shift.epu") epu_shift = parse_int(key, v);
    else if (key == "transform.oil") oil_transform = parse_transform(v);
    else if (key == "transform.covid") covid_transform = parse_transform(v);
    else if (key == "transform.vix") vix_transform = parse_transform(v);
    else if (key == "transform.epu") epu_transform = parse_transform(v);
    else if (key == "window.start") window_start = parse_date_value(key, v);
    else if (key == "window.end") window_end = parse_date_value(key, v);
    else if (key == "max_lag") {
        max_lag = parse_int(key, v);
        if (max_lag < 0) throw Error(ErrorKind::Config, "max_lag must be >= 0");
    }
    else if (key == "data_dir") data_dir = v;
    else if (key == "file.who") who_file = v;
    else if (key == "file.oil") oil_file = v;
    else if (key == "file.vix") vix_file = v;
    else if (key == "file.epu") epu_file = v;
    else if (key == "plot.outliers") {
        plot_outliers.clear();
        for (const auto& f : csv::split_line(v)) {
            if (!f.empty()) plot_outliers.push_back(parse_date_value(key, f));
        }
    } else {
        throw Error(ErrorKind::Config, "unknown config key '" + std::string(key) + "'");
    }
}

std::map<std::string, std::string> PanelConfig::to_map() const {
    std::string outliers;
    for (const auto& d : plot_outliers) outliers += (outliers.empty() ? "" : ",") + d.iso();
    return {
        {"dependent", std::string(oil_name(dependent))},
        {"covid_scope", std::string(covid_scope_name(covid_scope))},
        {"shift.covid", std::to_string(covid_shift)},
        {"shift.vix", std::to_string(vix_shift)},
        {"shift.epu", std::to_string(epu_shift)},
        {"transform.oil", std::string(transform_name(oil_transform))},
        {"transform.covid", std::string(transform_name(covid_transform))},
        {"transform.vix", std::string(transform_name(vix_transform))},
        {"transform.epu", std::string(transform_name(epu_transform))},
        {"window.start", window_start.iso()},
        {"window.end", window_end.iso()},
        {"max_lag", std::to_string(max_lag)},
        {"data_dir", data_dir.string()},
        {"file.who", who_file},
        {"file.oil", oil_file},
        {"file.vix", vix_file},
        {"file.epu", epu_file},
        {"plot.outliers", outliers},
    };
}

std::vector<std::pair<std::string, std::string>> read_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open config '" + path.string() + "'");
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::Config, path.string() + ":" + std::to_string(lineno) + ": expected key=value");
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

std::vector<SourceSpec> default_sources(const PanelConfig& c) {
    return {
        {SourceKind::WhoCovid, c.data_dir / c.who_file, "date", {"total_new", "china_new"}, c.covid_scope, "persons/day"},
        {SourceKind::EiaOil, c.data_dir / c.oil_file, "date", {std::string(oil_name(c.dependent))}, CovidScope::Total,
         "USD/barrel"},
        {SourceKind::CboeVix, c.data_dir / c.vix_file, "date", {"vix_close"}, CovidScope::Total, "index points"},
        {SourceKind::EpuDaily, c.data_dir / c.epu_file, "date", {"daily_policy_index"}, CovidScope::Total, "index"},
    };
}

std::string oil_column(const PanelConfig& c) { return std::string(oil_name(c.dependent)); }
std::string covid_column(const PanelConfig& c) { return "covid_" + std::string(covid_scope_name(c.covid_scope)); }

namespace {

const SourceSpec& find_source(const std::vector<SourceSpec>& sources, SourceKind kind) {
    for (const auto& s : sources) {
        if (s.kind == kind) return s;
    }
    throw Error(ErrorKind::Config, "no " + std::string(source_kind_name(kind)) + " source given");
}

Column prepare(const Series& raw, std::string name, int k, Transform t) {
    Series s = transform(shift(raw, k), t).renamed(std::move(name));
    return {std::move(s), t, k};
}

}  // namespace

Dataset build_dataset(const PanelConfig& c, const std::vector<SourceSpec>& sources) {
    if (c.window_end < c.window_start) throw Error(ErrorKind::Config, "window.end precedes window.start");
    auto oil = load_source(find_source(sources, SourceKind::EiaOil));
    auto covid = load_source(find_source(sources, SourceKind::WhoCovid));
    auto vix = load_source(find_source(sources, SourceKind::CboeVix));
    auto epu = load_source(find_source(sources, SourceKind::EpuDaily));

    std::vector<Column> cols;
    cols.push_back(prepare(oil, oil_column(c), 0, c.oil_transform));
    cols.push_back(prepare(covid, covid_column(c), c.covid_shift, c.covid_transform));
    cols.push_back(prepare(vix, std::string(kVixColumn), c.vix_shift, c.vix_transform));
    cols.push_back(prepare(epu, std::string(kEpuColumn), c.epu_shift, c.epu_transform));

    Dataset panel = align(std::move(cols)).window(c.window_start, c.window_end);
    const auto need = static_cast<std::size_t>(c.max_lag + 10);
    if (panel.rows() < need) {
        throw Error(ErrorKind::SampleTooSmall, "panel has " + std::to_string(panel.rows()) + " rows; max_lag " +
                                                   std::to_string(c.max_lag) + " needs at least " +
                                                   std::to_string(need));
    }
    return panel;
}

Dataset build_dataset(const PanelConfig& config) { return build_dataset(config, default_sources(config)); }

Dataset build_plot_dataset(const PanelConfig& c) {
    const auto sources = default_sources(c);
    std::vector<Column> cols;
    auto add = [&](SourceKind kind, std::string name) {
        auto s = load_source(find_source(sources, kind));
        std::vector<Date> d;
        std::vector<double> v;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s.dates()[i] < c.window_start || c.window_end < s.dates()[i]) continue;
            d.push_back(s.dates()[i]);
            v.push_back(s.values()[i]);
        }
        cols.push_back({Series(std::move(name), std::move(d), std::move(v), s.units()), Transform::Level, 0});
    };
    add(SourceKind::EiaOil, oil_column(c));
    add(SourceKind::WhoCovid, covid_column(c));
    add(SourceKind::CboeVix, std::string(kVixColumn));
    add(SourceKind::EpuDaily, std::string(kEpuColumn));
    return align(std::move(cols), false);
}

void export_plot_data(const Dataset& ds, const std::filesystem::path& path, const std::vector<Date>& outliers) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
    out << "date";
    for (const auto& c : ds.columns()) out << ',' << c.series.name();
    out << ",outlier\n";
    for (std::size_t r = 0; r < ds.rows(); ++r) {
        const Date d = ds.calendar()[r];
        out << d.iso();
        for (std::size_t j = 0; j < ds.cols(); ++j) {
            double v = ds.value_at(j, r);
            out << ',';
            if (std::isnan(v)) continue;
            switch (ds.column(j).transform) {
                case Transform::Level: break;
                case Transform::Log: v = std::exp(v); break;
                case Transform::Log1p: v = std::expm1(v); break;
            }
            out << csv::format_double(v);
        }
        const bool flagged = std::find(outliers.begin(), outliers.end(), d) != outliers.end();
        out << ',' << (flagged ? 1 : 0) << '\n';
    }
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

Dataset import_plot_data(const std::filesystem::path& path) {
    const auto table = csv::read(path);
    const auto date_col = table.column("date");
    std::vector<std::size_t> value_cols;
    for (std::size_t j = 0; j < table.header.size(); ++j) {
        if (j != date_col && table.header[j] != "outlier") value_cols.push_back(j);
    }
    std::vector<std::vector<Date>> dates(value_cols.size());
    std::vector<std::vector<double>> values(value_cols.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Date d = Date::parse(table.rows[r][date_col]);
        for (std::size_t j = 0; j < value_cols.size(); ++j) {
            const auto& cell = table.rows[r][value_cols[j]];
            if (cell.empty()) continue;
            bool ok = false;
            const double v = csv::parse_double(cell, ok);
            if (!ok) {
                throw Error(ErrorKind::Parse, path.string() + ":" + std::to_string(table.line_numbers[r]) +
                                                  ": non-numeric value '" + cell + "'");
            }
            dates[j].push_back(d);
            values[j].push_back(v);
        }
    }
    std::vector<Column> cols;
    for (std::size_t j = 0; j < value_cols.size(); ++j) {
        cols.push_back({Series(table.header[value_cols[j]], std::move(dates[j]), std::move(values[j])),
                        Transform::Level, 0});
    }
    // Keep every exported date, even one where all columns are empty.
    Dataset ds = align(std::move(cols), false);
    if (ds.rows() != table.rows.size()) {
        throw Error(ErrorKind::Data, "plot file '" + path.string() + "' has rows with no values");
    }
    return ds;
}

}  // namespace ardlkit::ingest
