// ardlkit command line.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ardlkit/ardl.hpp"
#include "ardlkit/csv.hpp"
#include "ardlkit/error.hpp"
#include "ardlkit/ingest.hpp"
#include "ardlkit/report.hpp"
#include "ardlkit/simulate.hpp"
#include "ardlkit/unit_root.hpp"

using namespace ardlkit;
using report::json;

namespace {

std::string flag_for(std::string key) {
    std::replace(key.begin(), key.end(), '.', '-');
    std::replace(key.begin(), key.end(), '_', '-');
    return "--" + key;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("ARDLKIT_DATA")) return env;
    if (std::filesystem::exists("data/eia_oil.csv")) return "data";
#ifdef ARDLKIT_DATA_DIR
    return ARDLKIT_DATA_DIR;
#else
    return "data";
#endif
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
    f << text;
}

std::string panel_csv(const Dataset& d) {
    std::string out = "date";
    for (const auto& c : d.columns()) out += "," + c.series.name();
    out += "\n";
    for (std::size_t r = 0; r < d.rows(); ++r) {
        out += d.calendar()[r].iso();
        for (std::size_t c = 0; c < d.cols(); ++c) out += "," + csv::format_double(d.value_at(c, r));
        out += "\n";
    }
    return out;
}

json quantiles(std::vector<double> v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](double x) { return !std::isfinite(x); }), v.end());
    if (v.empty()) return nullptr;
    std::sort(v.begin(), v.end());
    auto q = [&](double p) {
        const double pos = p * static_cast<double>(v.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, v.size() - 1);
        return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
    };
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
    return {{"mean", mean}, {"std", sd}, {"q05", q(0.05)}, {"q50", q(0.5)}, {"q95", q(0.95)}};
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    std::string keys_help = "Config keys (file lines `key = value`, or the matching --flag):\n";
    for (const auto& [k, d] : ingest::PanelConfig::keys()) {
        keys_help += "  " + k + std::string(k.size() < 18 ? 18 - k.size() : 1, ' ') + d + "  [" + flag_for(k) + "]\n";
    }

    CLI::App app{"ARDL bounds-testing workflow for oil prices, COVID-19 cases, VIX and EPU"};
    app.footer(keys_help);
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::vector<std::string> sets;
    std::map<std::string, std::string> flag_values;
    std::string variant;
    std::string table_name = "pss2";
    double level = 0.05;
    unsigned workers = 0;
    std::string format = "json";
    std::string out;

    app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
    app.add_option("--set", sets, "override one key, key=value (repeatable)");
    for (const auto& [k, d] : ingest::PanelConfig::keys()) {
        app.add_option(flag_for(k), flag_values[k], d);
    }
    app.add_option("--variant,--model", variant, "COVID-19 series: total|china|outside_china (alias of --covid-scope)");
    app.add_option("--table", table_name, "bounds critical values: pss2|pss3|sim3");
    app.add_option("--level", level, "significance level")->check(CLI::Range(0.0, 1.0));
    app.add_option("--workers", workers, "worker threads (0: all cores)");
    app.add_option("--format", format, "json|text|csv")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--out,-o", out, "output path (directory for replicate)");

    auto* c_ingest = app.add_subcommand("ingest", "build the estimation panel");
    auto* c_summary = app.add_subcommand("summary", "summary statistics of the raw series in the window");

    auto* c_unit = app.add_subcommand("unit-root", "unit-root test on panel columns");
    std::string ur_var = "all", ur_test = "pp", ur_spec = "c";
    int ur_lags = -1;
    c_unit->add_option("--var", ur_var, "oil|covid|vix|epu|all");
    c_unit->add_option("--test", ur_test, "pp|adf");
    c_unit->add_option("--spec", ur_spec, "deterministic terms: n|c|ct");
    c_unit->add_option("--lags", ur_lags, "ADF max lag or PP bandwidth (-1: default)");

    auto* c_bounds = app.add_subcommand("bounds", "bounds F-test for one model");
    auto* c_fit = app.add_subcommand("fit", "long-run, short-run and ECM estimates for one model");
    bool bewley = false;
    c_fit->add_flag("--bewley", bewley, "also report Bewley-regression long-run standard errors");
    auto* c_diag = app.add_subcommand("diagnose", "post-estimation diagnostics for one model");
    std::string cusum_csv;
    int diag_lags = 4;
    c_diag->add_option("--cusum-csv", cusum_csv, "write the CUSUM path here");
    c_diag->add_option("--lags", diag_lags, "Breusch-Godfrey and ARCH lag count")->check(CLI::PositiveNumber);

    auto* c_plot = app.add_subcommand("export-plot", "plot-ready CSV of raw series on the union calendar");

    auto* c_rep = app.add_subcommand("replicate", "regenerate every table into a directory");
    std::string ur_test_rep = "pp";
    c_rep->add_option("--unit-root-test", ur_test_rep, "pp|adf");

    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo rejection rates");
    std::string dgp_text = "random_walk", stat_text = "pp";
    std::size_t reps = 500;
    std::uint64_t seed = 20200310;
    c_sim->add_option("--dgp", dgp_text, "name[:key=value,...]; names: white_noise random_walk ar1 cointegrated_pair "
                                         "coefficient_break ar_errors garch11 quadratic");
    c_sim->add_option("--stat", stat_text, "pp|adf|bounds|bg|arch|reset|jb|cusum");
    c_sim->add_option("--reps", reps, "replications")->check(CLI::PositiveNumber);
    c_sim->add_option("--seed", seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << one_line(e.what()) << "\n";
        return 2;
    }

    try {
        ingest::PanelConfig config;
        config.data_dir = default_data_dir();
        if (!config_path.empty()) {
            for (const auto& [k, v] : ingest::read_key_values(config_path)) config.set(k, v);
        }
        for (const auto& [k, d] : ingest::PanelConfig::keys()) {
            if (app.count(flag_for(k)) > 0) config.set(k, flag_values[k]);
        }
        if (!variant.empty()) config.set("covid_scope", variant);
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::Config, "--set expects key=value, got '" + s + "'");
            config.set(s.substr(0, eq), s.substr(eq + 1));
        }

        report::Options opt;
        opt.table = ardl::parse_cv_table(table_name);
        opt.level = level;
        opt.workers = workers;
        opt.diag_lags = diag_lags;
        opt.bewley = bewley;
        const report::ModelKey key{config.dependent, config.covid_scope};

        if (c_ingest->parsed()) {
            const auto panel = ingest::build_dataset(config);
            if (format == "csv") {
                write_text(out, panel_csv(panel));
            } else {
                json j{{"rows", panel.rows()},
                       {"first", panel.calendar().front().iso()},
                       {"last", panel.calendar().back().iso()}};
                json cols = json::array();
                for (const auto& c : panel.columns()) {
                    cols.push_back({{"name", c.series.name()},
                                    {"transform", std::string(transform_name(c.transform))},
                                    {"shift", c.shift}});
                }
                j["columns"] = cols;
                write_text(out, report::dump(j));
            }
        } else if (c_summary->parsed()) {
            const auto s = report::summary_panel(config);
            write_text(out, format == "text" ? report::render_summary(s) : report::dump(report::summary_json(s)));
        } else if (c_unit->parsed()) {
            const auto kind = unit_root::parse_test(ur_test);
            const auto det = unit_root::parse_deterministic(ur_spec);
            auto entries = ur_lags < 0 ? report::unit_root_panel(config, kind, det) : std::vector<report::UnitRootEntry>{};
            if (ur_lags >= 0) {
                const auto panel = ingest::build_dataset(config);
                const std::vector<std::string> names{"oil", "covid_total", "vix", "epu"};
                for (std::size_t i = 0; i < panel.cols(); ++i) {
                    unit_root::Classification cls;
                    const auto lv = panel.values(i);
                    std::vector<double> dv(lv.size() - 1);
                    for (std::size_t t = 1; t < lv.size(); ++t) dv[t - 1] = lv[t] - lv[t - 1];
                    cls.level = unit_root::run(kind, lv, det, ur_lags);
                    cls.difference = unit_root::run(kind, dv, det, ur_lags);
                    cls.order = cls.level.reject_5 ? unit_root::Order::I0
                                : cls.difference.reject_5 ? unit_root::Order::I1 : unit_root::Order::Higher;
                    entries.push_back({names[i], cls});
                }
            }
            if (ur_var != "all") {
                const std::string want = ur_var == "covid" ? "covid_total" : ur_var;
                std::erase_if(entries, [&](const auto& e) { return e.variable != want; });
                if (entries.empty()) throw Error(ErrorKind::Config, "unknown --var '" + ur_var + "' (oil|covid|vix|epu|all)");
            }
            // Published values refer to the total-cases panel only.
            const bool annotate = config.covid_scope == ingest::CovidScope::Total;
            write_text(out, format == "text" ? report::render_unit_roots(entries)
                                             : report::dump(report::unit_root_json(entries, annotate)));
        } else if (c_bounds->parsed()) {
            const auto m = report::run_model(config, key, opt);
            write_text(out, format == "text" ? report::render_bounds({m}) : report::dump(report::bounds_json(m)));
        } else if (c_fit->parsed()) {
            const auto m = report::run_model(config, key, opt);
            write_text(out, format == "text" ? report::render_fits({m}) : report::dump(report::fit_json(m)));
        } else if (c_diag->parsed()) {
            const auto m = report::run_model(config, key, opt);
            if (!cusum_csv.empty()) report::write_cusum_csv(m, cusum_csv);
            json j{{"model", key.id()}, {"spec", m.fit.spec.label()}};
            j.update(report::diagnostics_json(m.diagnostics));
            write_text(out, report::dump(j));
        } else if (c_plot->parsed()) {
            const auto panel = ingest::build_plot_dataset(config);
            if (out.empty() || out == "-") {
                const auto tmp = std::filesystem::temp_directory_path() / "ardlkit_plot.csv";
                ingest::export_plot_data(panel, tmp, config.plot_outliers);
                std::ifstream f(tmp, std::ios::binary);
                std::cout << f.rdbuf();
                std::filesystem::remove(tmp);
            } else {
                ingest::export_plot_data(panel, out, config.plot_outliers);
            }
        } else if (c_rep->parsed()) {
            opt.unit_root_test = unit_root::parse_test(ur_test_rep);
            std::vector<report::ModelKey> keys;
            const bool pick_dep = app.count("--dependent") > 0;
            const bool pick_scope = app.count("--covid-scope") > 0 || !variant.empty();
            for (const auto& k : report::all_models()) {
                if (pick_dep && k.dependent != config.dependent) continue;
                if (pick_scope && k.scope != config.covid_scope) continue;
                keys.push_back(k);
            }
            const auto bundle = report::replicate(config, opt, keys);
            if (out.empty()) {
                std::cout << (format == "text" ? bundle.text : report::dump(bundle.doc));
            } else {
                report::write_bundle(bundle, out);
                std::cout << bundle.text;
            }
        } else if (c_sim->parsed()) {
            sim::Config sc;
            sc.dgp = sim::parse_dgp(dgp_text);
            sc.statistic = sim::parse_statistic(stat_text);
            sc.reps = reps;
            sc.seed = seed;
            sc.workers = workers;
            sc.level = level;
            sc.table = opt.table;
            const auto r = sim::run(sc);
            const auto& g = sc.dgp;
            json j;
            j["dgp"] = {{"name", std::string(sim::dgp_name(g.kind))}, {"length", g.length}, {"rho", g.rho},
                        {"theta", g.theta}, {"speed", g.speed}, {"intercept", g.intercept}, {"sigma", g.sigma}};
            j["statistic"] = std::string(sim::statistic_name(sc.statistic));
            j["reps"] = sc.reps;
            j["seed"] = sc.seed;
            j["level"] = sc.level;
            if (sc.statistic == sim::Statistic::Bounds) j["table"] = std::string(ardl::cv_table_name(sc.table));
            j["failures"] = r.failures;
            j["rejection_rate"] = r.rejection_rate;
            j["distribution"] = quantiles(r.stats);
            write_text(out, report::dump(j));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.category() << ": " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << one_line(e.what()) << "\n";
        return 3;
    }
    return 0;
}
