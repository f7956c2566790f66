#include "ardlkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "ardlkit/csv.hpp"
#include "ardlkit/error.hpp"
#include "ardlkit/reference.hpp"

namespace ardlkit::report {

namespace {

std::string fixed(double v, int prec = 3) {
    if (!std::isfinite(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    std::string s = buf;
    // Avoid "-0.000".
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

std::string pad(std::string s, std::size_t w) {
    // Width in code points, so labels with a Greek capital line up.
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    if (n < w) s.append(w - n, ' ');
    return s;
}

std::string subscript(int k) {
    if (k == 0) return "t";
    return k > 0 ? "t+" + std::to_string(k) : "t-" + std::to_string(-k);
}

std::string display(std::string_view column) {
    if (column == "wti" || column == "brent") return "Oil";
    if (column.rfind("covid", 0) == 0) return "COVID-19";
    if (column == "vix") return "VIX";
    if (column == "epu") return "EPU";
    return std::string(column);
}

int shift_of(const Dataset& panel, std::string_view column) { return panel.column(column).shift; }

json stats_json(double coef, double se, double t, double p) {
    json j;
    j["coef"] = coef;
    j["se"] = se;
    j["t"] = t;
    j["p_value"] = p;
    j["stars"] = std::string(ols::stars(p));
    return j;
}

void annotate(json& j, const reference::Cell& c, double coef, double p) {
    const auto m = reference::compare(c, coef, ols::star_tier(p));
    json pub;
    pub["coef"] = c.negative && c.coef == 0.0 ? -0.0 : c.coef;
    pub["se"] = c.se;
    pub["stars"] = std::string(static_cast<std::size_t>(c.stars), '*');
    j["published"] = pub;
    j["match"] = {{"sign", m.sign}, {"stars", m.stars}, {"magnitude", m.magnitude}, {"all", m.all()}};
}

const reference::Cell* find_cell(const std::vector<reference::Cell>& cells, const std::string& label) {
    for (const auto& c : cells) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

bool serial_flag(const diag::Report& r) { return r.serial.reject(); }
bool arch_flag(const diag::Report& r) { return r.arch.reject(); }
bool stable_flag(const diag::Report& r) { return r.cusum.stable && !r.reset.reject(); }

struct Row {
    std::string coef;
    std::string se;
};

}  // namespace

std::string ModelKey::id() const {
    return std::string(ingest::oil_name(dependent)) + "_" + std::string(ingest::covid_scope_name(scope));
}

std::vector<ModelKey> all_models() {
    std::vector<ModelKey> v;
    for (auto d : {ingest::OilBenchmark::Wti, ingest::OilBenchmark::Brent}) {
        for (auto s : {ingest::CovidScope::Total, ingest::CovidScope::China, ingest::CovidScope::OutsideChina}) {
            v.push_back({d, s});
        }
    }
    return v;
}

std::string long_run_label(const Dataset& panel, std::string_view column) {
    if (column == "const") return "c";
    return display(column) + "_{" + subscript(shift_of(panel, column)) + "}";
}

std::string short_run_label(const Dataset& panel, std::string_view term) {
    if (term == "const") return "c";
    if (term == ardl::kEctName) return "ECT_{t-1}";
    if (term.rfind("D.", 0) != 0) return std::string(term);
    std::string_view rest = term.substr(2);
    int lag = 0;
    const auto dot = rest.rfind(".L");
    if (dot != std::string_view::npos) {
        lag = std::stoi(std::string(rest.substr(dot + 2)));
        rest = rest.substr(0, dot);
    }
    return "Δ" + display(rest) + "_{" + subscript(shift_of(panel, rest) - lag) + "}";
}

ModelResult run_model(const ingest::PanelConfig& base, const ModelKey& key, const Options& o) {
    auto config = base;
    config.dependent = key.dependent;
    config.covid_scope = key.scope;
    auto panel = ingest::build_dataset(config);
    auto selection = ardl::select_lags(panel, config.max_lag, o.workers);
    auto fit = ardl::fit_conditional_ecm(panel, selection.spec);
    const auto bounds = ardl::bounds_f_test(fit, o.level, o.table);
    auto conclusion = ardl::graded_conclusion(bounds.f, o.table, bounds.k, bounds.nobs);
    auto diagnostics = diag::run_all(fit.design, fit.response, fit.ols, o.diag_lags);
    ModelResult m{key,    config,     std::move(panel), std::move(selection), std::move(fit), bounds,
                  std::move(conclusion), std::nullopt, std::nullopt, std::nullopt, std::move(diagnostics), {}};
    try {
        m.long_run = ardl::long_run(m.fit, o.t_floor);
        for (const auto& w : m.long_run->warnings) m.warnings.push_back(w);
        if (o.bewley) m.bewley = ardl::long_run_bewley(m.panel, m.fit, o.t_floor);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Normalization) throw;
        m.warnings.push_back(e.what());
    }
    if (m.long_run) {
        m.ecm = ardl::fit_ecm(m.panel, m.fit, *m.long_run);
        for (const auto& w : m.ecm->warnings) m.warnings.push_back(w);
        if (m.bounds.conclusion != ardl::Conclusion::Cointegration) {
            m.warnings.push_back("error-correction model estimated although the bounds test at " + fixed(o.level, 2) +
                                 " does not establish a level relationship");
        }
    }
    return m;
}

json bounds_json(const ModelResult& m) {
    const auto& b = m.bounds;
    json j;
    j["model"] = m.key.id();
    j["f"] = b.f;
    j["df_num"] = b.df_num;
    j["df_den"] = b.df_den;
    j["k"] = b.k;
    j["nobs"] = b.nobs;
    j["table"] = std::string(ardl::cv_table_name(b.table));
    j["level"] = b.level;
    j["lower"] = b.bounds.lower;
    j["upper"] = b.bounds.upper;
    j["conclusion"] = std::string(ardl::conclusion_name(b.conclusion));
    j["graded_conclusion"] = m.conclusion;
    json crit = json::array();
    for (double level : ardl::cv_levels()) {
        const auto cb = ardl::critical_bounds(b.table, b.k, level, b.nobs);
        crit.push_back({{"level", level}, {"lower", cb.lower}, {"upper", cb.upper}});
    }
    j["critical_values"] = crit;
    if (const auto* pub = reference::find_model(m.key.id())) {
        j["published"] = {{"f", pub->f}, {"conclusion", pub->conclusion}};
        j["match"] = {{"conclusion", pub->conclusion == m.conclusion},
                      {"f", std::fabs(b.f - pub->f) <= reference::kFTolerance * pub->f}};
    }
    return j;
}

json diagnostics_json(const diag::Report& r) {
    json j;
    auto lm = [](const diag::LmTest& t) {
        json x{{"stat", t.stat}, {"p_value", t.p_value}, {"df", t.df}, {"reject", t.reject()}, {"degenerate", t.degenerate}};
        if (!t.note.empty()) x["note"] = t.note;
        return x;
    };
    j["serial_correlation"] = lm(r.serial);
    j["serial_correlation"]["verdict"] = diag::serial_verdict(r.serial);
    j["arch"] = lm(r.arch);
    j["arch"]["verdict"] = diag::arch_verdict(r.arch);
    j["normality"] = {{"stat", r.normality.stat},
                      {"p_value", r.normality.p_value},
                      {"skewness", r.normality.skewness},
                      {"kurtosis", r.normality.kurtosis},
                      {"degenerate", r.normality.degenerate}};
    j["reset"] = {{"f", r.reset.f},
                  {"p_value", r.reset.p_value},
                  {"powers", r.reset.powers},
                  {"dropped_cube", r.reset.dropped_cube},
                  {"degenerate", r.reset.degenerate}};
    j["cusum"] = {{"stable", r.cusum.stable},
                  {"points", r.cusum.path.size()},
                  {"truncated", r.cusum.truncated},
                  {"degenerate", r.cusum.degenerate},
                  {"path", r.cusum.path},
                  {"bound", r.cusum.bound}};
    return j;
}

json fit_json(const ModelResult& m) {
    const auto* pub = reference::find_model(m.key.id());
    const auto& spec = m.fit.spec;
    json j;
    j["model"] = m.key.id();
    json lags;
    lags[spec.dependent] = spec.dep_lags;
    for (std::size_t i = 0; i < spec.k(); ++i) lags[spec.regressors[i]] = spec.reg_lags[i];
    j["spec"] = {{"label", spec.label()}, {"max_lag", spec.max_lag}, {"difference_lags", lags}};
    j["sample"] = {{"first", m.fit.sample.front().iso()}, {"last", m.fit.sample.back().iso()}, {"nobs", m.fit.ols.nobs}};
    j["selection"] = {{"aic", m.selection.aic}, {"evaluated", m.selection.evaluated}, {"skipped", m.selection.skipped}};
    j["fit"] = {{"r_squared", m.fit.ols.r_squared}, {"sigma2", m.fit.ols.sigma2}, {"ssr", m.fit.ols.ssr}, {"aic", m.fit.ols.aic}};
    j["bounds"] = bounds_json(m);

    json lr = json::array();
    std::vector<std::string> seen;
    if (m.long_run) {
        for (const auto& t : m.long_run->terms) {
            json row;
            row["term"] = t.name;
            row["label"] = long_run_label(m.panel, t.name);
            row.update(stats_json(t.coef, t.se, t.t, t.p_value));
            if (m.bewley) row["bewley_se"] = m.bewley->term(t.name).se;
            const auto* c = pub ? find_cell(pub->long_run, row["label"].get<std::string>()) : nullptr;
            if (c) annotate(row, *c, t.coef, t.p_value);
            seen.push_back(row["label"]);
            lr.push_back(row);
        }
    }
    j["long_run"] = lr;
    j["normalization"] = {{"delta_dependent", m.long_run ? m.long_run->delta_dep : 0.0},
                          {"t", m.long_run ? m.long_run->delta_dep_t : 0.0},
                          {"weak", m.long_run ? m.long_run->weak_normalization : true}};

    json sr = json::array();
    if (m.ecm) {
        const auto& o = m.ecm->ols;
        for (Eigen::Index i = 0; i < o.coefficients.size(); ++i) {
            const auto& name = o.names[static_cast<std::size_t>(i)];
            if (name == "const" || name == ardl::kEctName) continue;
            const auto s = ols::t_stat(o.coefficients(i), o.std_errors(i), o.df_resid(), name);
            json row;
            row["term"] = name;
            row["label"] = short_run_label(m.panel, name);
            row.update(stats_json(s.coef, s.se, s.t, s.p_value));
            const auto* c = pub ? find_cell(pub->short_run, row["label"].get<std::string>()) : nullptr;
            if (c) annotate(row, *c, s.coef, s.p_value);
            seen.push_back(row["label"]);
            sr.push_back(row);
        }
        json ect;
        ect["label"] = "ECT_{t-1}";
        if (m.ecm->degenerate) {
            ect["degenerate"] = true;
        } else {
            ect.update(stats_json(m.ecm->theta, m.ecm->se, m.ecm->t, m.ecm->p_value));
            ect["valid"] = m.ecm->valid;
            if (pub && pub->ect) annotate(ect, *pub->ect, m.ecm->theta, m.ecm->p_value);
        }
        j["ect"] = ect;
    } else {
        j["ect"] = nullptr;
    }
    j["short_run"] = sr;
    if (pub) {
        json missing = json::array();
        auto check = [&](const std::vector<reference::Cell>& cells) {
            for (const auto& c : cells) {
                if (std::find(seen.begin(), seen.end(), c.label) == seen.end()) missing.push_back(c.label);
            }
        };
        check(pub->long_run);
        check(pub->short_run);
        j["published_terms_not_estimated"] = missing;
    }
    j["diagnostics"] = diagnostics_json(m.diagnostics);
    json tests = {{"serial_correlation", serial_flag(m.diagnostics)},
                  {"arch_effects", arch_flag(m.diagnostics)},
                  {"stable", stable_flag(m.diagnostics)}};
    if (pub) {
        tests["published"] = {{"serial_correlation", pub->serial_correlation},
                              {"arch_effects", pub->arch_effects},
                              {"stable", pub->stable}};
        tests["match"] = serial_flag(m.diagnostics) == pub->serial_correlation &&
                         arch_flag(m.diagnostics) == pub->arch_effects && stable_flag(m.diagnostics) == pub->stable;
    }
    j["tests"] = tests;
    j["warnings"] = m.warnings;
    return j;
}

std::string render_bounds(const std::vector<ModelResult>& models) {
    std::string out = "Bounds test (" + std::string(models.empty() ? "pss2" : ardl::cv_table_name(models[0].bounds.table)) +
                      " critical values at " + fixed(models.empty() ? 0.05 : models[0].bounds.level, 2) + ")\n";
    out += pad("Model", 22) + pad("ARDL", 14) + pad("F", 10) + pad("I(0)", 8) + pad("I(1)", 8) + pad("Conclusion", 36) +
           "Published\n";
    for (const auto& m : models) {
        std::string published;
        if (const auto* p = reference::find_model(m.key.id())) {
            published = fixed(p->f, 3) + " " + p->conclusion + (p->conclusion == m.conclusion ? "" : "  (differs)");
        }
        out += pad(m.key.id(), 22) + pad(m.fit.spec.label(), 14) + pad(fixed(m.bounds.f), 10) +
               pad(fixed(m.bounds.bounds.lower, 2), 8) + pad(fixed(m.bounds.bounds.upper, 2), 8) +
               pad(m.conclusion, 36) + published + "\n";
    }
    return out;
}

std::string render_fits(const std::vector<ModelResult>& models) {
    using Cells = std::map<std::string, Row>;
    std::vector<std::string> lr_rows, sr_rows;
    std::vector<Cells> cols(models.size());
    auto add_row = [](std::vector<std::string>& rows, const std::string& label) {
        if (std::find(rows.begin(), rows.end(), label) == rows.end()) rows.push_back(label);
    };
    auto cell = [](double coef, double se, double p) { return Row{fixed(coef) + std::string(ols::stars(p)), "[" + fixed(se) + "]"}; };

    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto& m = models[i];
        if (m.long_run) {
            for (const auto& t : m.long_run->terms) {
                const auto label = long_run_label(m.panel, t.name);
                add_row(lr_rows, label);
                cols[i][label] = cell(t.coef, t.se, t.p_value);
            }
        }
        if (m.ecm) {
            const auto& o = m.ecm->ols;
            for (Eigen::Index k = 0; k < o.coefficients.size(); ++k) {
                const auto& name = o.names[static_cast<std::size_t>(k)];
                if (name == "const" || name == ardl::kEctName) continue;
                const auto label = short_run_label(m.panel, name);
                add_row(sr_rows, label);
                const auto s = ols::t_stat(o.coefficients(k), o.std_errors(k), o.df_resid());
                cols[i][label] = cell(s.coef, s.se, s.p_value);
            }
            if (!m.ecm->degenerate) cols[i]["ECT_{t-1}"] = cell(m.ecm->theta, m.ecm->se, m.ecm->p_value);
        }
    }
    // Short-run rows: Oil, then COVID, VIX, EPU, each by time index.
    auto rank = [](const std::string& l) {
        int group = l.find("Oil") != std::string::npos ? 0 : l.find("COVID") != std::string::npos ? 1
                    : l.find("VIX") != std::string::npos ? 2 : 3;
        const auto open = l.find("_{t");
        int k = 0;
        if (open != std::string::npos && l[open + 3] != '}') k = std::stoi(l.substr(open + 3));
        return std::make_pair(group, -k);
    };
    std::stable_sort(sr_rows.begin(), sr_rows.end(), [&](const auto& a, const auto& b) { return rank(a) < rank(b); });

    const std::size_t lw = 20, cw = 14;
    std::string out;
    out += pad("", lw);
    for (const auto& m : models) out += pad(m.key.id() + " " + m.fit.spec.label(), 2 * cw);
    out += "\n";
    auto block = [&](const std::string& title, const std::vector<std::string>& rows) {
        out += title + "\n";
        for (const auto& r : rows) {
            out += pad(r, lw);
            for (const auto& c : cols) {
                const auto it = c.find(r);
                out += it == c.end() ? pad("", 2 * cw) : pad(it->second.coef, cw) + pad(it->second.se, cw);
            }
            out += "\n";
        }
    };
    block("Long-run equation", lr_rows);
    block("Short-run equation", sr_rows);
    block("", {"ECT_{t-1}"});
    out += "Tests\n";
    auto yes_no = [](bool b) { return std::string(b ? "YES" : "NO"); };
    auto test_row = [&](const std::string& name, auto f) {
        out += pad(name, lw);
        for (const auto& m : models) out += pad(f(m), 2 * cw);
        out += "\n";
    };
    test_row("Serial correlation", [&](const ModelResult& m) { return yes_no(serial_flag(m.diagnostics)); });
    test_row("ARCH effects", [&](const ModelResult& m) { return yes_no(arch_flag(m.diagnostics)); });
    test_row("Stability", [&](const ModelResult& m) { return yes_no(stable_flag(m.diagnostics)); });
    test_row("Normality (JB p)", [&](const ModelResult& m) { return fixed(m.diagnostics.normality.p_value); });
    out += "*** p<0.01, ** p<0.05, * p<0.10; standard errors in brackets.\n";
    return out;
}

std::vector<SummaryEntry> summary_panel(const ingest::PanelConfig& config) {
    std::vector<SummaryEntry> out;
    auto add = [&](std::string name, const Series& s) {
        std::vector<double> v;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto d = s.dates()[i];
            if (!(d < config.window_start) && !(config.window_end < d)) v.push_back(s.values()[i]);
        }
        out.push_back({name, summarize(name, v)});
    };
    for (auto oil : {ingest::OilBenchmark::Wti, ingest::OilBenchmark::Brent}) {
        auto c = config;
        c.dependent = oil;
        for (const auto& src : ingest::default_sources(c)) {
            if (src.kind == ingest::SourceKind::EiaOil) add("oil_" + std::string(ingest::oil_name(oil)), ingest::load_source(src));
        }
    }
    for (auto scope : {ingest::CovidScope::Total, ingest::CovidScope::China, ingest::CovidScope::OutsideChina}) {
        auto c = config;
        c.covid_scope = scope;
        for (const auto& src : ingest::default_sources(c)) {
            if (src.kind == ingest::SourceKind::WhoCovid) add("covid_" + std::string(ingest::covid_scope_name(scope)), ingest::load_source(src));
        }
    }
    for (const auto& src : ingest::default_sources(config)) {
        if (src.kind == ingest::SourceKind::CboeVix) add("vix", ingest::load_source(src));
        if (src.kind == ingest::SourceKind::EpuDaily) add("epu", ingest::load_source(src));
    }
    return out;
}

json summary_json(const std::vector<SummaryEntry>& s) {
    json arr = json::array();
    for (const auto& e : s) {
        json j{{"variable", e.variable}, {"n", e.stats.n}, {"min", e.stats.min},
               {"max", e.stats.max},    {"mean", e.stats.mean}, {"std", e.stats.std}};
        for (const auto& r : reference::summary()) {
            if (r.variable != e.variable) continue;
            auto near = [](double a, double b) { return std::fabs(a - b) <= reference::kSummaryTolerance * std::fabs(b); };
            j["published"] = {{"min", r.min}, {"max", r.max}, {"mean", r.mean}, {"std", r.std}};
            j["match"] = {{"min", near(e.stats.min, r.min)},
                          {"max", near(e.stats.max, r.max)},
                          {"mean", near(e.stats.mean, r.mean)},
                          {"std", near(e.stats.std, r.std)}};
        }
        arr.push_back(j);
    }
    return arr;
}

std::string render_summary(const std::vector<SummaryEntry>& s) {
    std::string out = "Summary statistics (levels, window, own calendars)\n";
    out += pad("", 22) + pad("N", 6) + pad("MIN", 12) + pad("MAX", 12) + pad("MEAN", 12) + "ST. DEV.\n";
    for (const auto& e : s) {
        out += pad(e.variable, 22) + pad(std::to_string(e.stats.n), 6) + pad(fixed(e.stats.min, 2), 12) +
               pad(fixed(e.stats.max, 2), 12) + pad(fixed(e.stats.mean, 2), 12) + fixed(e.stats.std, 3) + "\n";
    }
    return out;
}

std::vector<UnitRootEntry> unit_root_panel(const ingest::PanelConfig& config, unit_root::TestKind kind,
                                           unit_root::Deterministic d) {
    auto c = config;
    c.dependent = ingest::OilBenchmark::Wti;
    c.covid_scope = ingest::CovidScope::Total;
    const auto panel = ingest::build_dataset(c);
    const std::vector<std::string> names{"oil", "covid_total", "vix", "epu"};
    std::vector<UnitRootEntry> out;
    for (std::size_t i = 0; i < panel.cols(); ++i) out.push_back({names[i], unit_root::classify(panel.values(i), kind, d)});
    return out;
}

json unit_root_json(const std::vector<UnitRootEntry>& entries, bool annotate_published) {
    json arr = json::array();
    auto res = [](const unit_root::UnitRootResult& r) {
        return json{{"statistic", r.statistic},
                    {"stars", std::string(r.stars())},
                    {"critical", {{"1%", r.critical.one}, {"5%", r.critical.five}, {"10%", r.critical.ten}}},
                    {"lags", r.lags},
                    {"nobs", r.nobs}};
    };
    for (const auto& e : entries) {
        json j;
        j["variable"] = e.variable;
        j["test"] = std::string(unit_root::test_name(e.result.level.test));
        j["deterministic"] = std::string(unit_root::deterministic_name(e.result.level.deterministic));
        j["level"] = res(e.result.level);
        j["difference"] = res(e.result.difference);
        j["order"] = std::string(unit_root::order_name(e.result.order));
        if (annotate_published) {
            for (const auto& r : reference::unit_roots()) {
                if (r.variable != e.variable) continue;
                const auto expected = r.level_stars >= 2 ? unit_root::Order::I0 : unit_root::Order::I1;
                const int ls = static_cast<int>(e.result.level.stars().size());
                const int ds = static_cast<int>(e.result.difference.stars().size());
                j["published"] = {{"level", r.level},
                                  {"level_stars", std::string(static_cast<std::size_t>(r.level_stars), '*')},
                                  {"difference", r.difference},
                                  {"difference_stars", std::string(static_cast<std::size_t>(r.difference_stars), '*')},
                                  {"order", std::string(unit_root::order_name(expected))}};
                j["match"] = {
                    {"order", e.result.order == expected},
                    {"level_stars", ls == r.level_stars},
                    {"difference_stars", ds == r.difference_stars},
                    {"level_magnitude", std::fabs(e.result.level.statistic - r.level) <= reference::kUnitRootTolerance},
                    {"difference_magnitude",
                     std::fabs(e.result.difference.statistic - r.difference) <= reference::kUnitRootTolerance}};
            }
        }
        arr.push_back(j);
    }
    return arr;
}

std::string render_unit_roots(const std::vector<UnitRootEntry>& entries) {
    if (entries.empty()) return {};
    const auto& first = entries.front().result.level;
    std::string out = "Unit root test (" + std::string(unit_root::test_name(first.test)) + ", deterministic " +
                      std::string(unit_root::deterministic_name(first.deterministic)) + ")\n";
    out += pad("", 18);
    for (const auto& e : entries) out += pad(e.variable, 14);
    out += "\n" + pad("Level", 18);
    for (const auto& e : entries) out += pad(fixed(e.result.level.statistic) + std::string(e.result.level.stars()), 14);
    out += "\n" + pad("First difference", 18);
    for (const auto& e : entries) {
        out += pad(fixed(e.result.difference.statistic) + std::string(e.result.difference.stars()), 14);
    }
    out += "\n" + pad("Order", 18);
    for (const auto& e : entries) out += pad(std::string(unit_root::order_name(e.result.order)), 14);
    return out + "\n";
}

void write_cusum_csv(const ModelResult& m, const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
    f << "date,step,cusum,lower,upper\n";
    const auto& c = m.diagnostics.cusum;
    for (std::size_t i = 0; i < c.path.size(); ++i) {
        f << m.fit.sample[c.index[i]].iso() << ',' << i + 1 << ',' << csv::format_double(c.path[i]) << ','
          << csv::format_double(-c.bound[i]) << ',' << csv::format_double(c.bound[i]) << '\n';
    }
}

Bundle replicate(const ingest::PanelConfig& config, const Options& o, const std::vector<ModelKey>& keys) {
    Bundle b;
    json& d = b.doc;
    d["generator"] = "ardlkit replicate";
    json cfg;
    for (const auto& [k, v] : config.to_map()) cfg[k] = v;
    d["config"] = cfg;
    d["options"] = {{"critical_values", std::string(ardl::cv_table_name(o.table))},
                    {"level", o.level},
                    {"normalization_floor", o.t_floor},
                    {"diagnostic_lags", o.diag_lags},
                    {"unit_root_test", std::string(unit_root::test_name(o.unit_root_test))}};

    const auto summary = summary_panel(config);
    d["summary"] = summary_json(summary);
    b.text += render_summary(summary) + "\n";

    json ur;
    for (auto det : {unit_root::Deterministic::Constant, unit_root::Deterministic::ConstantTrend}) {
        const auto entries = unit_root_panel(config, o.unit_root_test, det);
        ur[std::string(unit_root::deterministic_name(det))] = unit_root_json(entries, true);
        b.text += render_unit_roots(entries) + "\n";
    }
    d["unit_root"] = ur;

    for (const auto& k : keys) b.models.push_back(run_model(config, k, o));
    json bounds = json::array(), fits = json::array();
    for (const auto& m : b.models) {
        bounds.push_back(bounds_json(m));
        fits.push_back(fit_json(m));
    }
    d["bounds"] = bounds;
    d["models"] = fits;
    b.text += render_bounds(b.models) + "\n";
    for (auto oil : {ingest::OilBenchmark::Wti, ingest::OilBenchmark::Brent}) {
        std::vector<ModelResult> group;
        for (const auto& m : b.models) {
            if (m.key.dependent == oil) group.push_back(m);
        }
        if (group.empty()) continue;
        b.text += "ARDL estimates (" + std::string(ingest::oil_name(oil)) + ")\n" + render_fits(group) + "\n";
    }

    // The same models with every series in levels, since the transform is not pinned down.
    auto levels = config;
    levels.oil_transform = levels.covid_transform = levels.vix_transform = levels.epu_transform = Transform::Level;
    json alt = json::array();
    for (const auto& k : keys) {
        json row{{"model", k.id()}};
        try {
            auto m = run_model(levels, k, o);
            row["spec"] = m.fit.spec.label();
            row["f"] = m.bounds.f;
            row["graded_conclusion"] = m.conclusion;
        } catch (const Error& e) {
            row["error"] = std::string(e.category()) + ": " + e.what();
        }
        alt.push_back(row);
    }
    d["level_transform_bounds"] = alt;

    std::size_t matched = 0;
    for (const auto& row : bounds) matched += row.contains("match") && row["match"]["conclusion"].get<bool>();
    d["bounds_conclusions_matched"] = matched;
    d["bounds_conclusions_total"] = bounds.size();
    return b;
}

void write_bundle(const Bundle& b, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& content) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw Error(ErrorKind::Io, "cannot write " + (dir / name).string());
        f << content;
    };
    write("replicate.json", dump(b.doc));
    write("replicate.txt", b.text);
    for (const auto& m : b.models) write_cusum_csv(m, dir / ("cusum_" + m.key.id() + ".csv"));
}

std::string dump(const json& j) { return j.dump(2, ' ', false, json::error_handler_t::strict) + "\n"; }

}  // namespace ardlkit::report
