// Acceptance checks: one PASS/FAIL line per criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ardlkit/ardl.hpp"
#include "ardlkit/ols.hpp"
#include "ardlkit/reference.hpp"
#include "ardlkit/report.hpp"
#include "ardlkit/simulate.hpp"
#include "oracles.hpp"

using namespace ardlkit;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [miss: " << what << "]";
        }
    }
};

ingest::PanelConfig snapshot_config() {
    ingest::PanelConfig c;
    c.data_dir = ARDLKIT_DATA_DIR;
    return c;
}

std::string fmt(double v, int prec = 3) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

void bounds_criterion(Outcome& o, ingest::OilBenchmark oil) {
    for (auto scope : {ingest::CovidScope::Total, ingest::CovidScope::China, ingest::CovidScope::OutsideChina}) {
        const report::ModelKey key{oil, scope};
        const auto m = report::run_model(snapshot_config(), key, report::Options{});
        const auto* pub = reference::find_model(key.id());
        o.detail << " " << key.id() << " F=" << fmt(m.bounds.f) << " (" << m.conclusion << ")";
        o.require(m.conclusion == pub->conclusion, key.id() + " expected " + pub->conclusion);
    }
}

void criterion_unit_roots(Outcome& o) {
    const auto entries =
        report::unit_root_panel(snapshot_config(), unit_root::TestKind::PhillipsPerron, unit_root::Deterministic::Constant);
    for (const auto& e : entries) {
        for (const auto& r : reference::unit_roots()) {
            if (r.variable != e.variable) continue;
            const auto expected = r.level_stars >= 2 ? unit_root::Order::I0 : unit_root::Order::I1;
            const auto& lv = e.result.level;
            const auto& dv = e.result.difference;
            o.detail << " " << e.variable << " " << fmt(lv.statistic) << lv.stars() << "/" << fmt(dv.statistic)
                     << dv.stars() << " " << unit_root::order_name(e.result.order);
            o.require(e.result.order == expected, e.variable + " order");
            o.require(static_cast<int>(lv.stars().size()) == r.level_stars, e.variable + " level stars");
            o.require(std::fabs(lv.statistic - r.level) <= reference::kUnitRootTolerance, e.variable + " level magnitude");
            o.require(std::fabs(dv.statistic - r.difference) <= reference::kUnitRootTolerance,
                      e.variable + " difference magnitude");
        }
    }
}

void criterion_long_run(Outcome& o) {
    const report::ModelKey key{ingest::OilBenchmark::Wti, ingest::CovidScope::Total};
    const auto m = report::run_model(snapshot_config(), key, report::Options{});
    const auto* pub = reference::find_model(key.id());
    if (!m.long_run || !m.ecm) {
        o.require(false, "no long-run equation");
        return;
    }
    const auto j = report::fit_json(m);
    auto cell = [&](const std::string& label, double max_p, const std::string& name) {
        for (const auto& row : j["long_run"]) {
            if (row["label"] != label) continue;
            const double coef = row["coef"], p = row["p_value"];
            o.detail << " " << name << "=" << fmt(coef) << row["stars"].get<std::string>();
            o.require(coef < 0.0, name + " negative");
            if (max_p < 1.0) o.require(p < max_p, name + " p<" + fmt(max_p, 2));
            for (const auto& c : pub->long_run) {
                if (c.label == label) o.require(reference::compare(c, coef, 0).magnitude, name + " within 50%");
            }
            return;
        }
        o.require(false, label + " missing");
    };
    cell("COVID-19_{t+1}", 0.05, "covid");
    cell("VIX_{t}", 0.01, "vix");
    cell("EPU_{t-1}", 1.0, "epu");
    const auto& e = *m.ecm;
    o.detail << " ECT=" << fmt(e.theta) << " (p " << fmt(e.p_value) << ")";
    o.require(!e.degenerate && e.theta < 0.0, "ECT negative");
    o.require(!e.degenerate && e.p_value < 0.05, "ECT p<0.05");
    o.require(!e.degenerate && reference::compare(*pub->ect, e.theta, 0).magnitude, "ECT within 50%");
}

void criterion_summary(Outcome& o) {
    for (const auto& e : report::summary_panel(snapshot_config())) {
        if (e.variable != "oil_wti") continue;
        const auto& r = reference::summary().front();
        const auto& s = e.stats;
        o.detail << " min " << fmt(s.min, 2) << " max " << fmt(s.max, 2) << " mean " << fmt(s.mean, 2) << " std "
                 << fmt(s.std);
        auto near = [](double a, double b) { return std::fabs(a - b) <= reference::kSummaryTolerance * std::fabs(b); };
        o.require(near(s.min, r.min), "min " + fmt(r.min, 2));
        o.require(near(s.max, r.max), "max " + fmt(r.max, 2));
        o.require(near(s.mean, r.mean), "mean " + fmt(r.mean, 2));
        o.require(near(s.std, r.std), "std " + fmt(r.std));
    }
}

void criterion_ols_oracle(Outcome& o) {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> z;
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng() % 8);
        const Eigen::Index T = k + 2 + static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(99 - k));
        Eigen::MatrixXd X(T, k);
        oracle::Matrix rows(static_cast<std::size_t>(T), std::vector<double>(static_cast<std::size_t>(k)));
        std::vector<std::string> names;
        for (Eigen::Index j = 0; j < k; ++j) names.push_back("x" + std::to_string(j));
        std::vector<double> scale(static_cast<std::size_t>(k));
        for (auto& s : scale) s = std::exp(2.0 * z(rng));
        Eigen::VectorXd y(T);
        std::vector<double> yv(static_cast<std::size_t>(T));
        for (Eigen::Index t = 0; t < T; ++t) {
            double acc = z(rng);
            for (Eigen::Index j = 0; j < k; ++j) {
                X(t, j) = j == 0 ? 1.0 : scale[static_cast<std::size_t>(j)] * z(rng);
                rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] = X(t, j);
                acc += (0.5 + static_cast<double>(j)) * X(t, j);
            }
            y(t) = yv[static_cast<std::size_t>(t)] = acc;
        }
        const auto fit = ols::fit(ols::DesignMatrix(X, names), y);
        const auto beta = oracle::normal_equations(rows, yv);
        double num = 0.0, den = 0.0;
        for (Eigen::Index j = 0; j < k; ++j) {
            const double b = beta[static_cast<std::size_t>(j)];
            num += (fit.coefficients(j) - b) * (fit.coefficients(j) - b);
            den += b * b;
        }
        worst = std::max(worst, std::sqrt(num / std::max(den, 1e-300)));
    }
    o.detail << " worst relative error " << worst;
    o.require(worst <= 1e-8, "relative error <= 1e-8");
}

Dataset random_walks(std::mt19937_64& rng, std::size_t T, std::size_t k) {
    std::normal_distribution<double> z;
    std::vector<Series> cols;
    std::vector<Date> dates;
    for (std::size_t t = 0; t < T; ++t) dates.push_back(Date{2000, 1, 1} + static_cast<int>(t));
    for (std::size_t j = 0; j <= k; ++j) {
        std::vector<double> v(T);
        double acc = 0.0;
        for (auto& x : v) x = acc += z(rng);
        cols.emplace_back(j == 0 ? "y" : "x" + std::to_string(j), dates, v);
    }
    return align(cols);
}

void criterion_reparameterization(Outcome& o) {
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t k = 1 + static_cast<std::size_t>(rep % 4);
        const auto ds = random_walks(rng, 40 + static_cast<std::size_t>(rep % 60), k);
        std::vector<int> b(k);
        for (auto& v : b) v = static_cast<int>(rng() % 4);
        const auto spec = ardl::make_spec(ds, 3, 1 + static_cast<int>(rng() % 3), b);
        const double a = ardl::fit_conditional_ecm(ds, spec).ols.ssr;
        const double c = ardl::fit_levels_ardl(ds, spec).ssr;
        worst = std::max(worst, std::fabs(a - c) / std::max(1.0, c));
    }
    o.detail << " worst SSR gap " << worst;
    o.require(worst <= 1e-8, "SSR gap <= 1e-8");
}

double rate(sim::DgpKind kind, sim::Statistic stat, std::size_t reps, std::size_t length = 200) {
    sim::Config c;
    c.dgp.kind = kind;
    c.dgp.length = length;
    c.statistic = stat;
    c.reps = reps;
    c.seed = 8;
    return sim::run(c).rejection_rate;
}

void criterion_monte_carlo(Outcome& o) {
    using sim::DgpKind;
    using sim::Statistic;
    auto check = [&](const std::string& name, double r, double lo, double hi) {
        o.detail << " " << name << " " << fmt(r);
        o.require(r >= lo && r <= hi, name + " in [" + fmt(lo, 2) + ", " + fmt(hi, 2) + "]");
    };
    check("pp_size", rate(DgpKind::RandomWalk, Statistic::Pp, 2000), 0.03, 0.07);
    check("pp_power", rate(DgpKind::WhiteNoise, Statistic::Pp, 1000), 0.95, 1.0);
    check("bounds_power", rate(DgpKind::CointegratedPair, Statistic::Bounds, 500), 0.95, 1.0);
    check("bg_size", rate(DgpKind::WhiteNoise, Statistic::Bg, 2000), 0.03, 0.07);
    check("arch_size", rate(DgpKind::WhiteNoise, Statistic::Arch, 2000), 0.03, 0.07);
    check("reset_size", rate(DgpKind::WhiteNoise, Statistic::Reset, 2000), 0.03, 0.07);
}

void criterion_determinism(Outcome& o) {
    const auto keys = report::all_models();
    report::Options a;
    report::Options b;
    b.workers = 1;
    const auto x = report::dump(report::replicate(snapshot_config(), a, keys).doc);
    const auto y = report::dump(report::replicate(snapshot_config(), b, keys).doc);
    o.detail << " replicate " << x.size() << " bytes";
    o.require(x == y, "replicate JSON identical");

    sim::Config c;
    c.dgp.kind = sim::DgpKind::CointegratedPair;
    c.statistic = sim::Statistic::Bounds;
    c.reps = 200;
    c.workers = 1;
    const auto r1 = sim::run(c);
    c.workers = 7;
    const auto r7 = sim::run(c);
    bool same = r1.rejects == r7.rejects && r1.stats.size() == r7.stats.size();
    for (std::size_t i = 0; same && i < r1.stats.size(); ++i) {
        same = r1.stats[i] == r7.stats[i] || (std::isnan(r1.stats[i]) && std::isnan(r7.stats[i]));
    }
    o.detail << ", simulate 1 vs 7 workers";
    o.require(same, "simulate identical across worker counts");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "WTI bounds conclusions", 5.0, [](Outcome& o) { bounds_criterion(o, ingest::OilBenchmark::Wti); }},
        {2, "BRENT bounds conclusions", 5.0, [](Outcome& o) { bounds_criterion(o, ingest::OilBenchmark::Brent); }},
        {3, "unit-root classification", 0.0, criterion_unit_roots},
        {4, "WTI total long-run signs and significance", 0.0, criterion_long_run},
        {5, "WTI summary statistics", 0.0, criterion_summary},
        {6, "OLS against normal equations", 10.0, criterion_ols_oracle},
        {7, "ECM and levels SSR identity", 0.0, criterion_reparameterization},
        {8, "Monte Carlo size and power", 120.0, criterion_monte_carlo},
        {9, "determinism", 0.0, criterion_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0) o.require(secs < c.budget_s, "runtime < " + fmt(c.budget_s, 0) + " s");
        failures += !o.pass;
        std::printf("criterion %d: %s: %s (%.2f s):%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                    o.detail.str().c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
