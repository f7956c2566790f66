#include "ardlkit/ardl.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <tuple>

#include "ardlkit/distributions.hpp"
#include "ardlkit/error.hpp"

namespace ardlkit::ardl {

namespace {

constexpr const char* kConst = "const";

struct Panel {
    std::vector<std::span<const double>> cols;  // dependent first, then regressors
    std::size_t rows = 0;
};

Panel panel_for(const Dataset& ds, const ArdlSpec& spec) {
    ds.require_complete();
    Panel p;
    p.rows = ds.rows();
    p.cols.push_back(ds.values(ds.index_of(spec.dependent)));
    for (const auto& r : spec.regressors) p.cols.push_back(ds.values(ds.index_of(r)));
    return p;
}

std::size_t sample_start(const ArdlSpec& spec) { return static_cast<std::size_t>(spec.max_lag) + 1; }

std::size_t sample_size(const Panel& p, const ArdlSpec& spec) {
    const auto start = sample_start(spec);
    return p.rows > start ? p.rows - start : 0;
}

double d(std::span<const double> v, std::size_t t, int lag) {
    const auto i = t - static_cast<std::size_t>(lag);
    return v[i] - v[i - 1];
}

void check_dof(const Panel& p, const ArdlSpec& spec) {
    const auto n = sample_size(p, spec);
    if (n <= spec.nparams()) {
        throw Error(ErrorKind::DegreesOfFreedom, spec.label() + " has " + std::to_string(spec.nparams()) +
                                                     " parameters but only " + std::to_string(n) +
                                                     " observations after max_lag " + std::to_string(spec.max_lag));
    }
}

// Conditional-ECM design and response.
std::pair<ols::DesignMatrix, Eigen::VectorXd> ecm_design(const Panel& p, const ArdlSpec& spec) {
    const auto start = sample_start(spec);
    const auto n = sample_size(p, spec);
    const auto k = spec.k();
    std::vector<std::string> names{kConst, level_name(spec.dependent)};
    for (const auto& r : spec.regressors) names.push_back(level_name(r));
    for (int i = 1; i <= spec.dep_lags; ++i) names.push_back(diff_name(spec.dependent, i));
    for (std::size_t j = 0; j < k; ++j) {
        for (int l = 0; l <= spec.reg_lags[j]; ++l) names.push_back(diff_name(spec.regressors[j], l));
    }
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(names.size()));
    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const auto t = start + r;
        const auto row = static_cast<Eigen::Index>(r);
        Eigen::Index c = 0;
        X(row, c++) = 1.0;
        for (std::size_t v = 0; v <= k; ++v) X(row, c++) = p.cols[v][t - 1];
        for (int i = 1; i <= spec.dep_lags; ++i) X(row, c++) = d(p.cols[0], t, i);
        for (std::size_t j = 0; j < k; ++j) {
            for (int l = 0; l <= spec.reg_lags[j]; ++l) X(row, c++) = d(p.cols[j + 1], t, l);
        }
        y(row) = d(p.cols[0], t, 0);
    }
    return {ols::DesignMatrix(std::move(X), std::move(names)), std::move(y)};
}

}  // namespace

std::size_t ArdlSpec::nparams() const {
    std::size_t n = 2 + regressors.size() + static_cast<std::size_t>(dep_lags);
    for (int b : reg_lags) n += static_cast<std::size_t>(b) + 1;
    return n;
}

std::string ArdlSpec::label() const {
    std::string s = "ARDL(" + std::to_string(dep_lags + 1);
    for (int b : reg_lags) s += "," + std::to_string(b + 1);
    return s + ")";
}

void ArdlSpec::validate() const {
    if (max_lag < 0) throw Error(ErrorKind::Spec, "max_lag must be non-negative");
    if (reg_lags.size() != regressors.size()) {
        throw Error(ErrorKind::Spec, std::to_string(regressors.size()) + " regressors but " +
                                         std::to_string(reg_lags.size()) + " lag orders");
    }
    const int lo = max_lag > 0 ? 1 : 0;
    if (dep_lags < lo || dep_lags > max_lag) {
        throw Error(ErrorKind::Spec, "dependent lag " + std::to_string(dep_lags) + " outside " + std::to_string(lo) +
                                         ".." + std::to_string(max_lag));
    }
    for (std::size_t j = 0; j < reg_lags.size(); ++j) {
        if (reg_lags[j] < 0 || reg_lags[j] > max_lag) {
            throw Error(ErrorKind::Spec, "lag " + std::to_string(reg_lags[j]) + " for " + regressors[j] +
                                             " outside 0.." + std::to_string(max_lag));
        }
    }
}

ArdlSpec make_spec(const Dataset& dataset, int max_lag, int dep_lags, std::vector<int> reg_lags) {
    ArdlSpec s;
    s.dependent = dataset.column(dataset.dependent()).series.name();
    for (auto i : dataset.regressors()) s.regressors.push_back(dataset.column(i).series.name());
    s.max_lag = max_lag;
    s.dep_lags = dep_lags;
    s.reg_lags = reg_lags.empty() ? std::vector<int>(s.regressors.size(), 0) : std::move(reg_lags);
    s.validate();
    return s;
}

std::string level_name(std::string_view column) { return "L1." + std::string(column); }

std::string diff_name(std::string_view column, int lag) {
    std::string s = "D." + std::string(column);
    if (lag > 0) s += ".L" + std::to_string(lag);
    return s;
}

ArdlFit fit_conditional_ecm(const Dataset& dataset, const ArdlSpec& spec) {
    spec.validate();
    const auto p = panel_for(dataset, spec);
    check_dof(p, spec);
    auto [X, y] = ecm_design(p, spec);

    ArdlFit f;
    f.spec = spec;
    f.ols = ols::fit(X, y);
    f.design = std::move(X);
    f.response = std::move(y);
    f.first_row = sample_start(spec);
    const auto cal = dataset.calendar();
    f.sample.assign(cal.begin() + static_cast<std::ptrdiff_t>(f.first_row), cal.end());
    f.intercept = kConst;
    f.levels.push_back(level_name(spec.dependent));
    for (const auto& r : spec.regressors) f.levels.push_back(level_name(r));
    for (const auto& n : f.design.names()) {
        if (n.rfind("D.", 0) == 0) f.short_run.push_back(n);
    }
    return f;
}

ols::OlsFit fit_levels_ardl(const Dataset& dataset, const ArdlSpec& spec) {
    spec.validate();
    const auto p = panel_for(dataset, spec);
    check_dof(p, spec);
    const auto start = sample_start(spec);
    const auto n = sample_size(p, spec);
    const auto k = spec.k();

    std::vector<std::string> names{kConst};
    for (int i = 1; i <= spec.dep_lags + 1; ++i) names.push_back(spec.dependent + ".L" + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) {
        for (int l = 0; l <= spec.reg_lags[j] + 1; ++l) {
            names.push_back(l ? spec.regressors[j] + ".L" + std::to_string(l) : spec.regressors[j]);
        }
    }
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(names.size()));
    Eigen::VectorXd y(static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const auto t = start + r;
        const auto row = static_cast<Eigen::Index>(r);
        Eigen::Index c = 0;
        X(row, c++) = 1.0;
        for (int i = 1; i <= spec.dep_lags + 1; ++i) X(row, c++) = p.cols[0][t - static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < k; ++j) {
            for (int l = 0; l <= spec.reg_lags[j] + 1; ++l) X(row, c++) = p.cols[j + 1][t - static_cast<std::size_t>(l)];
        }
        y(row) = p.cols[0][t];
    }
    return ols::fit(ols::DesignMatrix(std::move(X), std::move(names)), y);
}

Selection select_lags(const Dataset& dataset, int max_lag, unsigned workers) {
    if (max_lag < 0) throw Error(ErrorKind::Spec, "max_lag must be non-negative");
    const auto base = make_spec(dataset, max_lag, max_lag > 0 ? 1 : 0);
    const auto k = base.k();
    const auto need = (k + 1) * static_cast<std::size_t>(max_lag + 1) + 5;
    if (dataset.rows() <= need) {
        throw Error(ErrorKind::DegreesOfFreedom, "lag search over max_lag " + std::to_string(max_lag) + " with " +
                                                     std::to_string(k) + " regressors needs more than " +
                                                     std::to_string(need) + " rows, panel has " +
                                                     std::to_string(dataset.rows()));
    }
    const auto p = panel_for(dataset, base);

    std::vector<ArdlSpec> specs;
    const int a_lo = max_lag > 0 ? 1 : 0;
    std::vector<int> b(k, 0);
    for (int a = a_lo; a <= max_lag; ++a) {
        std::fill(b.begin(), b.end(), 0);
        while (true) {
            ArdlSpec s = base;
            s.dep_lags = a;
            s.reg_lags = b;
            specs.push_back(std::move(s));
            std::size_t j = k;
            while (j > 0 && b[j - 1] == max_lag) b[--j] = 0;
            if (j == 0) break;
            ++b[j - 1];
        }
    }

    std::vector<std::optional<double>> aic(specs.size());
    auto evaluate = [&](std::size_t i) {
        const auto& s = specs[i];
        if (sample_size(p, s) <= s.nparams()) return;
        try {
            auto [X, y] = ecm_design(p, s);
            aic[i] = ols::fit(X, y).aic;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularDesign && e.kind() != ErrorKind::DegreesOfFreedom) throw;
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, specs.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex m;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t i; (i = next++) < specs.size();) evaluate(i);
                } catch (...) {
                    std::lock_guard lock(m);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    Selection sel;
    std::optional<std::size_t> best;
    auto key = [&](std::size_t i) { return std::make_tuple(*aic[i], specs[i].nparams()); };
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!aic[i]) {
            ++sel.skipped;
            continue;
        }
        ++sel.evaluated;
        // Candidates are enumerated in lexicographic lag order, so a strict
        // comparison keeps the lexicographically smallest among exact ties.
        if (!best || key(i) < key(*best)) best = i;
    }
    if (!best) throw Error(ErrorKind::SingularDesign, "no lag candidate could be estimated");
    sel.spec = specs[*best];
    sel.aic = *aic[*best];
    return sel;
}

std::string_view conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::Cointegration: return "cointegration";
        case Conclusion::NoCointegration: return "no cointegration";
        case Conclusion::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Conclusion classify_bounds(double f, CriticalBounds bounds) {
    if (f > bounds.upper) return Conclusion::Cointegration;
    if (f < bounds.lower) return Conclusion::NoCointegration;
    return Conclusion::Inconclusive;
}

BoundsResult bounds_f_test(const ArdlFit& fit, double level, CvTable table) {
    for (const auto& name : fit.levels) {
        const auto& names = fit.design.names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw Error(ErrorKind::Spec, "bounds test needs level term " + name);
        }
    }
    if (fit.levels.size() < 2) throw Error(ErrorKind::Spec, "bounds test needs at least one level regressor");
    const auto restricted = ols::fit(fit.design.without_columns(fit.levels), fit.response);
    const auto w = ols::wald_f(fit.ols, restricted, static_cast<int>(fit.levels.size()));

    BoundsResult r;
    r.f = w.f;
    r.df_num = w.df_num;
    r.df_den = w.df_den;
    r.k = static_cast<int>(fit.levels.size()) - 1;
    r.nobs = static_cast<std::size_t>(fit.ols.nobs);
    r.level = level;
    r.table = table;
    r.bounds = critical_bounds(table, r.k, level, r.nobs);
    r.conclusion = classify_bounds(r.f, r.bounds);
    return r;
}

std::string graded_conclusion(double f, CvTable table, int k, std::size_t nobs) {
    const auto at5 = critical_bounds(table, k, 0.05, nobs);
    if (f > at5.upper) return "cointegration";
    if (f > critical_bounds(table, k, 0.10, nobs).upper) return "cointegration at 10% significance";
    if (f < at5.lower) return "no cointegration";
    return "inconclusive";
}

const LongRunTerm& LongRunEquation::term(std::string_view name) const {
    for (const auto& t : terms) {
        if (t.name == name) return t;
    }
    throw Error(ErrorKind::Spec, "no long-run term " + std::string(name));
}

namespace {

void check_normalization(LongRunEquation& lr, double t_floor) {
    if (lr.delta_dep == 0.0) {
        throw Error(ErrorKind::Normalization, "coefficient on the lagged dependent level is exactly zero");
    }
    if (std::fabs(lr.delta_dep_t) < t_floor) {
        lr.weak_normalization = true;
        lr.warnings.push_back("degenerate normalization: |t| of the lagged dependent level is " +
                              std::to_string(std::fabs(lr.delta_dep_t)) + ", below " + std::to_string(t_floor));
    }
}

LongRunTerm make_term(std::string name, double coef, double var, double df) {
    const auto s = ols::t_stat(coef, std::sqrt(std::max(var, 0.0)), df, name);
    return {std::move(name), coef, s.se, s.t, s.p_value};
}

}  // namespace

LongRunEquation long_run(const ArdlFit& fit, double t_floor) {
    const auto& o = fit.ols;
    const auto iy = o.index_of(fit.levels[0]);
    const auto ic = o.index_of(fit.intercept);
    LongRunEquation lr;
    lr.delta_dep = o.coefficients(iy);
    lr.delta_dep_t = o.std_errors(iy) > 0 ? lr.delta_dep / o.std_errors(iy) : std::numeric_limits<double>::infinity();
    check_normalization(lr, t_floor);

    const double dy = lr.delta_dep;
    const auto& V = o.covariance;
    auto add = [&](std::string name, Eigen::Index i) {
        // g = -b_i / d_y;  dg/db_i = -1/d_y,  dg/dd_y = b_i / d_y^2.
        const double b = o.coefficients(i);
        const double gi = -1.0 / dy;
        const double gy = b / (dy * dy);
        const double var = gi * gi * V(i, i) + 2.0 * gi * gy * V(i, iy) + gy * gy * V(iy, iy);
        lr.terms.push_back(make_term(std::move(name), -b / dy, var, o.df_resid()));
    };
    for (std::size_t j = 0; j < fit.spec.k(); ++j) add(fit.spec.regressors[j], o.index_of(fit.levels[j + 1]));
    add(kConst, ic);
    return lr;
}

LongRunEquation long_run_bewley(const Dataset& dataset, const ArdlFit& fit, double t_floor) {
    const auto& spec = fit.spec;
    const auto p = panel_for(dataset, spec);
    const auto start = fit.first_row;
    const auto n = static_cast<Eigen::Index>(fit.response.size());
    const auto k = spec.k();

    // y_t on [1, x_t, dy_t..dy_{t-a}, dx_{j,t..t-b_j}]; dy_t is endogenous.
    const auto K = fit.design.cols();
    Eigen::MatrixXd X(n, K);
    Eigen::VectorXd y(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto t = start + static_cast<std::size_t>(r);
        Eigen::Index c = 0;
        X(r, c++) = 1.0;
        for (std::size_t j = 0; j < k; ++j) X(r, c++) = p.cols[j + 1][t];
        for (int i = 0; i <= spec.dep_lags; ++i) X(r, c++) = d(p.cols[0], t, i);
        for (std::size_t j = 0; j < k; ++j) {
            for (int l = 0; l <= spec.reg_lags[j]; ++l) X(r, c++) = d(p.cols[j + 1], t, l);
        }
        y(r) = p.cols[0][t];
    }
    const auto& Z = fit.design.values();
    const Eigen::MatrixXd ZX = Z.transpose() * X;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(ZX);
    if (qr.rank() < K) throw Error(ErrorKind::SingularDesign, "Bewley instruments are not identifying");
    const Eigen::VectorXd beta = qr.solve(Z.transpose() * y);
    const Eigen::VectorXd u = y - X * beta;
    const double df = static_cast<double>(n - K);
    const double s2 = u.squaredNorm() / df;
    const Eigen::MatrixXd A = qr.solve(Eigen::MatrixXd::Identity(K, K));  // (Z'X)^-1
    const Eigen::MatrixXd V = s2 * A * (Z.transpose() * Z) * A.transpose();

    LongRunEquation lr;
    const auto iy = fit.ols.index_of(fit.levels[0]);
    lr.delta_dep = fit.ols.coefficients(iy);
    lr.delta_dep_t = lr.delta_dep / fit.ols.std_errors(iy);
    check_normalization(lr, t_floor);
    for (std::size_t j = 0; j < k; ++j) {
        const auto i = static_cast<Eigen::Index>(j + 1);
        lr.terms.push_back(make_term(spec.regressors[j], beta(i), V(i, i), df));
    }
    lr.terms.push_back(make_term(kConst, beta(0), V(0, 0), df));
    return lr;
}

EcmFit fit_ecm(const Dataset& dataset, const ArdlFit& fit, const LongRunEquation& lr) {
    const auto& spec = fit.spec;
    const auto p = panel_for(dataset, spec);
    EcmFit e;
    e.ect.resize(p.rows);
    const double c = lr.term(kConst).coef;
    for (std::size_t t = 0; t < p.rows; ++t) {
        double v = p.cols[0][t] - c;
        for (std::size_t j = 0; j < spec.k(); ++j) v -= lr.term(spec.regressors[j]).coef * p.cols[j + 1][t];
        e.ect[t] = v;
    }
    Eigen::VectorXd lagged(fit.response.size());
    for (Eigen::Index r = 0; r < lagged.size(); ++r) lagged(r) = e.ect[fit.first_row + static_cast<std::size_t>(r) - 1];

    const auto base = fit.design.without_columns(fit.levels);
    // A constant ECT duplicates the intercept; rounding keeps it from being
    // exactly constant, so judge it against the scale of y.
    const double scale = std::max(1.0, fit.response.size() ? (lagged.array().abs().maxCoeff() + std::fabs(c)) : 1.0);
    const bool flat = lagged.size() == 0 || (lagged.array() - lagged.mean()).abs().maxCoeff() <= 1e-10 * scale;
    if (flat) {
        e.ols = ols::fit(base, fit.response);
        e.degenerate = true;
        e.warnings.push_back("ECT is constant over the sample and was dropped");
        return e;
    }
    try {
        e.ols = ols::fit(base.with_column(kEctName, lagged), fit.response);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SingularDesign) throw;
        e.ols = ols::fit(base, fit.response);
        e.degenerate = true;
        e.warnings.push_back("ECT is collinear with the short-run terms and was dropped");
        return e;
    }
    const auto i = e.ols.index_of(kEctName);
    const auto s = ols::t_stat(e.ols.coefficients(i), e.ols.std_errors(i), e.ols.df_resid(), kEctName);
    e.theta = s.coef;
    e.se = s.se;
    e.t = s.t;
    e.p_value = s.p_value;
    e.valid = e.theta < 0.0 && e.p_value < 0.05;
    if (e.theta >= 0.0) e.warnings.push_back("ECT coefficient is non-negative: deviations do not correct");
    else if (!e.valid) e.warnings.push_back("ECT coefficient is not significant at 5%");
    return e;
}

}  // namespace ardlkit::ardl
