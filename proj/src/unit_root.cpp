#include "ardlkit/unit_root.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ardlkit/error.hpp"
#include "ardlkit/ols.hpp"

namespace ardlkit::unit_root {

std::string_view test_name(TestKind k) { return k == TestKind::PhillipsPerron ? "pp" : "adf"; }

TestKind parse_test(std::string_view text) {
    if (text == "pp") return TestKind::PhillipsPerron;
    if (text == "adf") return TestKind::Adf;
    throw Error(ErrorKind::Config, "unknown unit-root test '" + std::string(text) + "' (pp|adf)");
}

std::string_view deterministic_name(Deterministic d) {
    switch (d) {
        case Deterministic::None: return "n";
        case Deterministic::Constant: return "c";
        case Deterministic::ConstantTrend: return "ct";
    }
    return "c";
}

Deterministic parse_deterministic(std::string_view text) {
    if (text == "n" || text == "none") return Deterministic::None;
    if (text == "c" || text == "constant") return Deterministic::Constant;
    if (text == "ct" || text == "trend") return Deterministic::ConstantTrend;
    throw Error(ErrorKind::Config, "unknown deterministic spec '" + std::string(text) + "' (n|c|ct)");
}

std::string_view order_name(Order o) {
    switch (o) {
        case Order::I0: return "I(0)";
        case Order::I1: return "I(1)";
        case Order::Higher: return "higher";
    }
    return "higher";
}

std::string_view UnitRootResult::stars() const {
    if (reject_1) return "***";
    if (reject_5) return "**";
    if (reject_10) return "*";
    return "";
}

CriticalValues mackinnon_tau(Deterministic d, std::size_t nobs) {
    // MacKinnon (2010), "Critical Values for Cointegration Tests", Queen's
    // Economics Department Working Paper 1227, Table 2, N = 1 rows
    // (tau_nc, tau_c, tau_ct) at 1%, 5%, 10%: {b_inf, b1, b2, b3}.
    static constexpr double kNone[3][4] = {
        {-2.56574, -2.2358, -3.627, 0.0}, {-1.94100, -0.2686, -3.365, 31.223}, {-1.61682, 0.2656, -2.714, 25.364}};
    static constexpr double kConst[3][4] = {
        {-3.43035, -6.5393, -16.786, -79.433}, {-2.86154, -2.8903, -4.234, -40.040}, {-2.56677, -1.5384, -2.809, 0.0}};
    static constexpr double kTrend[3][4] = {{-3.95877, -9.0531, -28.428, -134.155},
                                            {-3.41049, -4.3904, -9.036, -45.374},
                                            {-3.12705, -2.5856, -3.925, -22.380}};
    const auto& table = d == Deterministic::None ? kNone : d == Deterministic::Constant ? kConst : kTrend;
    const double T = static_cast<double>(nobs);
    auto cv = [&](const double (&b)[4]) { return b[0] + b[1] / T + b[2] / (T * T) + b[3] / (T * T * T); };
    return {cv(table[0]), cv(table[1]), cv(table[2])};
}

int default_bandwidth(std::size_t nobs) {
    return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(nobs) / 100.0, 2.0 / 9.0)));
}

namespace {

void check_input(std::span<const double> y, std::size_t min_len) {
    if (y.size() < min_len) {
        throw Error(ErrorKind::Length, "unit-root test needs at least " + std::to_string(min_len) +
                                           " observations, got " + std::to_string(y.size()));
    }
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    if (*lo == *hi) throw Error(ErrorKind::Degenerate, "unit-root test on a constant series");
}

// Rows t = first..T-1 of: Delta y_t on [deterministics, y_{t-1}, Delta y_{t-1..t-p}].
struct DfRegression {
    ols::DesignMatrix X;
    Eigen::VectorXd dy;
    Eigen::Index level_col = 0;
};

DfRegression df_regression(std::span<const double> y, Deterministic d, int p, std::size_t first) {
    const std::size_t T = y.size();
    const auto n = static_cast<Eigen::Index>(T - first);
    std::vector<std::string> names;
    if (d != Deterministic::None) names.push_back("const");
    if (d == Deterministic::ConstantTrend) names.push_back("trend");
    const auto level_col = static_cast<Eigen::Index>(names.size());
    names.push_back("L1.y");
    for (int i = 1; i <= p; ++i) names.push_back("L" + std::to_string(i) + ".D.y");

    Eigen::MatrixXd X(n, static_cast<Eigen::Index>(names.size()));
    Eigen::VectorXd dy(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const std::size_t t = first + static_cast<std::size_t>(r);
        Eigen::Index c = 0;
        if (d != Deterministic::None) X(r, c++) = 1.0;
        if (d == Deterministic::ConstantTrend) X(r, c++) = static_cast<double>(t);
        X(r, c++) = y[t - 1];
        for (int i = 1; i <= p; ++i) X(r, c++) = y[t - i] - y[t - i - 1];
        dy(r) = y[t] - y[t - 1];
    }
    return {ols::DesignMatrix(std::move(X), std::move(names)), std::move(dy), level_col};
}

void decide(UnitRootResult& r) {
    r.critical = mackinnon_tau(r.deterministic, r.nobs);
    r.reject_1 = r.statistic < r.critical.one;
    r.reject_5 = r.statistic < r.critical.five;
    r.reject_10 = r.statistic < r.critical.ten;
}

ols::OlsFit fit_or_degenerate(const DfRegression& reg) {
    try {
        return ols::fit(reg.X, reg.dy);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularDesign) {
            throw Error(ErrorKind::Degenerate, std::string("degenerate unit-root regression: ") + e.what());
        }
        throw;
    }
}

}  // namespace

UnitRootResult pp_test(std::span<const double> y, Deterministic d, std::optional<int> bandwidth) {
    check_input(y, kMinLength);
    const auto reg = df_regression(y, d, 0, 1);
    const auto f = fit_or_degenerate(reg);
    const auto n = static_cast<std::size_t>(f.nobs);
    const int l = bandwidth.value_or(default_bandwidth(n));
    if (l < 0) throw Error(ErrorKind::Config, "bandwidth must be >= 0");

    const Eigen::VectorXd& u = f.residuals;
    const double nn = static_cast<double>(n);
    const double gamma0 = u.squaredNorm() / nn;
    double lambda2 = gamma0;
    for (int j = 1; j <= l && j < static_cast<int>(n); ++j) {
        const double gj = u.tail(static_cast<Eigen::Index>(n) - j).dot(u.head(static_cast<Eigen::Index>(n) - j)) / nn;
        lambda2 += 2.0 * (1.0 - j / (l + 1.0)) * gj;
    }
    if (!(lambda2 > 0.0)) throw Error(ErrorKind::Degenerate, "non-positive long-run variance in PP correction");

    const double se = f.std_errors(reg.level_col);
    const double s = std::sqrt(f.sigma2);
    const double t = f.coefficients(reg.level_col) / se;
    const double lambda = std::sqrt(lambda2);

    UnitRootResult r;
    r.test = TestKind::PhillipsPerron;
    r.deterministic = d;
    r.lags = l;
    r.nobs = n;
    r.df_t = t;
    r.statistic = std::sqrt(gamma0 / lambda2) * t - (lambda2 - gamma0) / (2.0 * lambda) * (nn * se / s);
    decide(r);
    return r;
}

UnitRootResult adf_test(std::span<const double> y, Deterministic d, int max_lag) {
    if (max_lag < 0) throw Error(ErrorKind::Config, "max_lag must be >= 0");
    check_input(y, static_cast<std::size_t>(max_lag) + kMinLength);

    // Lag choice on the common sample so AICs are comparable.
    const std::size_t common = static_cast<std::size_t>(max_lag) + 1;
    int best = 0;
    double best_aic = std::numeric_limits<double>::infinity();
    for (int p = 0; p <= max_lag; ++p) {
        const auto f = fit_or_degenerate(df_regression(y, d, p, common));
        if (f.aic < best_aic) {
            best_aic = f.aic;
            best = p;
        }
    }
    const auto reg = df_regression(y, d, best, static_cast<std::size_t>(best) + 1);
    const auto f = fit_or_degenerate(reg);

    UnitRootResult r;
    r.test = TestKind::Adf;
    r.deterministic = d;
    r.lags = best;
    r.nobs = static_cast<std::size_t>(f.nobs);
    r.df_t = f.coefficients(reg.level_col) / f.std_errors(reg.level_col);
    r.statistic = r.df_t;
    decide(r);
    return r;
}

UnitRootResult run(TestKind kind, std::span<const double> y, Deterministic d, int param) {
    if (kind == TestKind::PhillipsPerron) {
        return pp_test(y, d, param >= 0 ? std::optional<int>(param) : std::nullopt);
    }
    return adf_test(y, d, param >= 0 ? param : 4);
}

Classification classify(std::span<const double> y, TestKind kind, Deterministic d) {
    Classification c;
    // ADF max lag shrinks for short series so the difference test stays feasible.
    const int adf_lag = static_cast<int>(std::min<std::size_t>(4, y.size() > kMinLength + 1 ? y.size() - kMinLength - 1 : 0));
    c.level = run(kind, y, d, kind == TestKind::Adf ? adf_lag : -1);
    std::vector<double> dy(y.size() - 1);
    for (std::size_t t = 1; t < y.size(); ++t) dy[t - 1] = y[t] - y[t - 1];
    if (c.level.reject_5) {
        c.order = Order::I0;
    }
    c.difference = run(kind, dy, d, kind == TestKind::Adf ? std::max(0, adf_lag - 1) : -1);
    if (c.order != Order::I0) c.order = c.difference.reject_5 ? Order::I1 : Order::Higher;
    return c;
}

}  // namespace ardlkit::unit_root
