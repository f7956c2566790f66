#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ardlkit/diagnostics.hpp"
#include "ardlkit/error.hpp"

using namespace ardlkit;
using namespace ardlkit::diag;

namespace {

struct Problem {
    ols::DesignMatrix X;
    Eigen::VectorXd y;
    ols::OlsFit fit;
};

// Static regression of the reference ECM data set: y on [1, x1, x2].
Problem formula_problem() {
    const int T = 60;
    std::vector<double> y(T), x1(T), x2(T);
    double acc = 0.0;
    for (int t = 0; t < T; ++t) {
        acc += std::sin(1.3 * t) + 0.4 * std::cos(0.7 * std::pow(t, 1.1));
        x1[t] = acc;
        x2[t] = std::cos(0.9 * t) + 0.2 * std::sin(2.1 * t);
    }
    y[0] = 1.0;
    for (int t = 1; t < T; ++t) {
        const double e = 0.3 * std::sin(2.7 * t + 0.5) + 0.2 * std::cos(1.9 * std::pow(t, 1.05));
        y[t] = y[t - 1] - 0.4 * (y[t - 1] - 1.0 - 0.7 * x1[t - 1] - 0.5 * x2[t - 1]) + 0.3 * (x1[t] - x1[t - 1]) + e;
    }
    Eigen::MatrixXd X(T, 3);
    Eigen::VectorXd Y(T);
    for (int t = 0; t < T; ++t) {
        X.row(t) << 1.0, x1[t], x2[t];
        Y(t) = y[t];
    }
    ols::DesignMatrix D(X, {"const", "x1", "x2"});
    auto f = ols::fit(D, Y);
    return {D, Y, f};
}

Problem iid_problem(std::mt19937_64& rng, int T) {
    std::normal_distribution<double> z;
    Eigen::MatrixXd X(T, 2);
    Eigen::VectorXd y(T);
    for (int t = 0; t < T; ++t) {
        X.row(t) << 1.0, z(rng);
        y(t) = 1.0 + 0.5 * X(t, 1) + z(rng);
    }
    ols::DesignMatrix D(X, {"const", "x"});
    auto f = ols::fit(D, y);
    return {D, y, f};
}

}  // namespace

TEST(BreuschGodfrey, MatchesReference) {
    const auto p = formula_problem();
    const auto t = breusch_godfrey(p.X, p.fit, 4);
    EXPECT_NEAR(t.stat, 36.69689488991793, 1e-8);
    EXPECT_NEAR(t.p_value, 2.079776397751326e-07, 1e-13);
    EXPECT_EQ(t.df, 4);
    EXPECT_TRUE(t.reject());
    EXPECT_EQ(serial_verdict(t), "serial correlation");
}

TEST(ArchLm, MatchesReference) {
    const auto p = formula_problem();
    const auto t = arch_lm(p.fit.residuals, 4);
    EXPECT_NEAR(t.stat, 3.9823347012754446, 1e-8);
    EXPECT_NEAR(t.p_value, 0.40840186701981585, 1e-9);
    EXPECT_EQ(arch_verdict(t), "no ARCH effects");
}

TEST(JarqueBera, MatchesReference) {
    const auto p = formula_problem();
    const auto j = jarque_bera(p.fit.residuals);
    EXPECT_NEAR(j.stat, 3.0808868778718663, 1e-9);
    EXPECT_NEAR(j.p_value, 0.21428605757410696, 1e-9);
}

TEST(JarqueBera, KnownMoments) {
    // Symmetric two-point distribution: skewness 0, kurtosis 1.
    Eigen::VectorXd e(100);
    for (int i = 0; i < 100; ++i) e(i) = i % 2 ? 1.0 : -1.0;
    const auto j = jarque_bera(e);
    EXPECT_NEAR(j.skewness, 0.0, 1e-12);
    EXPECT_NEAR(j.kurtosis, 1.0, 1e-12);
    EXPECT_NEAR(j.stat, 100.0 / 6.0 * (4.0 / 4.0), 1e-10);
    EXPECT_TRUE(jarque_bera(Eigen::VectorXd::Constant(10, 2.0)).degenerate);
}

TEST(Reset, MatchesReference) {
    const auto p = formula_problem();
    const auto r = ramsey_reset(p.X, p.y, p.fit);
    EXPECT_NEAR(r.f, 0.37703401646587426, 1e-8);
    EXPECT_NEAR(r.p_value, 0.6876517336715382, 1e-8);
    EXPECT_EQ(r.powers, 2);
    EXPECT_FALSE(r.dropped_cube);
}

TEST(Reset, ConstantFittedValuesIsError) {
    Eigen::MatrixXd X = Eigen::MatrixXd::Ones(20, 1);
    Eigen::VectorXd y(20);
    for (int i = 0; i < 20; ++i) y(i) = std::sin(i);
    ols::DesignMatrix D(X, {"const"});
    const auto f = ols::fit(D, y);
    try {
        ramsey_reset(D, y, f);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
    }
}

TEST(Reset, BinaryRegressorDropsCube) {
    // With a single 0/1 regressor the fitted values take two values, so their
    // square and cube are both affine in the dummy.
    Eigen::MatrixXd X(40, 2);
    Eigen::VectorXd y(40);
    for (int i = 0; i < 40; ++i) {
        X.row(i) << 1.0, i % 3 == 0 ? 1.0 : 0.0;
        y(i) = 2.0 + X(i, 1) + 0.1 * std::sin(1.3 * i);
    }
    ols::DesignMatrix D(X, {"const", "d"});
    const auto r = ramsey_reset(D, y, ols::fit(D, y));
    EXPECT_TRUE(r.degenerate);
}

TEST(Cusum, MatchesDirectRecursion) {
    const auto p = formula_problem();
    const auto c = cusum(p.X, p.y);
    ASSERT_EQ(c.path.size(), 57u);
    EXPECT_EQ(c.first, 3u);
    EXPECT_FALSE(c.truncated);
    EXPECT_NEAR(c.path[0], 0.9616366768245995, 1e-9);
    EXPECT_NEAR(c.path[10], 1.4292358588767164, 1e-9);
    EXPECT_NEAR(c.path.back(), 8.618081760474984, 1e-9);
    const double n = 57.0;
    EXPECT_NEAR(c.bound.front(), kCusumA * (std::sqrt(n) + 2.0 / std::sqrt(n)), 1e-12);
    EXPECT_NEAR(c.bound.back(), 3.0 * kCusumA * std::sqrt(n), 1e-12);
}

TEST(Cusum, StableIffPathInsideBand) {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 50; ++rep) {
        auto p = iid_problem(rng, 60);
        if (rep % 2) {
            for (int t = 30; t < 60; ++t) p.y(t) += 2.0 + 0.1 * rep;
        }
        const auto c = cusum(p.X, p.y);
        bool inside = true;
        for (std::size_t i = 0; i < c.path.size(); ++i) inside &= std::fabs(c.path[i]) <= c.bound[i];
        EXPECT_EQ(c.stable, inside);
    }
}

TEST(Cusum, SkipsRankDeficientStart) {
    Eigen::MatrixXd X(30, 2);
    Eigen::VectorXd y(30);
    for (int t = 0; t < 30; ++t) {
        X.row(t) << 1.0, t < 5 ? 0.0 : std::sin(0.7 * t);
        y(t) = std::cos(1.1 * t);
    }
    const auto c = cusum(ols::DesignMatrix(X, {"const", "x"}), y);
    EXPECT_TRUE(c.truncated);
    EXPECT_EQ(c.first, 6u);
    EXPECT_EQ(c.path.size(), 24u);
}

TEST(Degenerate, PerfectFitReportsPValueOne) {
    Eigen::MatrixXd X(30, 2);
    Eigen::VectorXd y(30);
    for (int t = 0; t < 30; ++t) {
        X.row(t) << 1.0, t;
        y(t) = 3.0 + 2.0 * t;
    }
    ols::DesignMatrix D(X, {"const", "t"});
    const auto f = ols::fit(D, y);
    const auto bg = breusch_godfrey(D, f);
    EXPECT_TRUE(bg.degenerate);
    EXPECT_DOUBLE_EQ(bg.p_value, 1.0);
    const auto a = arch_lm(f.residuals);
    EXPECT_TRUE(a.degenerate);
    EXPECT_DOUBLE_EQ(a.p_value, 1.0);
    EXPECT_EQ(arch_verdict(a), "not testable");
}

TEST(Degenerate, TooFewObservations) {
    std::mt19937_64 rng(2);
    const auto p = iid_problem(rng, 6);
    EXPECT_TRUE(breusch_godfrey(p.X, p.fit, 4).degenerate);
    EXPECT_TRUE(arch_lm(p.fit.residuals, 4).degenerate);
}

TEST(Sizes, NominalUnderIidErrors) {
    std::mt19937_64 rng(123);
    int bg = 0, arch = 0, reset = 0;
    const int reps = 1000;
    for (int r = 0; r < reps; ++r) {
        const auto p = iid_problem(rng, 200);
        bg += breusch_godfrey(p.X, p.fit).reject();
        arch += arch_lm(p.fit.residuals).reject();
        reset += ramsey_reset(p.X, p.y, p.fit).reject();
    }
    EXPECT_NEAR(bg / double(reps), 0.05, 0.025);
    EXPECT_NEAR(arch / double(reps), 0.05, 0.025);
    EXPECT_NEAR(reset / double(reps), 0.05, 0.025);
}

TEST(RunAll, BundlesEveryTest) {
    const auto p = formula_problem();
    const auto r = run_all(p.X, p.y, p.fit);
    EXPECT_DOUBLE_EQ(r.serial.stat, breusch_godfrey(p.X, p.fit).stat);
    EXPECT_DOUBLE_EQ(r.reset.f, ramsey_reset(p.X, p.y, p.fit).f);
    EXPECT_EQ(r.cusum.path.size(), 57u);
}
