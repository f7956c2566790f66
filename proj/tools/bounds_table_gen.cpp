// Generates the small-sample case-III bounds critical values compiled into
// src/bounds_sim_case3.inc.
//
// For each (n, k) the no-level-relationship null is simulated: y is a driftless
// random walk and the k regressors are independent of it, either iid N(0,1)
// (the I(0) bound) or random walks (the I(1) bound). The test regression is
//     dy_t = c + d_y y_{t-1} + sum_j d_j x_{j,t-1} + sum_j w_j dx_{j,t} + e_t
// over n observations, and F tests d_y = d_1 = ... = d_k = 0.
//
//   bounds-table-gen [--reps 40000] [--seed 2005] > src/bounds_sim_case3.inc

#include <algorithm>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ardlkit/bounds_tables.hpp"
#include "ardlkit/ols.hpp"

namespace {

using ardlkit::ols::DesignMatrix;

double quantile(std::vector<double>& v, double p) {
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(h);
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::vector<double> simulate_f(int n, int k, bool integrated, int reps, std::uint64_t seed) {
    std::vector<double> out(reps);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    std::vector<std::string> names{"const", "y.L1"};
    for (int j = 0; j < k; ++j) names.push_back("x" + std::to_string(j) + ".L1");
    for (int j = 0; j < k; ++j) names.push_back("D.x" + std::to_string(j));
    std::vector<std::string> levels(names.begin() + 1, names.begin() + 2 + k);

    for (int r = 0; r < reps; ++r) {
        std::vector<double> y(n + 1);
        std::vector<std::vector<double>> x(k, std::vector<double>(n + 1));
        for (int t = 0; t <= n; ++t) {
            y[t] = (t ? y[t - 1] : 0.0) + z(rng);
            for (int j = 0; j < k; ++j) x[j][t] = (integrated && t ? x[j][t - 1] : 0.0) + z(rng);
        }
        Eigen::MatrixXd X(n, 2 + 2 * k);
        Eigen::VectorXd dy(n);
        for (int t = 1; t <= n; ++t) {
            X(t - 1, 0) = 1.0;
            X(t - 1, 1) = y[t - 1];
            for (int j = 0; j < k; ++j) {
                X(t - 1, 2 + j) = x[j][t - 1];
                X(t - 1, 2 + k + j) = x[j][t] - x[j][t - 1];
            }
            dy(t - 1) = y[t] - y[t - 1];
        }
        DesignMatrix full(X, names);
        const auto u = ardlkit::ols::fit(full, dy);
        const auto rr = ardlkit::ols::fit(full.without_columns(levels), dy);
        out[r] = ardlkit::ols::wald_f(u, rr, k + 1).f;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulate small-sample case-III bounds test critical values"};
    int reps = 40000;
    std::uint64_t seed = 2005;
    app.add_option("--reps", reps, "replications per (n, k, bound)");
    app.add_option("--seed", seed, "base seed");
    CLI11_PARSE(app, argc, argv);

    struct Job {
        int n, k;
        std::vector<double> lower, upper;
    };
    std::vector<Job> jobs;
    for (int k = 1; k <= 7; ++k)
        for (int n = 30; n <= 80; n += 5) jobs.push_back({n, k, {}, {}});

    std::vector<std::thread> pool;
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < jobs.size(); i += workers) {
                auto& j = jobs[i];
                const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(j.n * 100 + j.k) * 2;
                auto f0 = simulate_f(j.n, j.k, false, reps, s);
                auto f1 = simulate_f(j.n, j.k, true, reps, s + 1);
                for (double level : ardlkit::ardl::cv_levels()) {
                    j.lower.push_back(quantile(f0, 1.0 - level));
                    j.upper.push_back(quantile(f1, 1.0 - level));
                }
            }
        });
    }
    for (auto& t : pool) t.join();

    std::printf("// Generated by bounds-table-gen --reps %d --seed %llu. Do not edit.\n", reps,
                static_cast<unsigned long long>(seed));
    std::printf("// {n, k, level, I(0) bound, I(1) bound}\n");
    for (const auto& j : jobs) {
        const auto& levels = ardlkit::ardl::cv_levels();
        for (std::size_t l = 0; l < levels.size(); ++l) {
            std::printf("{%d, %d, %.3f, %.3f, %.3f},\n", j.n, j.k, levels[l], j.lower[l], j.upper[l]);
        }
    }
    return 0;
}
