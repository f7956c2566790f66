#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ardlkit/bounds_tables.hpp"
#include "ardlkit/timeseries.hpp"

namespace ardlkit::sim {

enum class DgpKind {
    WhiteNoise,        // y, x iid N(0, sigma^2)
    RandomWalk,        // y a driftless random walk, x iid
    Ar1,               // y_t = rho y_{t-1} + e_t, x iid
    CointegratedPair,  // dy_t = speed (y_{t-1} - intercept - theta x_{t-1}) + e_t, x a random walk
    CoefficientBreak,  // y = intercept + theta x + e with the intercept shifted by 5 sigma at T/2
    ArErrors,          // y = intercept + theta x + u, u_t = rho u_{t-1} + e_t
    Garch11,           // y = intercept + theta x + u, u GARCH(1,1) with (0.1, 0.8)
    Quadratic,         // y = intercept + theta x + 0.5 x^2 + e
};

std::string_view dgp_name(DgpKind k);
DgpKind parse_dgp_kind(std::string_view text);  // throws Error(UnknownDgp)
const std::vector<DgpKind>& all_dgps();

struct Dgp {
    DgpKind kind = DgpKind::WhiteNoise;
    std::size_t length = 200;
    double rho = 0.5;
    double theta = 0.8;
    double speed = -0.5;
    double intercept = 2.0;
    double sigma = 1.0;
};

// "name" or "name:key=value,key=value", keys rho|theta|speed|intercept|sigma|length.
Dgp parse_dgp(std::string_view text);

struct Draw {
    std::vector<double> y;
    std::vector<double> x;
};

Draw generate(const Dgp& dgp, std::mt19937_64& rng);

// A complete dataset with columns "y" (dependent) and "x" on consecutive days.
Dataset to_dataset(const Draw& draw);

// splitmix64 of (seed, rep): each replication gets its own stream.
std::uint64_t rep_seed(std::uint64_t seed, std::uint64_t rep);

enum class Statistic { Pp, Adf, Bounds, Bg, Arch, Reset, Jb, Cusum };
std::string_view statistic_name(Statistic s);
Statistic parse_statistic(std::string_view text);

struct Config {
    Dgp dgp;
    Statistic statistic = Statistic::Pp;
    std::size_t reps = 500;
    std::uint64_t seed = 20200310;
    unsigned workers = 0;  // 0: hardware concurrency
    double level = 0.05;
    ardl::CvTable table = ardl::CvTable::PssCase2;
};

struct Result {
    Config config;
    std::vector<double> stats;     // per replication, in replication order
    std::vector<std::uint8_t> rejects;
    std::size_t failures = 0;      // replications whose statistic could not be computed
    double rejection_rate = 0.0;   // over successful replications
};

/**
 * Runs `reps` independent replications. Replication r draws from rep_seed(seed, r)
 * and stores into slot r, so the result does not depend on the worker count.
 *
 * Pp / Adf: constant-only unit-root test on y; reject = unit root rejected.
 * Bounds: ARDL(2,1) ECM of y on x; reject = F above the upper bound.
 * Bg / Arch / Reset / Jb / Cusum: OLS of y on a constant and x; reject at `level`.
 */
Result run(const Config& config);

}  // namespace ardlkit::sim
