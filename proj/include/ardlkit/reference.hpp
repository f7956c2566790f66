#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ardlkit::reference {

/// A published estimate: "-0.282***" with standard error 0.014.
struct Cell {
    std::string label;  // e.g. "VIX_{t}", "ΔOil_{t-1}", "ECT_{t-1}", "c"
    double coef = 0.0;
    bool negative = false;  // kept separately so "-0.000" still carries a sign
    int stars = 0;
    double se = 0.0;
};

struct Model {
    std::string id;  // "wti_total", "brent_outside_china", ...
    double f = 0.0;
    std::string conclusion;
    std::vector<Cell> long_run;  // empty when no long-run block was published
    std::vector<Cell> short_run;
    std::optional<Cell> ect;
    bool serial_correlation = false;
    bool arch_effects = false;
    bool stable = true;
};

const std::vector<Model>& models();
const Model* find_model(std::string_view id);

struct SummaryRow {
    std::string variable;  // oil_wti, covid_total, vix, epu
    double min, max, mean, std;
};
const std::vector<SummaryRow>& summary();

struct UnitRootRow {
    std::string variable;  // oil, covid_total, vix, epu
    double level;
    int level_stars;
    double difference;
    int difference_stars;
};
const std::vector<UnitRootRow>& unit_roots();

// Tolerances for match flags.
inline constexpr double kMagnitudeTolerance = 0.5;  // relative, coefficients
inline constexpr double kFTolerance = 0.4;          // relative, bounds F
inline constexpr double kSummaryTolerance = 0.02;   // relative, summary statistics
inline constexpr double kUnitRootTolerance = 0.8;   // absolute, unit-root statistics
inline constexpr int kStarTolerance = 1;            // tiers

struct CellMatch {
    bool sign = false;
    bool stars = false;
    bool magnitude = false;
    bool all() const { return sign && stars && magnitude; }
};

// Published values are rounded to three decimals; half a unit of rounding is
// added to the magnitude band so "0.000" cells are matchable.
CellMatch compare(const Cell& published, double coef, int stars);

}  // namespace ardlkit::reference
