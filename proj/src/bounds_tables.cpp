#include "ardlkit/bounds_tables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ardlkit/error.hpp"

namespace ardlkit::ardl {

namespace {

constexpr double kLevels[] = {0.10, 0.05, 0.025, 0.01};

// Pesaran, Shin & Smith (2001), J. Applied Econometrics 16, Table CI(ii) and
// Table CI(iii), k = 1..5. Per k: {I(0), I(1)} at 10%, 5%, 2.5%, 1%.
constexpr double kPssCase2[5][4][2] = {
    {{3.02, 3.51}, {3.62, 4.16}, {4.18, 4.79}, {4.94, 5.58}},
    {{2.63, 3.35}, {3.10, 3.87}, {3.55, 4.38}, {4.13, 5.00}},
    {{2.37, 3.20}, {2.79, 3.67}, {3.15, 4.08}, {3.65, 4.66}},
    {{2.20, 3.09}, {2.56, 3.49}, {2.88, 3.87}, {3.29, 4.37}},
    {{2.08, 3.00}, {2.39, 3.38}, {2.70, 3.73}, {3.06, 4.15}},
};
constexpr double kPssCase3[5][4][2] = {
    {{4.04, 4.78}, {4.94, 5.73}, {5.77, 6.68}, {6.84, 7.84}},
    {{3.17, 4.14}, {3.79, 4.85}, {4.41, 5.52}, {5.15, 6.36}},
    {{2.72, 3.77}, {3.23, 4.35}, {3.69, 4.89}, {4.29, 5.61}},
    {{2.45, 3.52}, {2.86, 4.01}, {3.25, 4.49}, {3.74, 5.06}},
    {{2.26, 3.35}, {2.62, 3.79}, {2.96, 4.18}, {3.41, 4.68}},
};

const std::vector<SimTableRow> kSimCase3 = {
#include "bounds_sim_case3.inc"
};

std::size_t level_index(double level) {
    for (std::size_t i = 0; i < std::size(kLevels); ++i) {
        if (std::fabs(kLevels[i] - level) < 1e-9) return i;
    }
    throw Error(ErrorKind::Spec, "no bounds critical values at significance level " + std::to_string(level) +
                                     " (tabulated: 0.10, 0.05, 0.025, 0.01)");
}

CriticalBounds asymptotic(const double (&table)[5][4][2], int k, std::size_t li) {
    if (k < 1 || k > 5) {
        throw Error(ErrorKind::Spec, "bounds critical values are tabulated for k = 1..5, got k = " + std::to_string(k));
    }
    return {table[k - 1][li][0], table[k - 1][li][1]};
}

}  // namespace

std::string_view cv_table_name(CvTable t) {
    switch (t) {
        case CvTable::PssCase2: return "pss2";
        case CvTable::PssCase3: return "pss3";
        case CvTable::SimCase3: return "sim3";
    }
    return "pss2";
}

CvTable parse_cv_table(std::string_view text) {
    if (text == "pss2") return CvTable::PssCase2;
    if (text == "pss3") return CvTable::PssCase3;
    if (text == "sim3") return CvTable::SimCase3;
    throw Error(ErrorKind::Config, "unknown critical-value table '" + std::string(text) + "' (pss2|pss3|sim3)");
}

const std::vector<double>& cv_levels() {
    static const std::vector<double> levels(std::begin(kLevels), std::end(kLevels));
    return levels;
}

const std::vector<SimTableRow>& sim_case3_rows() { return kSimCase3; }

CriticalBounds critical_bounds(CvTable table, int k, double level, std::size_t nobs) {
    const auto li = level_index(level);
    if (table == CvTable::PssCase2) return asymptotic(kPssCase2, k, li);
    const auto limit = asymptotic(kPssCase3, k, li);
    if (table == CvTable::PssCase3) return limit;

    std::vector<SimTableRow> rows;
    for (const auto& r : kSimCase3) {
        if (r.k == k && std::fabs(r.level - level) < 1e-9) rows.push_back(r);
    }
    if (rows.empty()) throw Error(ErrorKind::Spec, "no simulated critical values for k = " + std::to_string(k));
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });

    const double n = static_cast<double>(nobs);
    if (n <= rows.front().n) return {rows.front().lower, rows.front().upper};
    if (n >= rows.back().n) {
        // Linear in 1/n between the last simulated row and the asymptotic value.
        const double w = static_cast<double>(rows.back().n) / n;
        return {limit.lower + w * (rows.back().lower - limit.lower), limit.upper + w * (rows.back().upper - limit.upper)};
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (n <= rows[i].n) {
            const auto& a = rows[i - 1];
            const auto& b = rows[i];
            const double w = (n - a.n) / static_cast<double>(b.n - a.n);
            return {a.lower + w * (b.lower - a.lower), a.upper + w * (b.upper - a.upper)};
        }
    }
    return {rows.back().lower, rows.back().upper};
}

}  // namespace ardlkit::ardl
