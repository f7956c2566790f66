#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace ardlkit::ardl {

/**
 * Critical-value sources for the bounds F test.
 *
 * PssCase2 / PssCase3 are the asymptotic tables of Pesaran, Shin and Smith
 * (2001), Table CI(ii) (restricted intercept, no trend) and CI(iii)
 * (unrestricted intercept, no trend). SimCase3 is a small-sample case-III table
 * generated by `bounds-table-gen` (see tools/), interpolated on the number of
 * observations and joined to CI(iii) in 1/n beyond the last row.
 */
enum class CvTable { PssCase2, PssCase3, SimCase3 };

std::string_view cv_table_name(CvTable t);
CvTable parse_cv_table(std::string_view text);  // pss2|pss3|sim3

struct CriticalBounds {
    double lower = 0.0;  // I(0)
    double upper = 0.0;  // I(1)
};

// Significance levels carried by every table.
const std::vector<double>& cv_levels();

// Throws Error(Spec) when k or level is not tabulated.
CriticalBounds critical_bounds(CvTable table, int k, double level, std::size_t nobs = 0);

struct SimTableRow {
    int n;
    int k;
    double level;
    double lower;
    double upper;
};
const std::vector<SimTableRow>& sim_case3_rows();

}  // namespace ardlkit::ardl
