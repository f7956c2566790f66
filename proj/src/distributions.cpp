#include "ardlkit/distributions.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>

namespace ardlkit::dist {

namespace bm = boost::math;

double normal_cdf(double x) {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    return bm::cdf(bm::normal_distribution<>{}, x);
}

double normal_quantile(double p) { return bm::quantile(bm::normal_distribution<>{}, p); }

double student_t_two_sided(double t, double df) {
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    const double a = std::fabs(t);
    if (std::isinf(a)) return 0.0;
    if (!(df > 0) || std::isinf(df)) return 2.0 * bm::cdf(bm::complement(bm::normal_distribution<>{}, a));
    return 2.0 * bm::cdf(bm::complement(bm::students_t_distribution<>{df}, a));
}

double chi2_sf(double x, double df) {
    if (!(x > 0)) return 1.0;
    if (std::isinf(x)) return 0.0;
    return bm::cdf(bm::complement(bm::chi_squared_distribution<>{df}, x));
}

double chi2_quantile(double p, double df) { return bm::quantile(bm::chi_squared_distribution<>{df}, p); }

double f_sf(double x, double df1, double df2) {
    if (!(x > 0)) return 1.0;
    if (std::isinf(x)) return 0.0;
    return bm::cdf(bm::complement(bm::fisher_f_distribution<>{df1, df2}, x));
}

double f_quantile(double p, double df1, double df2) {
    return bm::quantile(bm::fisher_f_distribution<>{df1, df2}, p);
}

}  // namespace ardlkit::dist
