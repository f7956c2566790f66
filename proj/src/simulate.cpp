#include "ardlkit/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "ardlkit/ardl.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/error.hpp"
#include "ardlkit/unit_root.hpp"

namespace ardlkit::sim {

namespace {

constexpr std::pair<DgpKind, std::string_view> kDgpNames[] = {
    {DgpKind::WhiteNoise, "white_noise"},
    {DgpKind::RandomWalk, "random_walk"},
    {DgpKind::Ar1, "ar1"},
    {DgpKind::CointegratedPair, "cointegrated_pair"},
    {DgpKind::CoefficientBreak, "coefficient_break"},
    {DgpKind::ArErrors, "ar_errors"},
    {DgpKind::Garch11, "garch11"},
    {DgpKind::Quadratic, "quadratic"},
};

constexpr std::pair<Statistic, std::string_view> kStatNames[] = {
    {Statistic::Pp, "pp"},   {Statistic::Adf, "adf"},     {Statistic::Bounds, "bounds"}, {Statistic::Bg, "bg"},
    {Statistic::Arch, "arch"}, {Statistic::Reset, "reset"}, {Statistic::Jb, "jb"},         {Statistic::Cusum, "cusum"},
};

double parse_number(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::Config, "bad value '" + std::string(text) + "' for DGP parameter " + std::string(key));
    }
    return v;
}

ols::DesignMatrix static_design(const Draw& d) {
    const auto n = static_cast<Eigen::Index>(d.y.size());
    Eigen::MatrixXd X(n, 2);
    for (Eigen::Index t = 0; t < n; ++t) {
        X(t, 0) = 1.0;
        X(t, 1) = d.x[static_cast<std::size_t>(t)];
    }
    return ols::DesignMatrix(std::move(X), {"const", "x"});
}

struct Outcome {
    double stat = 0.0;
    bool reject = false;
};

Outcome evaluate(const Config& c, const Draw& d) {
    using unit_root::Deterministic;
    switch (c.statistic) {
        case Statistic::Pp:
        case Statistic::Adf: {
            const auto kind = c.statistic == Statistic::Pp ? unit_root::TestKind::PhillipsPerron : unit_root::TestKind::Adf;
            const auto r = unit_root::run(kind, d.y, Deterministic::Constant);
            const double cv = c.level <= 0.01 ? r.critical.one : c.level <= 0.05 ? r.critical.five : r.critical.ten;
            return {r.statistic, r.statistic < cv};
        }
        case Statistic::Bounds: {
            const auto ds = to_dataset(d);
            const auto spec = ardl::make_spec(ds, 1, 1, {0});
            const auto b = ardl::bounds_f_test(ardl::fit_conditional_ecm(ds, spec), c.level, c.table);
            return {b.f, b.conclusion == ardl::Conclusion::Cointegration};
        }
        default: break;
    }
    const auto X = static_design(d);
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(d.y.data(), static_cast<Eigen::Index>(d.y.size()));
    const auto fit = ols::fit(X, y);
    switch (c.statistic) {
        case Statistic::Bg: {
            const auto t = diag::breusch_godfrey(X, fit);
            return {t.stat, t.p_value < c.level};
        }
        case Statistic::Arch: {
            const auto t = diag::arch_lm(fit.residuals);
            return {t.stat, t.p_value < c.level};
        }
        case Statistic::Reset: {
            const auto t = diag::ramsey_reset(X, y, fit);
            return {t.f, t.p_value < c.level};
        }
        case Statistic::Jb: {
            const auto t = diag::jarque_bera(fit.residuals);
            return {t.stat, t.p_value < c.level};
        }
        case Statistic::Cusum: {
            const auto t = diag::cusum(X, y);
            double peak = 0.0;
            for (std::size_t i = 0; i < t.path.size(); ++i) peak = std::max(peak, std::fabs(t.path[i]) / t.bound[i]);
            return {peak, !t.stable};
        }
        default: break;
    }
    throw Error(ErrorKind::Config, "unhandled statistic");
}

}  // namespace

std::string_view dgp_name(DgpKind k) {
    for (const auto& [kind, name] : kDgpNames) {
        if (kind == k) return name;
    }
    return "white_noise";
}

DgpKind parse_dgp_kind(std::string_view text) {
    for (const auto& [kind, name] : kDgpNames) {
        if (name == text) return kind;
    }
    std::string known;
    for (const auto& [kind, name] : kDgpNames) known += (known.empty() ? "" : "|") + std::string(name);
    throw Error(ErrorKind::UnknownDgp, "unknown DGP '" + std::string(text) + "' (" + known + ")");
}

const std::vector<DgpKind>& all_dgps() {
    static const std::vector<DgpKind> v = [] {
        std::vector<DgpKind> out;
        for (const auto& [kind, name] : kDgpNames) out.push_back(kind);
        return out;
    }();
    return v;
}

Dgp parse_dgp(std::string_view text) {
    Dgp d;
    const auto colon = text.find(':');
    d.kind = parse_dgp_kind(text.substr(0, colon));
    if (colon == std::string_view::npos) return d;
    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::Config, "DGP parameter '" + std::string(item) + "' lacks '='");
        const auto key = item.substr(0, eq);
        const double v = parse_number(key, item.substr(eq + 1));
        if (key == "rho") d.rho = v;
        else if (key == "theta") d.theta = v;
        else if (key == "speed") d.speed = v;
        else if (key == "intercept") d.intercept = v;
        else if (key == "sigma") d.sigma = v;
        else if (key == "length") d.length = static_cast<std::size_t>(v);
        else throw Error(ErrorKind::Config, "unknown DGP parameter '" + std::string(key) + "'");
    }
    return d;
}

Draw generate(const Dgp& g, std::mt19937_64& rng) {
    if (g.length < 2) throw Error(ErrorKind::Length, "DGP length must be at least 2");
    std::normal_distribution<double> z(0.0, 1.0);
    const auto T = g.length;
    Draw d;
    d.y.resize(T);
    d.x.resize(T);
    switch (g.kind) {
        case DgpKind::WhiteNoise:
            for (std::size_t t = 0; t < T; ++t) {
                d.y[t] = g.sigma * z(rng);
                d.x[t] = z(rng);
            }
            break;
        case DgpKind::RandomWalk:
            for (std::size_t t = 0; t < T; ++t) {
                d.y[t] = (t ? d.y[t - 1] : 0.0) + g.sigma * z(rng);
                d.x[t] = z(rng);
            }
            break;
        case DgpKind::Ar1:
            for (std::size_t t = 0; t < T; ++t) {
                d.y[t] = (t ? g.rho * d.y[t - 1] : 0.0) + g.sigma * z(rng);
                d.x[t] = z(rng);
            }
            break;
        case DgpKind::CointegratedPair:
            for (std::size_t t = 0; t < T; ++t) {
                if (t == 0) {
                    d.x[0] = z(rng);
                    d.y[0] = g.intercept + g.theta * d.x[0] + g.sigma * z(rng);
                    continue;
                }
                d.x[t] = d.x[t - 1] + z(rng);
                const double gap = d.y[t - 1] - g.intercept - g.theta * d.x[t - 1];
                d.y[t] = d.y[t - 1] + g.speed * gap + g.sigma * z(rng);
            }
            break;
        case DgpKind::CoefficientBreak:
            for (std::size_t t = 0; t < T; ++t) {
                d.x[t] = z(rng);
                const double shift = t >= T / 2 ? 5.0 * g.sigma : 0.0;
                d.y[t] = g.intercept + shift + g.theta * d.x[t] + g.sigma * z(rng);
            }
            break;
        case DgpKind::ArErrors: {
            double u = 0.0;
            for (std::size_t t = 0; t < T; ++t) {
                d.x[t] = z(rng);
                u = g.rho * u + g.sigma * z(rng);
                d.y[t] = g.intercept + g.theta * d.x[t] + u;
            }
            break;
        }
        case DgpKind::Garch11: {
            constexpr double a = 0.1, b = 0.8;
            const double omega = g.sigma * g.sigma * (1.0 - a - b);
            double h = g.sigma * g.sigma;
            double u = 0.0;
            for (std::size_t t = 0; t < T; ++t) {
                h = omega + a * u * u + b * h;
                u = std::sqrt(h) * z(rng);
                d.x[t] = z(rng);
                d.y[t] = g.intercept + g.theta * d.x[t] + u;
            }
            break;
        }
        case DgpKind::Quadratic:
            for (std::size_t t = 0; t < T; ++t) {
                d.x[t] = z(rng);
                d.y[t] = g.intercept + g.theta * d.x[t] + 0.5 * d.x[t] * d.x[t] + g.sigma * z(rng);
            }
            break;
    }
    return d;
}

Dataset to_dataset(const Draw& draw) {
    std::vector<Date> cal;
    const Date origin = Date::parse("2000-01-01");
    for (std::size_t t = 0; t < draw.y.size(); ++t) cal.push_back(origin + static_cast<int>(t));
    return align({Series("y", cal, draw.y), Series("x", cal, draw.x)});
}

std::uint64_t rep_seed(std::uint64_t seed, std::uint64_t rep) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (rep + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string_view statistic_name(Statistic s) {
    for (const auto& [stat, name] : kStatNames) {
        if (stat == s) return name;
    }
    return "pp";
}

Statistic parse_statistic(std::string_view text) {
    for (const auto& [stat, name] : kStatNames) {
        if (name == text) return stat;
    }
    throw Error(ErrorKind::Config, "unknown statistic '" + std::string(text) +
                                       "' (pp|adf|bounds|bg|arch|reset|jb|cusum)");
}

Result run(const Config& c) {
    Result res;
    res.config = c;
    res.stats.assign(c.reps, std::nan(""));
    res.rejects.assign(c.reps, 0);
    std::vector<std::uint8_t> failed(c.reps, 0);

    auto one = [&](std::size_t r) {
        std::mt19937_64 rng(rep_seed(c.seed, r));
        const auto draw = generate(c.dgp, rng);
        try {
            const auto o = evaluate(c, draw);
            res.stats[r] = o.stat;
            res.rejects[r] = o.reject ? 1 : 0;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularDesign && e.kind() != ErrorKind::Degenerate) throw;
            failed[r] = 1;
        }
    };

    unsigned workers = c.workers ? c.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(c.reps, 1)));
    if (workers <= 1) {
        for (std::size_t r = 0; r < c.reps; ++r) one(r);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex m;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t r; (r = next++) < c.reps;) one(r);
                } catch (...) {
                    std::lock_guard lock(m);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::size_t rejected = 0;
    for (std::size_t r = 0; r < c.reps; ++r) {
        res.failures += failed[r];
        rejected += res.rejects[r];
    }
    const auto ok = c.reps - res.failures;
    res.rejection_rate = ok ? static_cast<double>(rejected) / static_cast<double>(ok) : 0.0;
    return res;
}

}  // namespace ardlkit::sim
