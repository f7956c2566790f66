#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ardlkit/error.hpp"
#include "ardlkit/ingest.hpp"

using namespace ardlkit;
using namespace ardlkit::ingest;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("ardlkit_ingest_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path write(const std::string& name, const std::string& body) const {
        std::ofstream(path_ / name) << body;
        return path_ / name;
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PanelConfig bundled() {
    PanelConfig c;
    c.data_dir = ARDLKIT_DATA_DIR;
    return c;
}

// Writes a synthetic source set with `n` consecutive business days starting 2021-01-04.
PanelConfig synthetic_sources(const TempDir& dir, int n) {
    std::ostringstream who, oil, vix, epu;
    who << "date,total_new,china_new\n";
    oil << "date,wti,brent\n";
    vix << "date,vix_close\n";
    epu << "date,daily_policy_index\n";
    Date d{2021, 1, 4};
    for (int i = 0; i < n; d = d + 1) {
        if (d.iso_weekday_index() >= 5) continue;
        who << d.iso() << ',' << 100 + i * 3 << ',' << 40 + i << '\n';
        oil << d.iso() << ',' << 50.0 + std::sin(i) << ',' << 55.0 + std::cos(i) << '\n';
        vix << d.iso() << ',' << 15.0 + 0.1 * i << '\n';
        epu << d.iso() << ',' << 100.0 + (i % 7) << '\n';
        ++i;
    }
    dir.write("who.csv", who.str());
    dir.write("oil.csv", oil.str());
    dir.write("vix.csv", vix.str());
    dir.write("epu.csv", epu.str());
    PanelConfig c;
    c.data_dir = dir.path();
    c.who_file = "who.csv";
    c.oil_file = "oil.csv";
    c.vix_file = "vix.csv";
    c.epu_file = "epu.csv";
    c.window_start = Date{2021, 1, 1};
    c.window_end = Date{2021, 12, 31};
    return c;
}

}  // namespace

TEST(LoadSource, WellFormedCsv) {
    TempDir dir;
    auto p = dir.write("vix.csv", "date,vix_close\n2020-01-02,12.5\n2020-01-03,14\n2020-01-06,13.75\n");
    auto s = load_source({SourceKind::CboeVix, p, "date", {"vix_close"}});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.name(), "vix");
    EXPECT_DOUBLE_EQ(s.values()[1], 14.0);
}

TEST(LoadSource, OutsideChinaIsTotalMinusChina) {
    TempDir dir;
    auto p = dir.write("who.csv", "date,total_new,china_new\n2020-02-01,100,90\n");
    auto s = load_source({SourceKind::WhoCovid, p, "date", {"total_new", "china_new"}, CovidScope::OutsideChina});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_DOUBLE_EQ(s.values()[0], 10.0);
    EXPECT_EQ(s.name(), "covid_outside_china");
}

TEST(LoadSource, NegativeOutsideChinaIsDataError) {
    TempDir dir;
    auto p = dir.write("who.csv", "date,total_new,china_new\n2020-02-01,80,90\n");
    try {
        load_source({SourceKind::WhoCovid, p, "date", {"total_new", "china_new"}, CovidScope::OutsideChina});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Data);
    }
}

TEST(LoadSource, BadRowReportsLineNumber) {
    TempDir dir;
    auto p = dir.write("vix.csv", "date,vix_close\n2020-01-02,12.5\n2020-01-03,abc\n");
    try {
        load_source({SourceKind::CboeVix, p, "date", {"vix_close"}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
    }
    auto q = dir.write("bad_date.csv", "date,vix_close\n01/02/2020,12.5\n");
    EXPECT_THROW(load_source({SourceKind::CboeVix, q, "date", {"vix_close"}}), Error);
    auto r = dir.write("no_col.csv", "day,vix_close\n2020-01-02,12.5\n");
    EXPECT_THROW(load_source({SourceKind::CboeVix, r, "date", {"vix_close"}}), Error);
}

TEST(LoadSource, MissingFileNamesSourceUrl) {
    try {
        load_source({SourceKind::EpuDaily, "/nonexistent/epu.csv", "date", {"daily_policy_index"}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
        EXPECT_NE(std::string(e.what()).find("policyuncertainty.com"), std::string::npos);
    }
}

TEST(LoadSource, EmptyCellsAreMissingDays) {
    TempDir dir;
    auto p = dir.write("oil.csv", "date,wti,brent\n2020-02-14,52.05,57.67\n2020-02-17,,57.60\n2020-02-18,52.08,57.75\n");
    auto wti = load_source({SourceKind::EiaOil, p, "date", {"wti"}});
    auto brent = load_source({SourceKind::EiaOil, p, "date", {"brent"}});
    EXPECT_EQ(wti.size(), 2u);
    EXPECT_EQ(brent.size(), 3u);
}

TEST(Snapshot, WhoTotalKeepsFeb17Spike) {
    PanelConfig c = bundled();
    auto sources = default_sources(c);
    auto who = load_source(sources[0]);
    const auto i = who.find(Date{2020, 2, 17});
    ASSERT_LT(i, who.size());
    EXPECT_DOUBLE_EQ(who.values()[i], 19572.0);
    sources[0].scope = CovidScope::China;
    auto china = load_source(sources[0]);
    EXPECT_DOUBLE_EQ(china.values()[china.find(Date{2020, 2, 17})], 19461.0);
}

TEST(Snapshot, ChinaPlusOutsideEqualsTotal) {
    auto sources = default_sources(bundled());
    auto spec = sources[0];
    auto total = load_source(spec);
    spec.scope = CovidScope::China;
    auto china = load_source(spec);
    spec.scope = CovidScope::OutsideChina;
    auto outside = load_source(spec);
    ASSERT_EQ(total.size(), china.size());
    for (std::size_t i = 0; i < total.size(); ++i) {
        EXPECT_EQ(china.values()[i] + outside.values()[i], total.values()[i]);
    }
}

TEST(BuildDataset, DefaultPanelOnSnapshots) {
    PanelConfig c = bundled();
    auto ds = build_dataset(c);
    EXPECT_LE(ds.rows(), 49u);
    EXPECT_EQ(ds.calendar().front(), (Date{2020, 1, 21}));
    EXPECT_EQ(ds.calendar().back(), (Date{2020, 3, 9}));
    EXPECT_EQ(ds.dependent(), 0u);
    EXPECT_EQ(ds.column(1).shift, 1);
    EXPECT_EQ(ds.column(3).shift, -1);
    EXPECT_EQ(ds.column(0).series.name(), "wti");

    // COVID at 2020-03-09 carries the 2020-03-10 report (log1p of 4125 new cases).
    EXPECT_NEAR(ds.values(1).back(), std::log1p(4125.0), 1e-12);

    // Every panel date is an oil trading date.
    auto oil = load_source(default_sources(c)[1]);
    for (Date d : ds.calendar()) EXPECT_LT(oil.find(d), oil.size()) << d.iso();
}

TEST(BuildDataset, ZeroShiftsGivePlainIntersection) {
    TempDir dir;
    PanelConfig c = synthetic_sources(dir, 60);
    c.covid_shift = c.vix_shift = c.epu_shift = 0;
    auto ds = build_dataset(c);
    EXPECT_EQ(ds.rows(), 60u);
}

TEST(BuildDataset, CovidLeadDropsOneRow) {
    TempDir dir;
    PanelConfig c = synthetic_sources(dir, 60);
    c.epu_shift = 0;
    auto ds = build_dataset(c);
    EXPECT_EQ(ds.rows(), 59u);
}

TEST(BuildDataset, TooShortPanel) {
    TempDir dir;
    PanelConfig c = synthetic_sources(dir, 12);
    try {
        build_dataset(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SampleTooSmall);
    }
}

TEST(BuildDataset, DeterministicExport) {
    TempDir dir;
    PanelConfig c = bundled();
    export_plot_data(build_dataset(c), dir.path() / "a.csv", c.plot_outliers);
    export_plot_data(build_dataset(c), dir.path() / "b.csv", c.plot_outliers);
    EXPECT_EQ(slurp(dir.path() / "a.csv"), slurp(dir.path() / "b.csv"));
}

TEST(PanelConfigTest, KeysRoundTripAndValidate) {
    PanelConfig c;
    c.set("dependent", "brent");
    c.set("covid_scope", "outside");
    c.set("shift.covid", "+2");
    c.set("transform.covid", "level");
    c.set("window.end", "2020-03-06");
    EXPECT_EQ(c.dependent, OilBenchmark::Brent);
    EXPECT_EQ(c.covid_scope, CovidScope::OutsideChina);
    EXPECT_EQ(c.covid_shift, 2);
    EXPECT_EQ(c.covid_transform, Transform::Level);
    PanelConfig d;
    for (const auto& [k, v] : c.to_map()) d.set(k, v);
    EXPECT_EQ(d.to_map(), c.to_map());
    EXPECT_EQ(c.to_map().size(), PanelConfig::keys().size());
    EXPECT_THROW(c.set("bogus", "1"), Error);
    EXPECT_THROW(c.set("shift.epu", "x"), Error);
    EXPECT_THROW(c.set("transform.oil", "sqrt"), Error);
}

TEST(PanelConfigTest, ReadsKeyValueFile) {
    TempDir dir;
    auto p = dir.write("run.conf", "# comment\ndependent = brent\n\ncovid_scope=china  # trailing\n");
    auto kv = read_key_values(p);
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv[0].first, "dependent");
    EXPECT_EQ(kv[0].second, "brent");
    EXPECT_EQ(kv[1].second, "china");
    auto bad = dir.write("bad.conf", "dependent\n");
    EXPECT_THROW(read_key_values(bad), Error);
}

TEST(ExportPlot, SmallPanel) {
    TempDir dir;
    const Date d0{2020, 1, 6};
    Series a("a", {d0, d0 + 1, d0 + 2}, {1.5, 2.5, 3.5});
    Series b("b", {d0, d0 + 1, d0 + 2}, {10.0, 20.0, 30.0});
    auto ds = align({a, b});
    export_plot_data(ds, dir.path() / "p.csv", {d0 + 1});
    EXPECT_EQ(slurp(dir.path() / "p.csv"),
              "date,a,b,outlier\n2020-01-06,1.5,10,0\n2020-01-07,2.5,20,1\n2020-01-08,3.5,30,0\n");
    EXPECT_THROW(export_plot_data(ds, "/nonexistent/dir/p.csv", {}), Error);
}

TEST(ExportPlot, SnapshotFlagsFeb17) {
    TempDir dir;
    PanelConfig c = bundled();
    auto plot = build_plot_dataset(c);
    export_plot_data(plot, dir.path() / "fig.csv", c.plot_outliers);
    const auto text = slurp(dir.path() / "fig.csv");
    const auto pos = text.find("2020-02-17,");
    ASSERT_NE(pos, std::string::npos);
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol - pos);
    EXPECT_EQ(line.back(), '1') << line;
    EXPECT_NE(line.find(",19572,"), std::string::npos) << line;
}

TEST(ExportPlot, ReimportReproducesValuesExactly) {
    TempDir dir;
    PanelConfig c = bundled();
    c.oil_transform = c.covid_transform = c.vix_transform = c.epu_transform = Transform::Level;
    for (const Dataset& ds : {build_dataset(c), build_plot_dataset(c)}) {
        export_plot_data(ds, dir.path() / "rt.csv", c.plot_outliers);
        auto back = import_plot_data(dir.path() / "rt.csv");
        ASSERT_EQ(back.rows(), ds.rows());
        ASSERT_EQ(back.cols(), ds.cols());
        EXPECT_EQ(back.complete(), ds.complete());
        for (std::size_t j = 0; j < ds.cols(); ++j) {
            EXPECT_EQ(back.column(j).series.name(), ds.column(j).series.name());
            for (std::size_t r = 0; r < ds.rows(); ++r) {
                const double x = ds.value_at(j, r), y = back.value_at(j, r);
                if (std::isnan(x)) {
                    EXPECT_TRUE(std::isnan(y));
                } else {
                    EXPECT_EQ(x, y);
                }
            }
        }
    }
}
