#include <gtest/gtest.h>

#include "ardlkit/reference.hpp"
#include "ardlkit/report.hpp"

using namespace ardlkit;

namespace {

ingest::PanelConfig snapshot_config() {
    ingest::PanelConfig c;
    c.data_dir = ARDLKIT_DATA_DIR;
    return c;
}

}  // namespace

TEST(Labels, SubscriptsFollowShiftMinusLag) {
    const auto cfg = snapshot_config();
    const auto panel = ingest::build_dataset(cfg);
    const auto covid = ingest::covid_column(cfg);
    EXPECT_EQ(report::long_run_label(panel, covid), "COVID-19_{t+1}");
    EXPECT_EQ(report::long_run_label(panel, "vix"), "VIX_{t}");
    EXPECT_EQ(report::long_run_label(panel, "epu"), "EPU_{t-1}");
    EXPECT_EQ(report::long_run_label(panel, "const"), "c");
    EXPECT_EQ(report::short_run_label(panel, "D.wti.L1"), "ΔOil_{t-1}");
    EXPECT_EQ(report::short_run_label(panel, "D." + covid), "ΔCOVID-19_{t+1}");
    EXPECT_EQ(report::short_run_label(panel, "D." + covid + ".L3"), "ΔCOVID-19_{t-2}");
    EXPECT_EQ(report::short_run_label(panel, "D.epu.L2"), "ΔEPU_{t-3}");
    EXPECT_EQ(report::short_run_label(panel, ardl::kEctName), "ECT_{t-1}");
}

TEST(Reference, SixModelsInTableOrder) {
    const auto& m = reference::models();
    ASSERT_EQ(m.size(), 6u);
    const auto keys = report::all_models();
    ASSERT_EQ(keys.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(m[i].id, keys[i].id());
    EXPECT_EQ(m[0].conclusion, "cointegration");
    EXPECT_EQ(m[2].conclusion, "no cointegration");
    EXPECT_EQ(m[3].conclusion, "cointegration at 10% significance");
    EXPECT_EQ(m[4].conclusion, "inconclusive");
    EXPECT_TRUE(m[2].long_run.empty());
    EXPECT_EQ(reference::find_model("nope"), nullptr);
}

TEST(Reference, CellParsing) {
    const auto* m = reference::find_model("wti_total");
    ASSERT_NE(m, nullptr);
    ASSERT_TRUE(m->ect.has_value());
    EXPECT_DOUBLE_EQ(m->ect->coef, -1.453);
    EXPECT_EQ(m->ect->stars, 3);
    EXPECT_TRUE(m->ect->negative);
    // "-0.000**" keeps its sign.
    const auto& c = m->short_run[2];
    EXPECT_EQ(c.label, "ΔCOVID-19_{t+1}");
    EXPECT_EQ(c.coef, 0.0);
    EXPECT_TRUE(c.negative);
    EXPECT_EQ(c.stars, 2);
}

TEST(Reference, CompareTolerances) {
    reference::Cell c{"VIX_{t}", -0.282, true, 3, 0.014};
    EXPECT_TRUE(reference::compare(c, -0.20, 2).all());
    EXPECT_FALSE(reference::compare(c, -0.10, 3).magnitude);
    EXPECT_FALSE(reference::compare(c, 0.28, 3).sign);
    EXPECT_FALSE(reference::compare(c, -0.28, 1).stars);
    reference::Cell z{"x", 0.0, true, 2, 0.0};
    EXPECT_TRUE(reference::compare(z, -0.0004, 2).all());
    EXPECT_FALSE(reference::compare(z, 0.0004, 2).sign);
    reference::Cell u{"x", 0.0, false, 0, 0.0};
    EXPECT_TRUE(reference::compare(u, 0.0004, 0).sign);
    EXPECT_TRUE(reference::compare(u, -0.0004, 0).sign);
}

TEST(Report, ModelBundleIsConsistent) {
    report::Options o;
    const auto m = report::run_model(snapshot_config(), {ingest::OilBenchmark::Brent, ingest::CovidScope::China}, o);
    EXPECT_EQ(m.key.id(), "brent_china");
    EXPECT_EQ(m.panel.column(m.panel.dependent()).series.name(), "brent");
    EXPECT_EQ(m.conclusion, ardl::graded_conclusion(m.bounds.f, o.table, 3, m.bounds.nobs));
    const auto j = report::fit_json(m);
    EXPECT_EQ(j["bounds"]["graded_conclusion"], m.conclusion);
    EXPECT_EQ(j["long_run"].size(), 4u);
    EXPECT_TRUE(j["long_run"][0].contains("published"));
    EXPECT_EQ(j["sample"]["nobs"].get<long>(), m.fit.ols.nobs);
    const auto text = report::render_fits({m});
    EXPECT_NE(text.find("Long-run equation"), std::string::npos);
    EXPECT_NE(text.find("Short-run equation"), std::string::npos);
    EXPECT_NE(text.find("ECT_{t-1}"), std::string::npos);
    EXPECT_NE(text.find("Serial correlation"), std::string::npos);
}

TEST(Report, ReplicateIsDeterministicAndWorkerInvariant) {
    report::Options a;
    a.workers = 1;
    report::Options b;
    b.workers = 4;
    const auto keys = report::all_models();
    const auto x = report::dump(report::replicate(snapshot_config(), a, keys).doc);
    const auto y = report::dump(report::replicate(snapshot_config(), b, keys).doc);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.back(), '\n');
}

TEST(Report, SubsetBundle) {
    report::Options o;
    const auto b = report::replicate(snapshot_config(), o, {{ingest::OilBenchmark::Wti, ingest::CovidScope::Total}});
    EXPECT_EQ(b.models.size(), 1u);
    EXPECT_EQ(b.doc["bounds"].size(), 1u);
    EXPECT_EQ(b.doc["bounds_conclusions_total"].get<int>(), 1);
}

TEST(Report, SummaryCoversEverySeries) {
    const auto s = report::summary_panel(snapshot_config());
    ASSERT_EQ(s.size(), 7u);
    for (const auto& e : s) {
        EXPECT_GT(e.stats.n, 20u) << e.variable;
        EXPECT_LE(e.stats.min, e.stats.mean);
        EXPECT_LE(e.stats.mean, e.stats.max);
    }
    const auto j = report::summary_json(s);
    EXPECT_TRUE(j[0].contains("published"));  // oil_wti
}
