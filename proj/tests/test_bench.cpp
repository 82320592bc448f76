#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ocrkit/bench/init_compare.hpp"
#include "ocrkit/bench/report.hpp"
#include "ocrkit/bench/segment_compare.hpp"
#include "ocrkit/data/pnm.hpp"
#include "test_util.hpp"

using namespace ocrkit;
using namespace ocrkit::bench;

namespace {

ann::TrainingSet<double> small_digits() {
  const auto ds = data::stratified_subset(data::load_dataset(testutil::data_dir() + "/mnist-sample"), 40);
  return data::to_training_set(ds, {7, 7, ann::Activation::sigmoid});
}

InitCompareConfig small_config() {
  InitCompareConfig cfg;
  cfg.layers = {49, 8, 10};
  cfg.h_grid = {0.5, 1.0};
  cfg.seeds = {0, 1, 2};
  cfg.eta = 0.5;
  cfg.max_epochs = 15;
  cfg.epsilon = 0.08;
  cfg.bi_subset = 20;
  return cfg;
}

}  // namespace

TEST(Report, FormatAndMedian) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(1234567.0), "1.23457e+06");
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(median({}), InvalidArgument);
}

TEST(Report, ParallelForRunsEveryJobAndRethrows) {
  std::vector<int> hits(50, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) throw InvalidArgument("boom");
                            }),
               InvalidArgument);
}

TEST(InitCompare, RowsAreSortedAndSummaryRecomputes) {
  const auto data = small_digits();
  const auto cfg = small_config();
  const auto report = run_init_compare(cfg, data);
  ASSERT_EQ(report.rows.size(), 12u);
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& a = report.rows[i - 1];
    const auto& b = report.rows[i];
    EXPECT_TRUE(std::tie(a.h, a.seed, a.init) < std::tie(b.h, b.seed, b.init));
  }
  for (const auto& r : report.rows) {
    EXPECT_LE(r.steps, cfg.max_epochs);
    EXPECT_GE(r.steps, 1);
    EXPECT_EQ(r.wall_ms, 0.0);
  }
  ASSERT_EQ(report.summary.size(), 4u);
  for (const auto& s : report.summary) {
    std::vector<double> steps;
    for (const auto& r : report.rows)
      if (r.h == s.h && r.init == s.init) steps.push_back(r.steps);
    EXPECT_EQ(s.runs, steps.size());
    EXPECT_EQ(s.median_steps, median(steps));
  }
}

TEST(InitCompare, DeterministicAcrossWorkerCounts) {
  const auto data = small_digits();
  auto cfg = small_config();
  const auto a = init_compare_csv(run_init_compare(cfg, data).rows);
  cfg.workers = 3;
  const auto b = init_compare_csv(run_init_compare(cfg, data).rows);
  EXPECT_EQ(a, b);
}

TEST(InitCompare, SingleSampleAndDivergenceDoNotAbort) {
  auto data = small_digits().head(1);
  auto cfg = small_config();
  cfg.h_grid = {1.0};
  cfg.seeds = {0};
  const auto report = run_init_compare(cfg, data);
  EXPECT_EQ(report.rows.size(), 2u);
  EXPECT_NE(init_summary_csv(report, cfg).find("h,init,median_steps"), std::string::npos);

  cfg.eta = 1e308;
  for (const auto& r : run_init_compare(cfg, small_digits()).rows) EXPECT_LE(r.steps, cfg.max_epochs);
}

TEST(InitCompare, BayesPriorSharesRandomBiases) {
  const auto data = small_digits();
  const auto cfg = small_config();
  const auto ri = initial_network(cfg, data, 0.7, 4, Initializer::random);
  const auto bi = initial_network(cfg, data, 0.7, 4, Initializer::bayes);
  EXPECT_EQ(ri.bias(0), bi.bias(0));
  EXPECT_FALSE(ri == bi);
}

TEST(InitCompare, SummaryNotesDefaultFiveLayerTopology) {
  InitCompareConfig cfg;
  cfg.layers = {315, 200, 100, 50, 10};
  EXPECT_NE(init_summary_csv({}, cfg).find("# note:"), std::string::npos);
  EXPECT_EQ(init_summary_csv({}, small_config()).find("# note:"), std::string::npos);
}

TEST(InitCompare, RejectsBadConfig) {
  auto cfg = small_config();
  cfg.h_grid.clear();
  EXPECT_THROW(run_init_compare(cfg, small_digits()), InvalidArgument);
  cfg = small_config();
  cfg.layers = {50, 10};
  EXPECT_THROW(run_init_compare(cfg, small_digits()), DimensionError);
}

TEST(SegmentCompare, BlankSeparatedPairsAreAllCorrect) {
  const auto ds = data::stratified_subset(data::load_dataset(testutil::data_dir() + "/mnist-sample"), 30);
  std::vector<data::TouchingPair> corpus;
  for (std::size_t k = 0; k + 1 < ds.items.size(); k += 2) {
    const auto a = ds.items[k].image.crop_columns();
    const auto b = ds.items[k + 1].image.crop_columns();
    GlyphImage gap(a.rows(), 3);
    const auto left = data::synth_touching(a, gap, 0).image;
    auto pair = data::synth_touching(left, b, 0);
    pair.lo = pair.hi = a.cols() + 1;
    corpus.push_back(pair);
  }
  const auto report = run_segment_compare(corpus);
  for (const auto& acc : report.accuracy) {
    EXPECT_EQ(acc.total, corpus.size());
    EXPECT_EQ(acc.correct, corpus.size()) << to_string(acc.method);
  }
}

TEST(SegmentCompare, SingleSampleAndToleranceBoundary) {
  const auto img = testutil::art({"###.###", "#.#.#.#", "###.###"});
  data::TouchingPair pair{img, 2, 2, 0, 1};
  auto report = run_segment_compare({pair});
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].cut, 3);
  EXPECT_TRUE(report.rows[0].correct);
  pair.lo = pair.hi = 1;
  report = run_segment_compare({pair});
  EXPECT_FALSE(report.rows[0].correct);
  EXPECT_EQ(segment_summary_csv(report).substr(0, 30), "method,correct,total,accuracy\n");
}

TEST(SegmentCompare, DirectoryWithUnreadableSample) {
  const auto dir = testutil::scratch_dir("segcmp");
  data::save_pbm((dir / "ok.pbm").string(), testutil::art({"##.##", "##.##"}));
  std::ofstream(dir / "bad.pbm") << "P9 nonsense";
  std::ofstream(dir / "manifest.csv") << "file,lo,hi,left_label,right_label\nok.pbm,2,2,0,0\nbad.pbm,1,1,0,0\n";
  const auto report = run_segment_compare(dir.string());
  ASSERT_EQ(report.rows.size(), 6u);
  EXPECT_TRUE(report.rows[0].correct);
  EXPECT_EQ(report.rows[3].cut, -1);
  EXPECT_NE(report.rows[3].status, "ok");
  EXPECT_EQ(report.accuracy[0].total, 2u);
  EXPECT_EQ(report.accuracy[0].correct, 1u);
  const auto csv = segment_rows_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "file,method,cut,lo,hi,correct,status");
  EXPECT_EQ(csv, segment_rows_csv(run_segment_compare(dir.string())));
}
