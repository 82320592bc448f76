#include <gtest/gtest.h>

#include <sstream>

#include "ocrkit/fuzzy/segment.hpp"
#include "oracles/oracles.hpp"
#include "test_util.hpp"

using namespace ocrkit;
using namespace ocrkit::fuzzy;
using testutil::art;

namespace {

Eigen::VectorXi vi(std::initializer_list<int> xs) {
  Eigen::VectorXi v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (int x : xs) v[k++] = x;
  return v;
}

CutScore scores_of(std::vector<double> rho, std::vector<bool> valid = {}) {
  CutScore s;
  s.rho = Eigen::Map<Eigen::VectorXd>(rho.data(), static_cast<Eigen::Index>(rho.size()));
  s.valid = valid.empty() ? std::vector<bool>(rho.size(), true) : valid;
  return s;
}

}  // namespace

TEST(Features, VerticalProjection) {
  EXPECT_TRUE(vertical_projection(GlyphImage(4, 5)).isZero());
  EXPECT_EQ(vertical_projection(art({".#.", ".#.", ".#."})), vi({0, 3, 0}));
  Rng rng(1);
  const auto img = testutil::random_glyph(rng, 10, 10);
  const auto v = vertical_projection(img);
  const GlyphImage t = img.transposed();
  for (Eigen::Index c = 0; c < 10; ++c) {
    int row_sum = 0;
    for (Eigen::Index k = 0; k < 10; ++k) row_sum += t(c, k);
    EXPECT_EQ(v[c], row_sum);
  }
}

TEST(Features, PeakToValley) {
  EXPECT_DOUBLE_EQ(*peak_to_valley(vi({0, 3, 1, 3, 0}), 2), 2.0);
  EXPECT_DOUBLE_EQ(*peak_to_valley(vi({5, 0, 5}), 1), 10.0);
  for (Eigen::Index i = 1; i < 4; ++i) EXPECT_DOUBLE_EQ(*peak_to_valley(vi({4, 4, 4, 4, 4}), i), 0.0);
  EXPECT_FALSE(peak_to_valley(vi({1, 2, 3}), 0));
  EXPECT_FALSE(peak_to_valley(vi({1, 2, 3}), 2));
}

TEST(Features, PeakToValleyLocalMode) {
  const auto v = vi({9, 2, 5, 1, 4, 3, 8});
  EXPECT_DOUBLE_EQ(*peak_to_valley(v, 3, PeakMode::global), (9 - 2 + 8) / 2.0);
  EXPECT_DOUBLE_EQ(*peak_to_valley(v, 3, PeakMode::local), (5 - 2 + 4) / 2.0);
}

TEST(Features, SecondDifference) {
  EXPECT_DOUBLE_EQ(*second_difference(vi({3, 1, 3}), 1), 4.0);
  EXPECT_DOUBLE_EQ(*second_difference(vi({2, 2, 2, 2}), 2), 0.0);
  EXPECT_FALSE(second_difference(vi({2, 0, 2}), 1));
  EXPECT_FALSE(second_difference(vi({2, 1, 2}), 0));
}

TEST(Features, NormalizeComplement) {
  const std::vector<std::optional<double>> x{0.0, 2.0, 4.0};
  const auto y = normalize_complement(x);
  EXPECT_DOUBLE_EQ(*y[0], 1.0);
  EXPECT_DOUBLE_EQ(*y[1], 0.5);
  EXPECT_DOUBLE_EQ(*y[2], 0.0);

  const std::vector<std::optional<double>> flat{3.0, std::nullopt, 3.0};
  const auto z = normalize_complement(flat);
  EXPECT_EQ(*z[0], 1.0);
  EXPECT_FALSE(z[1]);
  EXPECT_EQ(*z[2], 1.0);

  const std::vector<std::optional<double>> none{std::nullopt, std::nullopt};
  EXPECT_THROW(normalize_complement(none), InvalidArgument);

  Rng rng(4);
  std::vector<std::optional<double>> r;
  for (int k = 0; k < 30; ++k) r.push_back(rng.uniform01() < 0.2 ? std::nullopt : std::optional(rng.uniform(-5, 5)));
  std::vector<double> present;
  for (const auto& x : r)
    if (x) present.push_back(*x);
  std::sort(present.begin(), present.end());
  const auto out = normalize_complement(r);
  for (std::size_t k = 0; k < r.size(); ++k) {
    ASSERT_EQ(static_cast<bool>(out[k]), static_cast<bool>(r[k]));
    if (r[k]) EXPECT_NEAR(*out[k], 1 - (*r[k] - present.front()) / (present.back() - present.front()), 1e-15);
  }
}

TEST(Features, CrossingCount) {
  const auto img = art({"#.#", "#.#", "#..", "..#", "#.#"});
  EXPECT_EQ(crossing_count(img, 0), 2);
  EXPECT_EQ(crossing_count(img, 1), 0);
  EXPECT_EQ(crossing_count(art({".", "#", "#", ".", "#"}), 0), 3);
  EXPECT_EQ(crossing_count(art({"#", "#"}), 0), 0);
}

TEST(Features, CenterDistance) {
  EXPECT_DOUBLE_EQ(center_distance(2, 5), 0.0);
  EXPECT_DOUBLE_EQ(center_distance(0, 5), 1.0);
  EXPECT_DOUBLE_EQ(center_distance(3, 5), 0.5);
  EXPECT_DOUBLE_EQ(center_distance(1, 4), 1.0 / 3.0);
  EXPECT_THROW(center_distance(0, 1), InvalidArgument);
}

TEST(Features, ColumnFeaturesFlags) {
  const auto f = column_features(art({"##.##", "##.##"}));
  EXPECT_EQ(f.scored, (std::vector<bool>{false, true, false, true, false}));
  EXPECT_EQ(f.blank, (std::vector<bool>{false, false, true, false, false}));
  EXPECT_TRUE(f.g[2]);
  EXPECT_FALSE(f.h[2]);
  EXPECT_FALSE(f.g_t[2]);
  EXPECT_THROW(column_features(GlyphImage(3, 2)), InvalidArgument);
}

TEST(Mamdani, DefaultsValidate) {
  FuzzyConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_NO_THROW(validate_rules(cfg.rules()));
  auto rules = cfg.rules();
  rules[0].then = Term::high;
  EXPECT_THROW(validate_rules(rules), InvalidArgument);
  rules.pop_back();
  EXPECT_THROW(validate_rules(rules), InvalidArgument);
}

TEST(Mamdani, CoverageIsChecked) {
  FuzzyPartition p{"x", 0, 1, {{Term::low, {0, 0, 0.2, 0.3}}, {Term::high, {0.6, 0.8, 1, 1}}}};
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_THROW((Trapezoid{0.5, 0.2, 0.3, 0.4}.validate("x")), InvalidArgument);
}

TEST(Mamdani, RuleOneFullyActiveGivesLowScore) {
  const auto parts = default_partitions(10);
  const ColumnInputs in{0.0, 0.0, 0.0, 0.0};
  const auto s = rule_strengths(in, parts, default_rules());
  EXPECT_EQ(s[0], 1.0);
  EXPECT_EQ(s[8], 0.0);
  EXPECT_LT(infer(in, parts, default_rules()), 0.4);
}

TEST(Mamdani, NothingFiresGivesHighCentroid) {
  const auto parts = default_partitions(10);
  const ColumnInputs in{1.0, 0.0, 1.0, 1.0};
  const auto s = rule_strengths(in, parts, default_rules());
  for (int r = 0; r < 8; ++r) EXPECT_EQ(s[static_cast<std::size_t>(r)], 0.0);
  EXPECT_EQ(s[8], 1.0);
  const double rho = infer(in, parts, default_rules());
  EXPECT_GT(rho, 0.6);
  EXPECT_NEAR(rho, 0.8444444, 1e-3);
  EXPECT_NEAR(rho, oracle::brute_rho(1.0, 0.0, 1.0, 1.0), 1e-3);
}

TEST(Mamdani, EmptyAggregateScoresOne) {
  auto parts = default_partitions(10);
  parts.rho.sets = {{Term::low, {2, 2, 3, 3}}, {Term::medium, {2, 2, 3, 3}}, {Term::high, {2, 2, 3, 3}}};
  EXPECT_EQ(infer({0.5, 1, 0.5, 0.5}, parts, default_rules()), 1.0);
}

TEST(Mamdani, MatchesBruteForceOnRandomInputs) {
  Rng rng(2);
  const auto parts = default_partitions(28);
  for (int k = 0; k < 500; ++k) {
    const ColumnInputs in{rng.uniform01(), static_cast<double>(rng.below(9)), rng.uniform01(), rng.uniform01()};
    EXPECT_NEAR(infer(in, parts, default_rules()), oracle::brute_rho(in.d, in.f, in.g_t, in.h_t), 1e-3);
  }
}

TEST(Mamdani, RuleSevenVariant) {
  const auto parts = default_partitions(10);
  const ColumnInputs in{0.3, 0.0, 0.95, 0.0};
  const auto tilde = rule_strengths(in, parts, default_rules(Rule7G::tilde));
  const auto bar = rule_strengths(in, parts, default_rules(Rule7G::bar));
  EXPECT_GT(tilde[6], 0.0);
  EXPECT_EQ(bar[6], 0.0);
}

TEST(Mamdani, HighCrossingCountNeverBeatsLow) {
  Rng rng(3);
  const auto parts = default_partitions(28);
  const auto rules = default_rules();
  for (int k = 0; k < 500; ++k) {
    const double d = rng.uniform01(), g = rng.uniform01(), h = rng.uniform01();
    const double f1 = static_cast<double>(rng.below(3));
    const double f2 = 4.0 + static_cast<double>(rng.below(6));
    EXPECT_GE(infer({d, f2, g, h}, parts, rules) + 1e-12, infer({d, f1, g, h}, parts, rules))
        << "d=" << d << " g=" << g << " h=" << h << " f=" << f1 << "->" << f2;
  }
}

// Inside the Low/High overlap of f a Medium consequent joins the sum and can
// pull the centroid down.
TEST(Mamdani, CrossingOverlapCanLowerTheScore) {
  const auto parts = default_partitions(28);
  const double d = 0.2964, g = 0.6927, h = 0.5182;
  const double at2 = infer({d, 2.0, g, h}, parts, default_rules());
  const double at3 = infer({d, 3.0, g, h}, parts, default_rules());
  EXPECT_LT(at3, at2);
  EXPECT_NEAR(at2, oracle::brute_rho(d, 2.0, g, h), 1e-3);
  EXPECT_NEAR(at3, oracle::brute_rho(d, 3.0, g, h), 1e-3);
}

TEST(Score, PipelineMatchesBruteForce) {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    const auto img = testutil::random_glyph(rng, 3 + static_cast<Eigen::Index>(rng.below(20)),
                                            3 + static_cast<Eigen::Index>(rng.below(25)), rng.uniform(0.1, 0.7));
    const auto s = score_columns(img);
    const auto ref = oracle::brute_column_rho(img.pixels(), 2000);
    for (Eigen::Index i = 0; i < img.cols(); ++i) {
      ASSERT_EQ(s.valid[static_cast<std::size_t>(i)], static_cast<bool>(ref[static_cast<std::size_t>(i)]));
      if (s.valid[static_cast<std::size_t>(i)]) EXPECT_NEAR(s.rho[i], *ref[static_cast<std::size_t>(i)], 1e-3);
      EXPECT_GE(s.rho[i], 0.0);
      EXPECT_LE(s.rho[i], 1.0);
    }
  }
}

TEST(Score, MirrorSymmetry) {
  Rng rng(6);
  for (auto mode : {PeakMode::global, PeakMode::local})
    for (int k = 0; k < 50; ++k) {
      const auto img = testutil::random_glyph(rng, 12, 5 + static_cast<Eigen::Index>(rng.below(20)));
      FuzzyConfig cfg;
      cfg.peak_mode = mode;
      const auto a = score_columns(img, cfg);
      const auto b = score_columns(img.mirrored(), cfg);
      const auto n = img.cols();
      for (Eigen::Index i = 0; i < n; ++i) {
        EXPECT_EQ(a.valid[static_cast<std::size_t>(i)], b.valid[static_cast<std::size_t>(n - 1 - i)]);
        EXPECT_NEAR(a.rho[i], b.rho[n - 1 - i], 1e-12);
      }
    }
}

TEST(Score, SymmetricImageHasSymmetricScores) {
  const auto img = art({"##..##", "#.##.#", "##..##"});
  const auto s = score_columns(img);
  for (Eigen::Index i = 0; i < 6; ++i) EXPECT_NEAR(s.rho[i], s.rho[5 - i], 1e-12);
}

TEST(SelectCut, Examples) {
  EXPECT_EQ(select_cut(scores_of({0.9, 0.2, 0.9})), 1);
  EXPECT_EQ(select_cut(scores_of({0.2, 0.9, 0.2})), 0);
  EXPECT_EQ(select_cut(scores_of({0.5, 0.3, 0.3, 0.3, 0.5, 0.9})), 2);
  EXPECT_EQ(select_cut(scores_of({0.5, 0.3, 0.3, 0.3, 0.5, 0.9}), TieBreak::index), 1);
  EXPECT_EQ(select_cut(scores_of({0.1, 0.5, 0.4}, {false, true, true})), 2);
  EXPECT_THROW(select_cut(scores_of({0.1, 0.2}, {false, false})), InvalidArgument);
}

TEST(SelectCut, MatchesScanOracle) {
  Rng rng(7);
  for (int k = 0; k < 300; ++k) {
    const auto n = 1 + rng.below(15);
    std::vector<double> rho(n);
    std::vector<bool> valid(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      rho[i] = static_cast<double>(rng.below(3)) / 4.0;
      valid[i] = rng.uniform01() < 0.8;
      any = any || valid[i];
    }
    if (!any) valid[0] = true;
    EXPECT_EQ(select_cut(scores_of(rho, valid)), oracle::scan_argmin(rho, valid));
  }
}

TEST(BlankGap, WidestRunWithInkOnBothSides) {
  EXPECT_EQ(blank_gap_cut(art({"#.#"})), 1);
  EXPECT_EQ(blank_gap_cut(art({"#..##.#"})), 2);
  EXPECT_EQ(blank_gap_cut(art({"#.#...#"})), 4);
  EXPECT_FALSE(blank_gap_cut(art({"..###.."})));
  EXPECT_FALSE(blank_gap_cut(GlyphImage(2, 5)));
}

TEST(FindCut, BlankColumnDominatesAnyConfig) {
  Rng rng(8);
  for (int k = 0; k < 300; ++k) {
    const auto n = 5 + static_cast<Eigen::Index>(rng.below(20));
    auto img = testutil::random_glyph(rng, 8, n, 0.5);
    for (Eigen::Index c = 0; c < n; ++c) img.set(rng.below(8), c, true);
    const auto j = 1 + static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n - 2)));
    for (Eigen::Index r = 0; r < 8; ++r) img.set(r, j, false);
    FuzzyConfig cfg;
    cfg.peak_mode = rng.uniform01() < 0.5 ? PeakMode::global : PeakMode::local;
    cfg.tie_break = rng.uniform01() < 0.5 ? TieBreak::center_then_index : TieBreak::index;
    const double shift = rng.uniform(-0.1, 0.1);
    cfg.partitions.d.sets[0].second = {0, 0, 0.15 + shift, 0.35 + shift};
    for (auto method : {CutMethod::fuzzy, CutMethod::g_only, CutMethod::h_only}) EXPECT_EQ(find_cut(img, method, cfg), j);
  }
}

TEST(Baseline, Examples) {
  const auto img = art({"#.#", "#.#", "#.#", "#.#", "#.#"});
  const auto dip = art({"#.#", "#.#", "###", "#.#", "#.#"});
  EXPECT_EQ(baseline_cut(dip, CutMethod::g_only), 1);
  EXPECT_EQ(baseline_cut(art({"#####", "#####"}), CutMethod::g_only), 2);
  EXPECT_EQ(baseline_cut(art({"######", "######"}), CutMethod::h_only), 2);
  EXPECT_EQ(baseline_cut(img, CutMethod::g_only), 1);
  EXPECT_THROW(baseline_cut(img, CutMethod::h_only), InvalidArgument);
  EXPECT_THROW(baseline_cut(img, CutMethod::fuzzy), InvalidArgument);
}

TEST(Baseline, MatchesScanOracle) {
  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const auto img = testutil::random_glyph(rng, 6, 3 + static_cast<Eigen::Index>(rng.below(15)), 0.6);
    const auto v = vertical_projection(img);
    for (auto method : {CutMethod::g_only, CutMethod::h_only}) {
      std::vector<double> neg(static_cast<std::size_t>(img.cols()), 0.0);
      std::vector<bool> ok(neg.size(), false);
      for (Eigen::Index i = 1; i + 1 < img.cols(); ++i) {
        const auto x = method == CutMethod::g_only ? peak_to_valley(v, i) : second_difference(v, i);
        if (x) neg[static_cast<std::size_t>(i)] = -*x, ok[static_cast<std::size_t>(i)] = true;
      }
      const auto expected = oracle::scan_argmin(neg, ok);
      if (expected < 0)
        EXPECT_THROW(baseline_cut(img, method), InvalidArgument);
      else
        EXPECT_EQ(baseline_cut(img, method), expected);
    }
  }
}

TEST(Segment, MaxCharsOneIsIdentity) {
  const auto img = art({"#.#.#", "#.#.#"});
  const auto pieces = segment(img, 1);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_TRUE(pieces[0] == img);
  EXPECT_THROW(segment(img, 0), InvalidArgument);
}

TEST(Segment, SplitsAtBlankSeparator) {
  const auto img = art({"###.##", "#.#.##", "###.##"});
  const auto pieces = segment(img, 2);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].cols(), 3);
  EXPECT_EQ(pieces[1].cols(), 3);
  EXPECT_EQ(pieces[0].rows(), 3);
}

TEST(Segment, PiecesTileTheImage) {
  Rng rng(10);
  for (int k = 0; k < 30; ++k) {
    const auto img = testutil::random_glyph(rng, 10, 10 + static_cast<Eigen::Index>(rng.below(30)), 0.5);
    const auto pieces = segment(img, 4);
    EXPECT_LE(pieces.size(), 4u);
    Eigen::Index at = 0;
    for (const auto& p : pieces) {
      EXPECT_EQ(p.rows(), img.rows());
      EXPECT_TRUE(p == img.columns(at, p.cols()));
      at += p.cols();
    }
    EXPECT_EQ(at, img.cols());
  }
}

TEST(Segment, RowsViaTranspose) {
  const auto img = art({"####", "#..#", "....", "####", "####"});
  const auto pieces = segment_rows(img, 2);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].rows(), 2);
  EXPECT_EQ(pieces[1].rows(), 3);
  EXPECT_EQ(pieces[0].cols(), 4);
}

TEST(Config, ParsesKeysAndOverrides) {
  std::istringstream in(
      "# comment\n"
      "d.low = 0 0 0.1 0.3   # trailing\n"
      "gh.high = 0.5 0.7 1 1\n"
      "f.high = 3 5 m m\n"
      "peak_mode = local\n"
      "tie_break = index\n"
      "rule7_g = bar\n"
      "resolution = 401\n");
  const auto cfg = parse_fuzzy_config(in);
  EXPECT_EQ(cfg.partitions.d.sets[0].second.c, 0.1);
  EXPECT_EQ(cfg.partitions.g_t.sets[2].second.a, 0.5);
  EXPECT_EQ(cfg.partitions.h_t.sets[2].second.a, 0.5);
  EXPECT_EQ(cfg.partitions.rho.sets[2].second.a, 0.5);
  EXPECT_TRUE(std::isinf(cfg.partitions.f.sets[1].second.d));
  EXPECT_EQ(cfg.peak_mode, PeakMode::local);
  EXPECT_EQ(cfg.tie_break, TieBreak::index);
  EXPECT_EQ(cfg.rule7, Rule7G::bar);
  EXPECT_EQ(cfg.resolution, 401);
}

TEST(Config, RoundTrip) {
  FuzzyConfig cfg;
  cfg.peak_mode = PeakMode::local;
  cfg.partitions.d.sets[1].second = {0.25, 0.4, 0.45, 0.6};
  std::stringstream ss;
  write_fuzzy_config(ss, cfg);
  const auto back = parse_fuzzy_config(ss);
  EXPECT_EQ(back.peak_mode, PeakMode::local);
  EXPECT_EQ(back.partitions.d.sets[1].second.c, 0.45);
  EXPECT_TRUE(std::isinf(back.partitions.f.sets[1].second.c));
}

TEST(Config, ErrorsCarryLineOffset) {
  const std::string text = "peak_mode = global\nbogus line\n";
  std::istringstream in(text);
  try {
    parse_fuzzy_config(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), text.find("bogus"));
  }
  for (const char* bad : {"d.low = 0 0 0.1\n", "x.low = 0 0 1 1\n", "f.medium = 0 1 2 3\n", "d.low = 0 0 a 1\n",
                          "tie_break = left\n", "d.low = 0.5 0.5 0.6 0.7\n", "resolution = 1\n"}) {
    std::istringstream s(bad);
    EXPECT_THROW(parse_fuzzy_config(s), Error) << bad;
  }
}
