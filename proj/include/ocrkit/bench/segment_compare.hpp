#pragma once

// Cut accuracy of the fuzzy segmenter against the g-only and h-only
// baselines on a touching-pair corpus.

#include <array>
#include <string>
#include <vector>

#include "ocrkit/data/synth.hpp"
#include "ocrkit/fuzzy/segment.hpp"

namespace ocrkit::bench {

struct SegmentRow {
  std::string file;
  fuzzy::CutMethod method = fuzzy::CutMethod::fuzzy;
  Eigen::Index cut = -1;  ///< -1 when the sample failed
  Eigen::Index lo = 0;
  Eigen::Index hi = 0;
  bool correct = false;
  std::string status = "ok";
};

struct MethodAccuracy {
  fuzzy::CutMethod method;
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy() const { return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0; }
};

struct SegmentReport {
  std::vector<SegmentRow> rows;               ///< per sample: fuzzy, g_only, h_only
  std::array<MethodAccuracy, 3> accuracy{};  ///< in that order
};

/// A cut is correct when it lies in [lo - tolerance, hi + tolerance].
inline constexpr Eigen::Index kCutTolerance = 1;

/// In-memory corpus, files named by position.
SegmentReport run_segment_compare(const std::vector<data::TouchingPair>& corpus, const fuzzy::FuzzyConfig& cfg = {});
/// Corpus directory with manifest.csv. Unreadable samples become failed rows.
SegmentReport run_segment_compare(const std::string& corpus_dir, const fuzzy::FuzzyConfig& cfg = {});

/// `file,method,cut,lo,hi,correct,status`.
std::string segment_rows_csv(const SegmentReport& report);
/// `method,correct,total,accuracy`.
std::string segment_summary_csv(const SegmentReport& report);

}  // namespace ocrkit::bench
