#pragma once

// Cut selection and splitting of touching-character patterns.
//
// A cut at column i splits a pattern into columns [0, i) and [i, n). Rows are
// handled by transposing.

#include <optional>
#include <vector>

#include "ocrkit/fuzzy/config.hpp"

namespace ocrkit::fuzzy {

struct CutScore {
  Eigen::VectorXd rho;      ///< 1 for columns that are not scored
  std::vector<bool> valid;  ///< interior, non-blank columns
  std::vector<bool> blank;
  ColumnFeatures features;
};

/// Features and rho for every column. Requires at least 3 columns.
CutScore score_columns(const GlyphImage& img, const FuzzyConfig& cfg = {});

/// Argmin of rho over valid columns. Throws when nothing is valid.
Eigen::Index select_cut(const CutScore& scores, TieBreak tie = TieBreak::center_then_index);

/// Middle of the widest run of white columns with ink on both sides
/// (leftmost among equally wide runs).
std::optional<Eigen::Index> blank_gap_cut(const GlyphImage& img);

enum class CutMethod { fuzzy, g_only, h_only };

const char* to_string(CutMethod m);

/// Argmax of the raw g (resp. h) over interior columns where it is defined.
Eigen::Index baseline_cut(const GlyphImage& img, CutMethod method, PeakMode mode = PeakMode::global,
                          TieBreak tie = TieBreak::center_then_index);

/// A blank gap when there is one, otherwise the method's choice.
Eigen::Index find_cut(const GlyphImage& img, CutMethod method, const FuzzyConfig& cfg = {});

/// Splits into at most `max_chars` pieces, repeatedly cutting the widest
/// piece that is at least 3 columns wide. Pieces keep the full row count and
/// come back left to right.
std::vector<GlyphImage> segment(const GlyphImage& img, int max_chars, const FuzzyConfig& cfg = {});

/// Same as segment, cutting between rows; pieces come back top to bottom.
std::vector<GlyphImage> segment_rows(const GlyphImage& img, int max_chars, const FuzzyConfig& cfg = {});

}  // namespace ocrkit::fuzzy
