#pragma once

// Per-column features of a binarized pattern used to score cut positions.

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "ocrkit/glyph.hpp"

namespace ocrkit::fuzzy {

/// How the flanking peaks l_i, r_i of the peak-to-valley function are found.
enum class PeakMode {
  global,  ///< maximum of V over each side, leftmost on ties
  local,   ///< nearest local maximum reached by climbing away from i
};

/// Ink count per column.
Eigen::VectorXi vertical_projection(const GlyphImage& img);

/// g(i) = (V(l_i) - 2 V(i) + V(r_i)) / (V(i) + 1); empty for boundary columns.
std::optional<double> peak_to_valley(const Eigen::VectorXi& v, Eigen::Index i, PeakMode mode = PeakMode::global);

/// h(i) = (V(i-1) - 2 V(i) + V(i+1)) / V(i); empty for boundary or blank columns.
std::optional<double> second_difference(const Eigen::VectorXi& v, Eigen::Index i);

/// Min-max normalizes the present entries to [0, 1] and returns 1 - value.
/// A constant input normalizes to 0, so its complement is 1. Throws when no
/// entry is present.
std::vector<std::optional<double>> normalize_complement(std::span<const std::optional<double>> values);

/// Number of adjacent unequal pixel pairs scanning column i top to bottom.
int crossing_count(const GlyphImage& img, Eigen::Index i);

/// |c - i| / c with c = (n - 1) / 2, clamped to [0, 1]. Requires n >= 2.
double center_distance(Eigen::Index i, Eigen::Index n);

struct ColumnFeatures {
  Eigen::VectorXi v;
  Eigen::VectorXd d;
  Eigen::VectorXi f;
  std::vector<std::optional<double>> g;    ///< raw peak-to-valley
  std::vector<std::optional<double>> h;    ///< raw second difference
  std::vector<std::optional<double>> g_t;  ///< 1 - normalized g, over scored columns
  std::vector<std::optional<double>> h_t;  ///< 1 - normalized h, over scored columns
  std::vector<bool> blank;                 ///< V(i) == 0
  std::vector<bool> scored;                ///< interior and not blank

  Eigen::Index size() const { return v.size(); }
};

/// All features for every column. Requires at least 3 columns.
ColumnFeatures column_features(const GlyphImage& img, PeakMode mode = PeakMode::global);

}  // namespace ocrkit::fuzzy
