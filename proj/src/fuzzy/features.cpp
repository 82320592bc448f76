#include "ocrkit/fuzzy/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ocrkit::fuzzy {
namespace {

// Leftmost maximum over [first, last).
int max_over(const Eigen::VectorXi& v, Eigen::Index first, Eigen::Index last) {
  int best = v[first];
  for (Eigen::Index j = first + 1; j < last; ++j) best = std::max(best, v[j]);
  return best;
}

// Climb from `start` in direction `step` while the profile does not decrease.
int climb(const Eigen::VectorXi& v, Eigen::Index start, Eigen::Index step) {
  Eigen::Index j = start;
  while (j + step >= 0 && j + step < v.size() && v[j + step] >= v[j]) j += step;
  return v[j];
}

}  // namespace

Eigen::VectorXi vertical_projection(const GlyphImage& img) {
  return img.pixels().cast<int>().colwise().sum().transpose();
}

std::optional<double> peak_to_valley(const Eigen::VectorXi& v, Eigen::Index i, PeakMode mode) {
  const auto n = v.size();
  if (i <= 0 || i >= n - 1) return std::nullopt;
  const int left = mode == PeakMode::global ? max_over(v, 0, i) : climb(v, i - 1, -1);
  const int right = mode == PeakMode::global ? max_over(v, i + 1, n) : climb(v, i + 1, +1);
  return static_cast<double>(left - 2 * v[i] + right) / static_cast<double>(v[i] + 1);
}

std::optional<double> second_difference(const Eigen::VectorXi& v, Eigen::Index i) {
  if (i <= 0 || i >= v.size() - 1 || v[i] == 0) return std::nullopt;
  return static_cast<double>(v[i - 1] - 2 * v[i] + v[i + 1]) / static_cast<double>(v[i]);
}

std::vector<std::optional<double>> normalize_complement(std::span<const std::optional<double>> values) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& x : values) {
    if (!x) continue;
    lo = std::min(lo, *x);
    hi = std::max(hi, *x);
  }
  if (lo > hi) throw InvalidArgument("no interior columns to normalize");
  std::vector<std::optional<double>> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    const double normalized = hi > lo ? (*values[i] - lo) / (hi - lo) : 0.0;
    out[i] = 1.0 - normalized;
  }
  return out;
}

int crossing_count(const GlyphImage& img, Eigen::Index i) {
  int count = 0;
  for (Eigen::Index r = 1; r < img.rows(); ++r) count += img(r, i) != img(r - 1, i);
  return count;
}

double center_distance(Eigen::Index i, Eigen::Index n) {
  if (n < 2) throw InvalidArgument("center distance needs at least two columns");
  const double c = static_cast<double>(n - 1) / 2.0;
  return std::clamp(std::abs(c - static_cast<double>(i)) / c, 0.0, 1.0);
}

ColumnFeatures column_features(const GlyphImage& img, PeakMode mode) {
  const auto n = img.cols();
  if (n < 3) throw InvalidArgument("scoring needs at least 3 columns, got " + std::to_string(n));
  ColumnFeatures out;
  out.v = vertical_projection(img);
  out.d.resize(n);
  out.f.resize(n);
  out.g.resize(n);
  out.h.resize(n);
  out.blank.resize(n);
  out.scored.resize(n);
  std::vector<std::optional<double>> g_scored(n), h_scored(n);
  bool any = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.d[i] = center_distance(i, n);
    out.f[i] = crossing_count(img, i);
    out.g[i] = peak_to_valley(out.v, i, mode);
    out.h[i] = second_difference(out.v, i);
    out.blank[i] = out.v[i] == 0;
    out.scored[i] = i > 0 && i < n - 1 && !out.blank[i];
    if (out.scored[i]) {
      g_scored[i] = out.g[i];
      h_scored[i] = out.h[i];
      any = true;
    }
  }
  if (any) {
    out.g_t = normalize_complement(g_scored);
    out.h_t = normalize_complement(h_scored);
  } else {
    out.g_t.assign(n, std::nullopt);
    out.h_t.assign(n, std::nullopt);
  }
  return out;
}

}  // namespace ocrkit::fuzzy
