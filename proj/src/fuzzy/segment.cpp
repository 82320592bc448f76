#include "ocrkit/fuzzy/segment.hpp"

#include <limits>
#include <string>

namespace ocrkit::fuzzy {
namespace {

// True when column a should win over b given equal scores.
bool tie_prefers(Eigen::Index a, Eigen::Index b, Eigen::Index n, TieBreak tie) {
  if (tie == TieBreak::center_then_index) {
    const double da = center_distance(a, n);
    const double db = center_distance(b, n);
    if (da != db) return da < db;
  }
  return a < b;
}

}  // namespace

const char* to_string(CutMethod m) {
  switch (m) {
    case CutMethod::fuzzy: return "fuzzy";
    case CutMethod::g_only: return "g_only";
    case CutMethod::h_only: return "h_only";
  }
  return "?";
}

CutScore score_columns(const GlyphImage& img, const FuzzyConfig& cfg) {
  CutScore out;
  out.features = column_features(img, cfg.peak_mode);
  const auto n = img.cols();
  const auto parts = cfg.partitions_for(static_cast<int>(img.rows()));
  const auto rules = cfg.rules();
  out.rho = Eigen::VectorXd::Ones(n);
  out.valid = out.features.scored;
  out.blank = out.features.blank;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!out.valid[i]) continue;
    const ColumnInputs in{out.features.d[i], static_cast<double>(out.features.f[i]), *out.features.g_t[i],
                          *out.features.h_t[i]};
    out.rho[i] = infer(in, parts, rules, cfg.resolution);
  }
  return out;
}

Eigen::Index select_cut(const CutScore& scores, TieBreak tie) {
  const auto n = scores.rho.size();
  Eigen::Index best = -1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!scores.valid[i]) continue;
    if (best < 0 || scores.rho[i] < scores.rho[best] ||
        (scores.rho[i] == scores.rho[best] && tie_prefers(i, best, n, tie)))
      best = i;
  }
  if (best < 0) throw InvalidArgument("no valid cut column");
  return best;
}

std::optional<Eigen::Index> blank_gap_cut(const GlyphImage& img) {
  const auto n = img.cols();
  Eigen::Index first_ink = 0;
  while (first_ink < n && img.column_blank(first_ink)) ++first_ink;
  Eigen::Index best_start = -1, best_len = 0;
  for (Eigen::Index i = first_ink; i < n;) {
    if (!img.column_blank(i)) {
      ++i;
      continue;
    }
    Eigen::Index j = i;
    while (j < n && img.column_blank(j)) ++j;
    if (j < n && j - i > best_len) {
      best_start = i;
      best_len = j - i;
    }
    i = j;
  }
  if (best_start < 0) return std::nullopt;
  return best_start + best_len / 2;
}

Eigen::Index baseline_cut(const GlyphImage& img, CutMethod method, PeakMode mode, TieBreak tie) {
  if (method == CutMethod::fuzzy) throw InvalidArgument("baseline_cut takes g_only or h_only");
  const auto n = img.cols();
  if (n < 3) throw InvalidArgument("scoring needs at least 3 columns, got " + std::to_string(n));
  const auto v = vertical_projection(img);
  Eigen::Index best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    const auto value = method == CutMethod::g_only ? peak_to_valley(v, i, mode) : second_difference(v, i);
    if (!value) continue;
    if (best < 0 || *value > best_value || (*value == best_value && tie_prefers(i, best, n, tie))) {
      best = i;
      best_value = *value;
    }
  }
  if (best < 0) throw InvalidArgument("no valid cut column");
  return best;
}

Eigen::Index find_cut(const GlyphImage& img, CutMethod method, const FuzzyConfig& cfg) {
  if (const auto gap = blank_gap_cut(img)) return *gap;
  if (method == CutMethod::fuzzy) return select_cut(score_columns(img, cfg), cfg.tie_break);
  return baseline_cut(img, method, cfg.peak_mode, cfg.tie_break);
}

std::vector<GlyphImage> segment(const GlyphImage& img, int max_chars, const FuzzyConfig& cfg) {
  if (max_chars < 1) throw InvalidArgument("max_chars must be at least 1");
  std::vector<GlyphImage> pieces{img};
  std::vector<bool> splittable{img.cols() >= 3};
  while (static_cast<int>(pieces.size()) < max_chars) {
    std::ptrdiff_t widest = -1;
    for (std::size_t p = 0; p < pieces.size(); ++p)
      if (splittable[p] && (widest < 0 || pieces[p].cols() > pieces[static_cast<std::size_t>(widest)].cols()))
        widest = static_cast<std::ptrdiff_t>(p);
    if (widest < 0) break;
    const auto at = static_cast<std::size_t>(widest);
    const GlyphImage piece = pieces[at];
    Eigen::Index cut = 0;
    try {
      cut = find_cut(piece, CutMethod::fuzzy, cfg);
    } catch (const InvalidArgument&) {
      splittable[at] = false;
      continue;
    }
    GlyphImage left = piece.columns(0, cut);
    GlyphImage right = piece.columns(cut, piece.cols() - cut);
    const bool left_ok = left.cols() >= 3, right_ok = right.cols() >= 3;
    pieces[at] = std::move(left);
    splittable[at] = left_ok;
    pieces.insert(pieces.begin() + widest + 1, std::move(right));
    splittable.insert(splittable.begin() + widest + 1, right_ok);
  }
  return pieces;
}

std::vector<GlyphImage> segment_rows(const GlyphImage& img, int max_chars, const FuzzyConfig& cfg) {
  auto pieces = segment(img.transposed(), max_chars, cfg);
  for (auto& p : pieces) p = p.transposed();
  return pieces;
}

}  // namespace ocrkit::fuzzy
