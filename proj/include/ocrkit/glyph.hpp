#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "ocrkit/error.hpp"

namespace ocrkit {

/// Binarized pattern: 1 = black ink, 0 = white. At least 1 x 1.
class GlyphImage {
 public:
  using Pixels = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

  GlyphImage(Eigen::Index rows, Eigen::Index cols) : pixels_(Pixels::Zero(check(rows), check(cols))) {}

  explicit GlyphImage(Pixels pixels) : pixels_(std::move(pixels)) {
    check(pixels_.rows());
    check(pixels_.cols());
    if ((pixels_.array() > 1).any()) throw InvalidArgument("glyph pixels must be 0 or 1");
  }

  Eigen::Index rows() const { return pixels_.rows(); }
  Eigen::Index cols() const { return pixels_.cols(); }
  const Pixels& pixels() const { return pixels_; }

  std::uint8_t operator()(Eigen::Index r, Eigen::Index c) const { return pixels_(r, c); }
  void set(Eigen::Index r, Eigen::Index c, bool ink) { pixels_(r, c) = ink ? 1 : 0; }

  Eigen::Index ink() const { return pixels_.cast<Eigen::Index>().sum(); }
  bool column_blank(Eigen::Index c) const { return (pixels_.col(c).array() == 0).all(); }

  /// Columns [first, first + count).
  GlyphImage columns(Eigen::Index first, Eigen::Index count) const {
    return GlyphImage(Pixels(pixels_.middleCols(first, count)));
  }
  GlyphImage transposed() const { return GlyphImage(Pixels(pixels_.transpose())); }
  GlyphImage mirrored() const { return GlyphImage(Pixels(pixels_.rowwise().reverse())); }

  /// Tightest column range containing ink; the whole image when blank.
  GlyphImage crop_columns() const;

  friend bool operator==(const GlyphImage& a, const GlyphImage& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.pixels_ == b.pixels_;
  }

 private:
  static Eigen::Index check(Eigen::Index n) {
    if (n < 1) throw InvalidArgument("glyph dimensions must be at least 1");
    return n;
  }

  Pixels pixels_;
};

inline GlyphImage GlyphImage::crop_columns() const {
  Eigen::Index first = 0;
  Eigen::Index last = cols() - 1;
  while (first < cols() && column_blank(first)) ++first;
  if (first == cols()) return *this;
  while (column_blank(last)) --last;
  return columns(first, last - first + 1);
}

}  // namespace ocrkit
