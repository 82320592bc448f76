#include "ocrkit/data/encode.hpp"

#include <string>

namespace ocrkit::data {

Eigen::VectorXd encode_glyph(const GlyphImage& img, Eigen::Index rows, Eigen::Index cols, ann::Activation act) {
  if (rows <= 0 || cols <= 0) throw InvalidArgument("encoding grid must be positive");
  const double white = act == ann::Activation::tanh ? -1.0 : 0.0;
  Eigen::VectorXd out(rows * cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto src_r = r * img.rows() / rows;
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto src_c = c * img.cols() / cols;
      out[r * cols + c] = img(src_r, src_c) ? 1.0 : white;
    }
  }
  return out;
}

Eigen::VectorXd one_hot(int label, int class_count, ann::Activation act) {
  if (class_count <= 0 || label < 0 || label >= class_count)
    throw InvalidArgument("label " + std::to_string(label) + " outside 0.." + std::to_string(class_count - 1));
  Eigen::VectorXd out = Eigen::VectorXd::Constant(class_count, act == ann::Activation::tanh ? -0.9 : 0.1);
  out[label] = 0.9;
  return out;
}

int decode_label(const Eigen::VectorXd& output) {
  Eigen::Index best = 0;
  output.maxCoeff(&best);
  return static_cast<int>(best);
}

}  // namespace ocrkit::data
