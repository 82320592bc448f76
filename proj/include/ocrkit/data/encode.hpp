#pragma once

#include <Eigen/Dense>

#include "ocrkit/ann/mlp.hpp"
#include "ocrkit/glyph.hpp"

namespace ocrkit::data {

/// Nearest-neighbour resample to rows x cols, flattened row-major. Ink maps
/// to +1; white maps to -1 for tanh networks and 0 for sigmoid networks.
Eigen::VectorXd encode_glyph(const GlyphImage& img, Eigen::Index rows, Eigen::Index cols,
                             ann::Activation act = ann::Activation::tanh);

/// Soft one-hot target: 0.9 at `label`; elsewhere -0.9 (tanh) or 0.1 (sigmoid).
Eigen::VectorXd one_hot(int label, int class_count, ann::Activation act);

/// Index of the largest entry (lowest index on ties).
int decode_label(const Eigen::VectorXd& output);

}  // namespace ocrkit::data
