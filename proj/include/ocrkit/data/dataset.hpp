#pragma once

// Labeled glyph collections and their conversion to training sets.
//
// A dataset directory holds either an MNIST-style IDX pair
// (train-images-idx3-ubyte, train-labels-idx1-ubyte) or PBM/PGM files listed
// in labels.csv with rows `file,label`.

#include <string>
#include <vector>

#include "ocrkit/ann/train.hpp"
#include "ocrkit/glyph.hpp"

namespace ocrkit::data {

struct LabeledGlyph {
  GlyphImage image;
  int label = 0;
  int class_count = 1;
};

struct GlyphDataset {
  std::vector<LabeledGlyph> items;
  int class_count = 0;
  Eigen::Index native_rows = 0;  ///< shared size of the images, 0 when mixed
  Eigen::Index native_cols = 0;
};

GlyphDataset load_idx_dataset(const std::string& images_path, const std::string& labels_path);
GlyphDataset load_pbm_dataset(const std::string& dir);
/// Picks the layout present in `dir`.
GlyphDataset load_dataset(const std::string& dir);

/// First `n` items taking labels in turn (0, 1, ..., 0, 1, ...) in file order,
/// skipping exhausted labels. Returned in file order.
GlyphDataset stratified_subset(const GlyphDataset& data, std::size_t n);

struct EncodingSpec {
  Eigen::Index rows = 21;
  Eigen::Index cols = 15;
  ann::Activation activation = ann::Activation::tanh;
};

ann::TrainingSet<double> to_training_set(const GlyphDataset& data, const EncodingSpec& spec);

}  // namespace ocrkit::data
