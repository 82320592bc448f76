#include "ocrkit/data/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ocrkit/data/encode.hpp"
#include "ocrkit/data/idx.hpp"
#include "ocrkit/data/pnm.hpp"

namespace ocrkit::data {
namespace fs = std::filesystem;

namespace {

void record_sizes(GlyphDataset& ds) {
  if (ds.items.empty()) return;
  ds.native_rows = ds.items.front().image.rows();
  ds.native_cols = ds.items.front().image.cols();
  for (const auto& it : ds.items) {
    if (it.image.rows() != ds.native_rows || it.image.cols() != ds.native_cols) {
      ds.native_rows = ds.native_cols = 0;
      return;
    }
  }
}

}  // namespace

GlyphDataset load_idx_dataset(const std::string& images_path, const std::string& labels_path) {
  const auto images = load_idx_images(images_path);
  const auto labels = load_idx_labels(labels_path);
  if (labels.size() != images.count)
    throw DimensionError("image count " + std::to_string(images.count) + " differs from label count " +
                         std::to_string(labels.size()));
  GlyphDataset ds;
  ds.class_count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  for (std::size_t i = 0; i < images.count; ++i) ds.items.push_back({images.glyph(i), labels[i], ds.class_count});
  record_sizes(ds);
  return ds;
}

GlyphDataset load_pbm_dataset(const std::string& dir) {
  const auto manifest = fs::path(dir) / "labels.csv";
  std::ifstream in(manifest);
  if (!in) throw IoError("cannot open '" + manifest.string() + "'");
  GlyphDataset ds;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const auto start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == "file,label") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("labels.csv rows are 'file,label'", start);
    int label = 0;
    try {
      label = std::stoi(line.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw ParseError("labels.csv has a non-integer label", start);
    }
    if (label < 0) throw ParseError("labels.csv has a negative label", start);
    ds.items.push_back({load_pnm((fs::path(dir) / line.substr(0, comma)).string()), label, 0});
    ds.class_count = std::max(ds.class_count, label + 1);
  }
  for (auto& it : ds.items) it.class_count = ds.class_count;
  record_sizes(ds);
  return ds;
}

GlyphDataset load_dataset(const std::string& dir) {
  const fs::path root(dir);
  if (fs::exists(root / "train-images-idx3-ubyte"))
    return load_idx_dataset((root / "train-images-idx3-ubyte").string(), (root / "train-labels-idx1-ubyte").string());
  if (fs::exists(root / "labels.csv")) return load_pbm_dataset(dir);
  throw IoError("'" + dir + "' holds neither an IDX pair nor labels.csv");
}

GlyphDataset stratified_subset(const GlyphDataset& data, std::size_t n) {
  std::vector<std::vector<std::size_t>> by_label(static_cast<std::size_t>(std::max(data.class_count, 1)));
  for (std::size_t i = 0; i < data.items.size(); ++i) by_label[static_cast<std::size_t>(data.items[i].label)].push_back(i);
  std::vector<std::size_t> cursor(by_label.size(), 0);
  std::vector<std::size_t> chosen;
  n = std::min(n, data.items.size());
  while (chosen.size() < n) {
    for (std::size_t l = 0; l < by_label.size() && chosen.size() < n; ++l)
      if (cursor[l] < by_label[l].size()) chosen.push_back(by_label[l][cursor[l]++]);
  }
  std::sort(chosen.begin(), chosen.end());
  GlyphDataset out;
  out.class_count = data.class_count;
  out.native_rows = data.native_rows;
  out.native_cols = data.native_cols;
  for (auto i : chosen) out.items.push_back(data.items[i]);
  return out;
}

ann::TrainingSet<double> to_training_set(const GlyphDataset& data, const EncodingSpec& spec) {
  ann::TrainingSet<double> set;
  set.items.reserve(data.items.size());
  for (const auto& it : data.items)
    set.items.push_back({encode_glyph(it.image, spec.rows, spec.cols, spec.activation),
                         one_hot(it.label, data.class_count, spec.activation), it.label});
  return set;
}

}  // namespace ocrkit::data
