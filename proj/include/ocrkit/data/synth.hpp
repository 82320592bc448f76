#pragma once

// Synthetic touching-character pairs with known cut ranges, and the corpus
// directory layout: one PBM per pair plus manifest.csv with rows
// `file,lo,hi,left_label,right_label`.

#include <cstdint>
#include <string>
#include <vector>

#include "ocrkit/data/dataset.hpp"

namespace ocrkit::data {

struct TouchingPair {
  GlyphImage image;
  Eigen::Index lo = 0;  ///< inclusive range of acceptable cut columns
  Eigen::Index hi = 0;
  int left_label = -1;
  int right_label = -1;
};

/// Places b so that it starts at column width(a) - overlap and ORs the ink.
/// The shorter glyph is padded with white rows at the top (bottom-aligned).
/// The cut range [width(a) - overlap, width(a)] is clipped to interior columns.
TouchingPair synth_touching(const GlyphImage& a, const GlyphImage& b, Eigen::Index overlap);

struct CorpusSpec {
  std::size_t pairs = 100;
  Eigen::Index overlap_min = 0;
  Eigen::Index overlap_max = 2;
  std::uint64_t seed = 7;
  /// Trim white side columns off each source glyph before composing.
  bool crop = true;
};

/// Draws glyph pairs and overlaps from `sources`. Deterministic in spec.seed.
/// Overlaps that do not fit a drawn pair are reduced to the largest that does.
std::vector<TouchingPair> make_touching_corpus(const GlyphDataset& sources, const CorpusSpec& spec);

struct ManifestRow {
  std::string file;
  Eigen::Index lo = 0;
  Eigen::Index hi = 0;
  int left_label = -1;
  int right_label = -1;
};

/// Writes pair_0000.pbm ... and manifest.csv into `dir` (created if missing).
void write_corpus(const std::string& dir, const std::vector<TouchingPair>& corpus);
std::vector<ManifestRow> read_manifest(const std::string& dir);

}  // namespace ocrkit::data
