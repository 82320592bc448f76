#include "ocrkit/data/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ocrkit/data/pnm.hpp"
#include "ocrkit/random.hpp"

namespace ocrkit::data {
namespace fs = std::filesystem;

TouchingPair synth_touching(const GlyphImage& a, const GlyphImage& b, Eigen::Index overlap) {
  if (overlap < 0) throw InvalidArgument("overlap must be non-negative");
  if (overlap >= std::min(a.cols(), b.cols()))
    throw InvalidArgument("overlap " + std::to_string(overlap) + " must be narrower than both glyphs");
  const auto rows = std::max(a.rows(), b.rows());
  const auto start = a.cols() - overlap;
  GlyphImage::Pixels px = GlyphImage::Pixels::Zero(rows, start + b.cols());
  px.block(rows - a.rows(), 0, a.rows(), a.cols()) = a.pixels();
  px.block(rows - b.rows(), start, b.rows(), b.cols()) =
      px.block(rows - b.rows(), start, b.rows(), b.cols()).cwiseMax(b.pixels());
  TouchingPair out{GlyphImage(std::move(px)), start, a.cols(), -1, -1};
  const auto width = out.image.cols();
  out.lo = std::clamp<Eigen::Index>(out.lo, 1, width - 2);
  out.hi = std::clamp<Eigen::Index>(out.hi, 1, width - 2);
  return out;
}

std::vector<TouchingPair> make_touching_corpus(const GlyphDataset& sources, const CorpusSpec& spec) {
  if (sources.items.empty()) throw InvalidArgument("corpus needs source glyphs");
  if (spec.overlap_min < 0 || spec.overlap_max < spec.overlap_min) throw InvalidArgument("bad overlap range");
  Rng rng(spec.seed);
  std::vector<TouchingPair> corpus;
  corpus.reserve(spec.pairs);
  const auto span = static_cast<std::uint64_t>(spec.overlap_max - spec.overlap_min + 1);
  while (corpus.size() < spec.pairs) {
    const auto& left = sources.items[rng.below(sources.items.size())];
    const auto& right = sources.items[rng.below(sources.items.size())];
    auto overlap = spec.overlap_min + static_cast<Eigen::Index>(rng.below(span));
    const auto a = spec.crop ? left.image.crop_columns() : left.image;
    const auto b = spec.crop ? right.image.crop_columns() : right.image;
    if (a.ink() == 0 || b.ink() == 0) continue;
    overlap = std::min(overlap, std::min(a.cols(), b.cols()) - 1);
    if (a.cols() + b.cols() - overlap < 3) continue;
    auto pair = synth_touching(a, b, overlap);
    pair.left_label = left.label;
    pair.right_label = right.label;
    corpus.push_back(std::move(pair));
  }
  return corpus;
}

void write_corpus(const std::string& dir, const std::vector<TouchingPair>& corpus) {
  fs::create_directories(dir);
  std::ofstream manifest(fs::path(dir) / "manifest.csv", std::ios::binary);
  if (!manifest) throw IoError("cannot write manifest in '" + dir + "'");
  manifest << "file,lo,hi,left_label,right_label\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "pair_%04zu.pbm", i);
    save_pbm((fs::path(dir) / name).string(), corpus[i].image);
    manifest << name << ',' << corpus[i].lo << ',' << corpus[i].hi << ',' << corpus[i].left_label << ','
             << corpus[i].right_label << '\n';
  }
}

std::vector<ManifestRow> read_manifest(const std::string& dir) {
  const auto path = fs::path(dir) / "manifest.csv";
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::vector<ManifestRow> rows;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const auto start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("file,", 0) == 0) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    ManifestRow row;
    if (!(fields >> row.file >> row.lo >> row.hi >> row.left_label >> row.right_label))
      throw ParseError("manifest rows are 'file,lo,hi,left_label,right_label'", start);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ocrkit::data
