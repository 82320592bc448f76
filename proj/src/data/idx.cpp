#include "ocrkit/data/idx.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>

namespace ocrkit::data {
namespace {

std::uint32_t read_be32(const std::vector<std::uint8_t>& bytes, std::size_t offset) {
  if (offset + 4 > bytes.size()) throw ParseError("truncated IDX header", offset);
  return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void expect_magic(const std::vector<std::uint8_t>& bytes, std::uint32_t want) {
  const auto magic = read_be32(bytes, 0);
  if (magic != want) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "IDX magic mismatch: expected 0x%08x, found 0x%08x", want, magic);
    throw ParseError(buf, 0);
  }
}

}  // namespace

GlyphImage IdxImages::glyph(std::size_t i, std::uint8_t threshold) const {
  if (i >= count) throw InvalidArgument("IDX image index out of range");
  GlyphImage g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const auto* base = pixels.data() + i * rows * cols;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      g.set(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c), base[r * cols + c] >= threshold);
  return g;
}

std::vector<GlyphImage> IdxImages::glyphs(std::uint8_t threshold) const {
  std::vector<GlyphImage> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(glyph(i, threshold));
  return out;
}

IdxImages parse_idx_images(const std::vector<std::uint8_t>& bytes) {
  expect_magic(bytes, kIdxImageMagic);
  IdxImages out;
  out.count = read_be32(bytes, 4);
  out.rows = read_be32(bytes, 8);
  out.cols = read_be32(bytes, 12);
  if (out.rows == 0 || out.cols == 0) throw ParseError("IDX image dimensions must be positive", 8);
  const auto per_image = out.rows * out.cols;
  if (out.rows > (1u << 16) || out.cols > (1u << 16) ||
      out.count > std::numeric_limits<std::size_t>::max() / per_image)
    throw ParseError("IDX dimensions overflow", 4);
  const auto need = 16 + out.count * per_image;
  if (bytes.size() < need) throw ParseError("truncated IDX image data", bytes.size());
  if (bytes.size() > need) throw ParseError("trailing bytes after IDX image data", need);
  out.pixels.assign(bytes.begin() + 16, bytes.end());
  return out;
}

std::vector<std::uint8_t> parse_idx_labels(const std::vector<std::uint8_t>& bytes) {
  expect_magic(bytes, kIdxLabelMagic);
  const std::size_t count = read_be32(bytes, 4);
  if (bytes.size() < 8 + count) throw ParseError("truncated IDX label data", bytes.size());
  if (bytes.size() > 8 + count) throw ParseError("trailing bytes after IDX label data", 8 + count);
  return {bytes.begin() + 8, bytes.end()};
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

IdxImages load_idx_images(const std::string& path) { return parse_idx_images(read_file(path)); }
std::vector<std::uint8_t> load_idx_labels(const std::string& path) { return parse_idx_labels(read_file(path)); }

std::vector<std::uint8_t> encode_idx_images(const IdxImages& images) {
  if (images.pixels.size() != images.count * images.rows * images.cols)
    throw DimensionError("IDX pixel buffer does not match its dimensions");
  std::vector<std::uint8_t> out;
  out.reserve(16 + images.pixels.size());
  put_be32(out, kIdxImageMagic);
  put_be32(out, static_cast<std::uint32_t>(images.count));
  put_be32(out, static_cast<std::uint32_t>(images.rows));
  put_be32(out, static_cast<std::uint32_t>(images.cols));
  out.insert(out.end(), images.pixels.begin(), images.pixels.end());
  return out;
}

std::vector<std::uint8_t> encode_idx_labels(const std::vector<std::uint8_t>& labels) {
  std::vector<std::uint8_t> out;
  put_be32(out, kIdxLabelMagic);
  put_be32(out, static_cast<std::uint32_t>(labels.size()));
  out.insert(out.end(), labels.begin(), labels.end());
  return out;
}

IdxImages to_idx_images(const std::vector<GlyphImage>& glyphs) {
  IdxImages out;
  out.count = glyphs.size();
  if (glyphs.empty()) return out;
  out.rows = static_cast<std::size_t>(glyphs.front().rows());
  out.cols = static_cast<std::size_t>(glyphs.front().cols());
  for (const auto& g : glyphs) {
    if (static_cast<std::size_t>(g.rows()) != out.rows || static_cast<std::size_t>(g.cols()) != out.cols)
      throw DimensionError("IDX images must share one size");
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c) out.pixels.push_back(g(r, c) ? 255 : 0);
  }
  return out;
}

void write_idx_images(const std::string& path, const IdxImages& images) { write_file(path, encode_idx_images(images)); }
void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels) {
  write_file(path, encode_idx_labels(labels));
}

}  // namespace ocrkit::data
