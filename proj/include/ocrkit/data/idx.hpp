#pragma once

// IDX containers as used by MNIST: big-endian 32-bit magic (0x00000803 for
// rank-3 unsigned-byte images, 0x00000801 for rank-1 labels), one 32-bit
// count per dimension, then the raw bytes in row-major order.

#include <cstdint>
#include <string>
#include <vector>

#include "ocrkit/glyph.hpp"

namespace ocrkit::data {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

/// Raw grayscale images, kept byte-exact.
struct IdxImages {
  std::size_t count = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;  ///< count * rows * cols bytes

  /// Image `i` with ink where the byte is >= threshold.
  GlyphImage glyph(std::size_t i, std::uint8_t threshold = 128) const;
  std::vector<GlyphImage> glyphs(std::uint8_t threshold = 128) const;
};

IdxImages parse_idx_images(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> parse_idx_labels(const std::vector<std::uint8_t>& bytes);

IdxImages load_idx_images(const std::string& path);
std::vector<std::uint8_t> load_idx_labels(const std::string& path);

std::vector<std::uint8_t> encode_idx_images(const IdxImages& images);
std::vector<std::uint8_t> encode_idx_labels(const std::vector<std::uint8_t>& labels);

/// Binary glyphs as 0 / 255 bytes. All glyphs must share one size.
IdxImages to_idx_images(const std::vector<GlyphImage>& glyphs);

void write_idx_images(const std::string& path, const IdxImages& images);
void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace ocrkit::data
