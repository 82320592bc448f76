#pragma once

// Netpbm bitmaps and graymaps: P1 / P4 (PBM, 1 = black) and P2 / P5 (PGM).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocrkit/glyph.hpp"

namespace ocrkit::data {

/// Parses any of P1, P2, P4, P5. Graymaps are binarized with ink = dark:
/// a pixel is ink when its value is below `gray_threshold`, default maxval / 2.
GlyphImage parse_pnm(const std::vector<std::uint8_t>& bytes, std::optional<double> gray_threshold = std::nullopt);

GlyphImage load_pbm(const std::string& path);
GlyphImage load_pgm(const std::string& path, std::optional<double> threshold = std::nullopt);
/// Dispatches on the magic number.
GlyphImage load_pnm(const std::string& path, std::optional<double> gray_threshold = std::nullopt);

enum class PbmEncoding { plain, raw };  ///< P1, P4

std::vector<std::uint8_t> encode_pbm(const GlyphImage& img, PbmEncoding encoding = PbmEncoding::raw);
void save_pbm(const std::string& path, const GlyphImage& img, PbmEncoding encoding = PbmEncoding::raw);

}  // namespace ocrkit::data
