#include "ocrkit/data/pnm.hpp"

#include <cctype>

#include "ocrkit/data/idx.hpp"

namespace ocrkit::data {
namespace {

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long header_number(const char* what) {
    skip_space_and_comments();
    const auto start = pos_;
    unsigned long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > (1ul << 24)) throw ParseError(std::string("netpbm ") + what + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("netpbm header: expected ") + what, start);
    return v;
  }

  // Exactly one whitespace byte separates the header from a binary raster.
  void end_of_header() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
      throw ParseError("netpbm header must end with whitespace", pos_);
    ++pos_;
  }

  int plain_bit() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) throw ParseError("truncated P1 raster", pos_);
    const auto c = bytes_[pos_++];
    if (c != '0' && c != '1') throw ParseError("P1 raster holds only 0 and 1", pos_ - 1);
    return c - '0';
  }

  std::uint8_t byte() {
    if (pos_ >= bytes_.size()) throw ParseError("truncated raster", pos_);
    return bytes_[pos_++];
  }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GlyphImage parse_pnm(const std::vector<std::uint8_t>& bytes, std::optional<double> gray_threshold) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] < '1' || bytes[1] > '5' || bytes[1] == '3')
    throw ParseError("not a P1/P2/P4/P5 netpbm file", 0);
  const char kind = static_cast<char>(bytes[1]);
  Reader in(bytes);
  in.byte();
  in.byte();
  const auto cols = static_cast<Eigen::Index>(in.header_number("width"));
  const auto rows = static_cast<Eigen::Index>(in.header_number("height"));
  if (cols == 0 || rows == 0) throw ParseError("netpbm dimensions must be positive", in.pos());
  GlyphImage img(rows, cols);

  if (kind == '1' || kind == '4') {
    if (kind == '4') in.end_of_header();
    for (Eigen::Index r = 0; r < rows; ++r) {
      std::uint8_t packed = 0;
      for (Eigen::Index c = 0; c < cols; ++c) {
        if (kind == '1') {
          img.set(r, c, in.plain_bit());
        } else {
          if (c % 8 == 0) packed = in.byte();
          img.set(r, c, (packed >> (7 - c % 8)) & 1);
        }
      }
    }
    return img;
  }

  const auto maxval = in.header_number("maxval");
  if (maxval == 0 || maxval > 65535) throw ParseError("PGM maxval must be in 1..65535", in.pos());
  const double threshold = gray_threshold.value_or(static_cast<double>(maxval) / 2.0);
  if (kind == '5') in.end_of_header();
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      unsigned long v = 0;
      if (kind == '2') {
        v = in.header_number("gray value");
      } else {
        v = in.byte();
        if (maxval > 255) v = (v << 8) | in.byte();
      }
      if (v > maxval) throw ParseError("gray value exceeds maxval", in.pos());
      img.set(r, c, static_cast<double>(v) < threshold);
    }
  }
  return img;
}

GlyphImage load_pnm(const std::string& path, std::optional<double> gray_threshold) {
  return parse_pnm(read_file(path), gray_threshold);
}

GlyphImage load_pbm(const std::string& path) {
  const auto bytes = read_file(path);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4'))
    throw ParseError("'" + path + "' is not a PBM file", 0);
  return parse_pnm(bytes);
}

GlyphImage load_pgm(const std::string& path, std::optional<double> threshold) {
  const auto bytes = read_file(path);
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw ParseError("'" + path + "' is not a PGM file", 0);
  return parse_pnm(bytes, threshold);
}

std::vector<std::uint8_t> encode_pbm(const GlyphImage& img, PbmEncoding encoding) {
  const std::string header = std::string(encoding == PbmEncoding::plain ? "P1\n" : "P4\n") +
                             std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (Eigen::Index r = 0; r < img.rows(); ++r) {
    if (encoding == PbmEncoding::plain) {
      for (Eigen::Index c = 0; c < img.cols(); ++c) {
        if (c) out.push_back(' ');
        out.push_back(img(r, c) ? '1' : '0');
      }
      out.push_back('\n');
    } else {
      for (Eigen::Index c = 0; c < img.cols(); c += 8) {
        std::uint8_t packed = 0;
        for (Eigen::Index k = 0; k < 8 && c + k < img.cols(); ++k) packed |= img(r, c + k) << (7 - k);
        out.push_back(packed);
      }
    }
  }
  return out;
}

void save_pbm(const std::string& path, const GlyphImage& img, PbmEncoding encoding) {
  write_file(path, encode_pbm(img, encoding));
}

}  // namespace ocrkit::data
