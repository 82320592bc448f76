#include "ocrkit/ann/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

namespace ocrkit::ann {
namespace {

void expect_word(std::istream& in, const std::string& word) {
  std::string got;
  if (!(in >> got) || got != word)
    throw ParseError("expected '" + word + "' in model file, found '" + got + "'",
                     static_cast<std::size_t>(std::max<std::streamoff>(in.tellg(), 0)));
}

template <typename T>
T read_value(std::istream& in, const char* what) {
  T value{};
  if (!(in >> value))
    throw ParseError(std::string("could not read ") + what + " in model file",
                     static_cast<std::size_t>(std::max<std::streamoff>(in.tellg(), 0)));
  return value;
}

}  // namespace

void write_mlp(std::ostream& out, const Mlp<double>& net) {
  out << "ocrkit-mlp 1\n";
  out << "activation " << to_string(net.activation()) << '\n';
  out << "bias " << (net.has_bias() ? 1 : 0) << '\n';
  out << "layers " << net.layer_count();
  for (auto n : net.layer_sizes()) out << ' ' << n;
  out << '\n' << std::setprecision(17);
  for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
    const auto& w = net.weights(l);
    out << "weights " << l << ' ' << w.rows() << ' ' << w.cols() << '\n';
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) out << (j ? " " : "") << w(i, j);
      out << '\n';
    }
    if (net.has_bias()) {
      const auto& b = net.bias(l);
      out << "bias " << l << ' ' << b.size() << '\n';
      for (Eigen::Index i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
      out << '\n';
    }
  }
}

Mlp<double> read_mlp(std::istream& in) {
  expect_word(in, "ocrkit-mlp");
  if (read_value<int>(in, "version") != 1) throw ParseError("unsupported model version", 0);
  expect_word(in, "activation");
  const auto act = parse_activation(read_value<std::string>(in, "activation"));
  expect_word(in, "bias");
  const bool bias = read_value<int>(in, "bias flag") != 0;
  expect_word(in, "layers");
  const auto count = read_value<std::size_t>(in, "layer count");
  if (count < 2 || count > 1024) throw ParseError("implausible layer count", 0);
  std::vector<Eigen::Index> sizes(count);
  for (auto& n : sizes) n = read_value<Eigen::Index>(in, "layer size");

  Mlp<double> net(sizes, act, bias);
  for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
    expect_word(in, "weights");
    auto& w = net.weights(l);
    if (read_value<std::size_t>(in, "layer index") != l || read_value<Eigen::Index>(in, "rows") != w.rows() ||
        read_value<Eigen::Index>(in, "cols") != w.cols())
      throw DimensionError("weight block " + std::to_string(l) + " does not match the declared layers");
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = read_value<double>(in, "weight");
    if (bias) {
      expect_word(in, "bias");
      auto& b = net.bias(l);
      if (read_value<std::size_t>(in, "layer index") != l || read_value<Eigen::Index>(in, "size") != b.size())
        throw DimensionError("bias block " + std::to_string(l) + " does not match the declared layers");
      for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = read_value<double>(in, "bias");
    }
  }
  return net;
}

void save_mlp(const std::string& path, const Mlp<double>& net) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_mlp(out, net);
  if (!out) throw IoError("failed writing '" + path + "'");
}

Mlp<double> load_mlp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_mlp(in);
}

}  // namespace ocrkit::ann
