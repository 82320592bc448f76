#pragma once

// Fully connected feed-forward network with per-layer delta errors.
//
// Layers are indexed from 0 (input) to L-1 (output). Weight layer l maps the
// activations of layer l to layer l+1 and is stored as an N(l+1) x N(l)
// row-major matrix, so row i holds the incoming weights of neuron i.

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "ocrkit/error.hpp"

namespace ocrkit::ann {

enum class Activation { sigmoid, tanh };

inline const char* to_string(Activation act) { return act == Activation::tanh ? "tanh" : "sigmoid"; }

inline Activation parse_activation(const std::string& name) {
  if (name == "tanh") return Activation::tanh;
  if (name == "sigmoid") return Activation::sigmoid;
  throw InvalidArgument("unknown activation '" + name + "'");
}

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using WeightMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Applies f componentwise.
template <typename Derived>
Vector<typename Derived::Scalar> activate(Activation act, const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  if (act == Activation::tanh) return z.array().tanh().matrix();
  return (Scalar(1) / (Scalar(1) + (-z.array()).exp())).matrix();
}

/// f'(z) expressed through a = f(z): 1 - a^2 for tanh, a(1 - a) for sigmoid.
template <typename Derived>
Vector<typename Derived::Scalar> activation_slope(Activation act, const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (act == Activation::tanh) return (Scalar(1) - a.array().square()).matrix();
  return (a.array() * (Scalar(1) - a.array())).matrix();
}

template <typename Scalar = double>
class Mlp {
 public:
  using VectorType = Vector<Scalar>;
  using MatrixType = WeightMatrix<Scalar>;

  /// Zero-weight network. With `bias` set, every non-output layer gets an
  /// always-on unit feeding the next layer; it is stored as a bias vector.
  Mlp(std::vector<Eigen::Index> layer_sizes, Activation activation, bool bias = true)
      : sizes_(std::move(layer_sizes)), activation_(activation), has_bias_(bias) {
    if (sizes_.size() < 2) throw InvalidArgument("an Mlp needs at least two layers");
    for (auto n : sizes_)
      if (n <= 0) throw InvalidArgument("layer sizes must be positive");
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
      weights_.push_back(MatrixType::Zero(sizes_[l + 1], sizes_[l]));
      biases_.push_back(VectorType::Zero(has_bias_ ? sizes_[l + 1] : 0));
    }
  }

  std::size_t layer_count() const { return sizes_.size(); }
  std::size_t weight_layer_count() const { return weights_.size(); }
  const std::vector<Eigen::Index>& layer_sizes() const { return sizes_; }
  Eigen::Index input_size() const { return sizes_.front(); }
  Eigen::Index output_size() const { return sizes_.back(); }
  Activation activation() const { return activation_; }
  bool has_bias() const { return has_bias_; }

  MatrixType& weights(std::size_t l) { return weights_.at(l); }
  const MatrixType& weights(std::size_t l) const { return weights_.at(l); }
  /// Empty when the network has no bias units.
  VectorType& bias(std::size_t l) { return biases_.at(l); }
  const VectorType& bias(std::size_t l) const { return biases_.at(l); }

  /// Number of fusable weights w_ij in layer l (biases excluded).
  Eigen::Index weight_count(std::size_t l) const { return weights_.at(l).size(); }

  bool all_finite() const {
    for (std::size_t l = 0; l < weights_.size(); ++l) {
      if (!weights_[l].allFinite() || !biases_[l].allFinite()) return false;
    }
    return true;
  }

  friend bool operator==(const Mlp& a, const Mlp& b) {
    if (a.sizes_ != b.sizes_ || a.activation_ != b.activation_ || a.has_bias_ != b.has_bias_) return false;
    for (std::size_t l = 0; l < a.weights_.size(); ++l) {
      if (a.weights_[l] != b.weights_[l] || a.biases_[l] != b.biases_[l]) return false;
    }
    return true;
  }

 private:
  std::vector<Eigen::Index> sizes_;
  Activation activation_;
  bool has_bias_;
  std::vector<MatrixType> weights_;
  std::vector<VectorType> biases_;
};

/// Per-layer outputs a[0..L-1].
template <typename Scalar>
using Activations = std::vector<Vector<Scalar>>;

/// Delta errors d for layers 1..L-1, stored at index l-1 (i.e. per weight layer).
template <typename Scalar>
struct LayerDeltas {
  std::vector<Vector<Scalar>> layers;
};

/// Gradient of 0.5 * ||a[L-1] - y||^2 with respect to weights and biases.
template <typename Scalar>
struct Gradient {
  LayerDeltas<Scalar> deltas;
  std::vector<WeightMatrix<Scalar>> weights;
  std::vector<Vector<Scalar>> biases;
};

template <typename Scalar, typename Derived>
Activations<Scalar> forward(const Mlp<Scalar>& net, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != net.input_size())
    throw DimensionError("input has length " + std::to_string(x.size()) + ", network expects " +
                         std::to_string(net.input_size()));
  Activations<Scalar> a;
  a.reserve(net.layer_count());
  a.push_back(activate(net.activation(), x));
  for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
    Vector<Scalar> z = net.weights(l) * a.back();
    if (net.has_bias()) z += net.bias(l);
    a.push_back(activate(net.activation(), z));
  }
  return a;
}

/// Deltas from an already computed forward pass.
template <typename Scalar, typename Derived>
LayerDeltas<Scalar> deltas_from(const Mlp<Scalar>& net, const Activations<Scalar>& a,
                                const Eigen::MatrixBase<Derived>& y) {
  if (y.size() != net.output_size())
    throw DimensionError("target has length " + std::to_string(y.size()) + ", network outputs " +
                         std::to_string(net.output_size()));
  const auto layers = net.weight_layer_count();
  LayerDeltas<Scalar> d;
  d.layers.resize(layers);
  d.layers[layers - 1] =
      ((a.back() - y).array() * activation_slope(net.activation(), a.back()).array()).matrix();
  for (std::size_t l = layers - 1; l-- > 0;) {
    d.layers[l] = ((net.weights(l + 1).transpose() * d.layers[l + 1]).array() *
                   activation_slope(net.activation(), a[l + 1]).array())
                      .matrix();
  }
  return d;
}

template <typename Scalar, typename DerivedX, typename DerivedY>
Gradient<Scalar> backward(const Mlp<Scalar>& net, const Eigen::MatrixBase<DerivedX>& x,
                          const Eigen::MatrixBase<DerivedY>& y) {
  const auto a = forward(net, x);
  Gradient<Scalar> g;
  g.deltas = deltas_from(net, a, y);
  for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
    g.weights.push_back(g.deltas.layers[l] * a[l].transpose());
    g.biases.push_back(net.has_bias() ? g.deltas.layers[l] : Vector<Scalar>());
  }
  return g;
}

}  // namespace ocrkit::ann
