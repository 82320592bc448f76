#pragma once

// Online backpropagation: per-sample gradient steps, one epoch per "step".

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ocrkit/ann/mlp.hpp"
#include "ocrkit/random.hpp"

namespace ocrkit::ann {

template <typename Scalar = double>
struct Sample {
  Vector<Scalar> input;
  Vector<Scalar> target;
  int label = -1;
};

template <typename Scalar = double>
struct TrainingSet {
  std::vector<Sample<Scalar>> items;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }

  /// Checks shapes against `net` and the target range of its activation.
  void validate_for(const Mlp<Scalar>& net) const {
    const Scalar lo = net.activation() == Activation::tanh ? Scalar(-1) : Scalar(0);
    for (std::size_t s = 0; s < items.size(); ++s) {
      const auto& item = items[s];
      if (item.input.size() != net.input_size() || item.target.size() != net.output_size())
        throw DimensionError("sample " + std::to_string(s) + " does not match the network shape");
      if ((item.target.array() < lo).any() || (item.target.array() > Scalar(1)).any())
        throw InvalidArgument("sample " + std::to_string(s) + " has a target outside the activation range");
    }
  }

  /// First `n` items (all of them when n >= size()).
  TrainingSet head(std::size_t n) const {
    TrainingSet out;
    out.items.assign(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(std::min(n, items.size())));
    return out;
  }
};

struct TrainConfig {
  double eta = 0.5;
  int max_epochs = 1000;
  double epsilon = 0.05;
  std::uint64_t shuffle_seed = 0;
  std::uint64_t weight_seed = 0;

  /// eta = 0 is accepted so that a frozen epoch can be run.
  void validate() const {
    if (!(eta >= 0.0) || !std::isfinite(eta)) throw InvalidArgument("eta must be a finite non-negative number");
    if (max_epochs <= 0) throw InvalidArgument("max_epochs must be positive");
    if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  }
};

struct TrainReport {
  int steps = 0;
  bool converged = false;
  std::vector<double> mse_trajectory;
};

/// (1 / (|X| N(L))) * sum over X of ||a[L] - y||^2.
template <typename Scalar>
Scalar mean_squared_error(const Mlp<Scalar>& net, const TrainingSet<Scalar>& data) {
  if (data.empty()) throw InvalidArgument("mean squared error of an empty set");
  Scalar total = 0;
  for (const auto& item : data.items) total += (forward(net, item.input).back() - item.target).squaredNorm();
  return total / (static_cast<Scalar>(data.size()) * static_cast<Scalar>(net.output_size()));
}

/// Uniform(-h, h) weights and biases, drawn layer by layer in row-major order.
template <typename Scalar = double>
Mlp<Scalar> random_initialize(std::vector<Eigen::Index> sizes, Activation act, bool bias, double h,
                              std::uint64_t seed) {
  if (!(h > 0.0)) throw InvalidArgument("h must be positive");
  Mlp<Scalar> net(std::move(sizes), act, bias);
  Rng rng(seed);
  for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
    auto& w = net.weights(l);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = static_cast<Scalar>(rng.uniform(-h, h));
  }
  for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
    auto& b = net.bias(l);
    for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = static_cast<Scalar>(rng.uniform(-h, h));
  }
  return net;
}

/// Trains in place. Each epoch visits every sample once in a freshly shuffled
/// order and applies w <- w - eta * gradient after each sample. Stops after the
/// first epoch whose end-of-epoch MSE is <= epsilon, or after max_epochs.
template <typename Scalar>
TrainReport train(Mlp<Scalar>& net, const TrainingSet<Scalar>& data, const TrainConfig& cfg) {
  cfg.validate();
  if (data.empty()) throw InvalidArgument("cannot train on an empty set");
  data.validate_for(net);

  const auto eta = static_cast<Scalar>(cfg.eta);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(cfg.shuffle_seed);

  TrainReport report;
  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    rng.shuffle(order.begin(), order.end());
    for (const auto idx : order) {
      const auto& item = data.items[idx];
      const auto a = forward(net, item.input);
      const auto d = deltas_from(net, a, item.target);
      for (std::size_t l = 0; l < net.weight_layer_count(); ++l) {
        net.weights(l).noalias() -= eta * d.layers[l] * a[l].transpose();
        if (net.has_bias()) net.bias(l).noalias() -= eta * d.layers[l];
      }
    }
    const double mse = static_cast<double>(mean_squared_error(net, data));
    if (!std::isfinite(mse)) throw DivergenceError(epoch);
    report.mse_trajectory.push_back(mse);
    report.steps = epoch;
    if (mse <= cfg.epsilon) {
      report.converged = true;
      break;
    }
  }
  return report;
}

}  // namespace ocrkit::ann
