#pragma once

// Weight initialization by iterated Bayesian fusion.
//
// Each weight layer is treated as an unknown static process. A uniform random
// draw serves as the prior mean, fresh uniform draws act as measurements, and
// the measurement covariance is scaled by the layer's backpropagated error
// under the measured weights. Per iteration t:
//
//   m_t        ~ Uniform(-h, h)
//   R_t        = diag r, off-diagonal c, r = sum_x ||d^(x)||^2 / (N(k) N(k-1))
//   w~_t       = (Q_t^-1 + R_t^-1)^-1 (Q_t^-1 w-_t + R_t^-1 m_t)
//   Q_{t+1}    = (Q_t^-1 + R_t^-1)^-1,   w-_{t+1} = w~_t
//
// Draw order for a given seed: prior means for every weight layer (row-major),
// then biases, then for each iteration the measurements for every weight layer.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ocrkit/ann/train.hpp"
#include "ocrkit/bayes/structured_cov.hpp"

namespace ocrkit::bayes {

struct InitConfig {
  double h = 1.0;
  int iterations = 2;
  double off_diag = 0.7;
  /// Defaults to h^2 / 3, the variance of Uniform(-h, h).
  std::optional<double> prior_var;
  std::size_t subset_size = 200;
  double pd_floor = 1e-6;
  std::uint64_t seed = 0;

  double effective_prior_var() const { return prior_var.value_or(h * h / 3.0); }

  void validate() const {
    if (!(h > 0.0)) throw InvalidArgument("h must be positive");
    if (iterations < 1) throw InvalidArgument("iterations must be at least 1");
    if (subset_size < 1) throw InvalidArgument("subset_size must be at least 1");
    if (!(pd_floor > 0.0)) throw InvalidArgument("pd_floor must be positive");
    if (!(effective_prior_var() > 0.0)) throw InvalidArgument("prior variance must be positive");
  }
};

template <typename Scalar = double>
struct LayerFusionState {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> prior_mean;
  StructuredCov<Scalar> prior_cov;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> measurement;
  StructuredCov<Scalar> meas_cov;
};

/// One entry per weight layer.
template <typename Scalar = double>
using FusionState = std::vector<LayerFusionState<Scalar>>;

template <typename Scalar = double>
struct Posterior {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mean;
  StructuredCov<Scalar> cov;
};

/// Precision-weighted combination of prior and measurement.
///
/// Both covariances share the eigenvectors of J, so the update is a scalar
/// fusion on the ones direction and another on its complement.
template <typename Scalar>
Posterior<Scalar> fuse(const LayerFusionState<Scalar>& s) {
  const auto n = s.prior_cov.dim();
  if (s.meas_cov.dim() != n || s.prior_mean.size() != n || s.measurement.size() != n)
    throw DimensionError("fusion state components disagree on dimension");
  const auto blend = [](Scalar q, Scalar r) { return std::pair{r / (q + r), q / (q + r)}; };
  const Scalar qc = s.prior_cov.complement_eigenvalue(), rc = s.meas_cov.complement_eigenvalue();
  const Scalar q1 = s.prior_cov.ones_eigenvalue(), r1 = s.meas_cov.ones_eigenvalue();
  const auto [wc, mc] = blend(qc, rc);
  const auto [w1, m1] = blend(q1, r1);
  const Scalar prior_avg = s.prior_mean.mean(), meas_avg = s.measurement.mean();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mean =
      wc * (s.prior_mean.array() - prior_avg).matrix() + mc * (s.measurement.array() - meas_avg).matrix();
  mean.array() += w1 * prior_avg + m1 * meas_avg;
  const Scalar pc = qc * wc;
  const Scalar p1 = q1 * w1;
  return {std::move(mean), StructuredCov<Scalar>(n, pc, (p1 - pc) / static_cast<Scalar>(n))};
}

template <typename Scalar>
Posterior<Scalar> fuse(const FusionState<Scalar>& state, std::size_t layer) {
  return fuse(state.at(layer));
}

/// sum over `data` of ||d||^2 for weight layer `layer`, divided by the
/// layer's weight count N(k) N(k-1). Deltas come from a backward pass of `net`.
template <typename Scalar>
Scalar measure_noise_variance(const ann::Mlp<Scalar>& net, const ann::TrainingSet<Scalar>& data, std::size_t layer) {
  if (data.empty()) throw InvalidArgument("noise variance needs at least one sample");
  if (layer >= net.weight_layer_count())
    throw DimensionError("weight layer " + std::to_string(layer) + " out of range");
  Scalar total = 0;
  for (const auto& item : data.items) {
    const auto a = ann::forward(net, item.input);
    total += ann::deltas_from(net, a, item.target).layers[layer].squaredNorm();
  }
  return total / static_cast<Scalar>(net.weight_count(layer));
}

/// Same, for every weight layer from one backward pass per sample.
template <typename Scalar>
std::vector<Scalar> measure_noise_variances(const ann::Mlp<Scalar>& net, const ann::TrainingSet<Scalar>& data) {
  if (data.empty()) throw InvalidArgument("noise variance needs at least one sample");
  std::vector<Scalar> totals(net.weight_layer_count(), Scalar(0));
  for (const auto& item : data.items) {
    const auto a = ann::forward(net, item.input);
    const auto d = ann::deltas_from(net, a, item.target);
    for (std::size_t l = 0; l < totals.size(); ++l) totals[l] += d.layers[l].squaredNorm();
  }
  for (std::size_t l = 0; l < totals.size(); ++l) totals[l] /= static_cast<Scalar>(net.weight_count(l));
  return totals;
}

/// Diagnostics from one bayes_initialize call.
struct InitTrace {
  /// Raw delta-norm averages r per iteration (outer) and weight layer (inner).
  std::vector<std::vector<double>> noise_variance;
  /// Number of (iteration, layer) cells where r was raised to off_diag + pd_floor.
  int clamped = 0;
};

template <typename Scalar = double>
ann::Mlp<Scalar> bayes_initialize(const std::vector<Eigen::Index>& sizes, ann::Activation act, bool bias,
                                  const ann::TrainingSet<Scalar>& data, const InitConfig& cfg,
                                  InitTrace* trace = nullptr) {
  cfg.validate();
  ann::Mlp<Scalar> scratch(sizes, act, bias);
  data.validate_for(scratch);
  const auto subset = data.head(cfg.subset_size);
  if (subset.empty()) throw InvalidArgument("bayes initialization needs training data");

  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const auto layers = scratch.weight_layer_count();
  Rng rng(cfg.seed);
  auto draw = [&](Eigen::Index n) {
    VectorType v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = static_cast<Scalar>(rng.uniform(-cfg.h, cfg.h));
    return v;
  };

  std::vector<VectorType> mean;
  std::vector<StructuredCov<Scalar>> cov;
  for (std::size_t l = 0; l < layers; ++l) {
    const auto n = scratch.weight_count(l);
    mean.push_back(draw(n));
    cov.emplace_back(n, static_cast<Scalar>(cfg.effective_prior_var()), Scalar(0));
  }
  for (std::size_t l = 0; l < layers; ++l) scratch.bias(l) = draw(scratch.bias(l).size());

  const auto floor = static_cast<Scalar>(cfg.off_diag + cfg.pd_floor);
  for (int t = 0; t < cfg.iterations; ++t) {
    std::vector<VectorType> measurement;
    for (std::size_t l = 0; l < layers; ++l) {
      measurement.push_back(draw(scratch.weight_count(l)));
      Eigen::Map<VectorType>(scratch.weights(l).data(), scratch.weight_count(l)) = measurement.back();
    }
    const auto noise = measure_noise_variances(scratch, subset);
    if (trace) trace->noise_variance.emplace_back(noise.begin(), noise.end());
    for (std::size_t l = 0; l < layers; ++l) {
      if (noise[l] < floor && trace) ++trace->clamped;
      const auto r = std::max(noise[l], floor);
      const LayerFusionState<Scalar> state{
          mean[l], cov[l], measurement[l],
          StructuredCov<Scalar>::from_diagonal_offdiagonal(cov[l].dim(), r, static_cast<Scalar>(cfg.off_diag))};
      auto posterior = fuse(state);
      mean[l] = std::move(posterior.mean);
      cov[l] = posterior.cov;
    }
  }

  ann::Mlp<Scalar> net = scratch;
  for (std::size_t l = 0; l < layers; ++l)
    Eigen::Map<VectorType>(net.weights(l).data(), net.weight_count(l)) = mean[l];
  return net;
}

}  // namespace ocrkit::bayes
