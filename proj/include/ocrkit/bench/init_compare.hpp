#pragma once

// Steps-to-convergence of backpropagation under random and Bayesian
// initialization, swept over the sampling half-width h and seeds.

#include <cstdint>
#include <string>
#include <vector>

#include "ocrkit/ann/train.hpp"

namespace ocrkit::bench {

enum class Initializer { random, bayes };

const char* to_string(Initializer init);

struct InitCompareConfig {
  std::vector<double> h_grid{0.7, 0.8, 0.9, 1.0, 1.1, 1.2};
  double eta = 3.0;
  std::vector<Eigen::Index> layers{784, 50, 10};
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  double epsilon = 0.05;
  int max_epochs = 300;
  ann::Activation activation = ann::Activation::sigmoid;
  bool bias = true;
  int bi_iterations = 2;
  std::size_t bi_subset = 200;
  double off_diag = 0.7;
  /// Record wall-clock times; off by default so reports are reproducible.
  bool timing = false;
  unsigned workers = 1;

  void validate() const;
};

struct RunRecord {
  double h = 0;
  std::uint64_t seed = 0;
  Initializer init = Initializer::random;
  int steps = 0;
  bool converged = false;
  double wall_ms = 0;
};

struct InitSummary {
  double h = 0;
  Initializer init = Initializer::random;
  double median_steps = 0;
  double mean_steps = 0;
  std::size_t converged = 0;
  std::size_t runs = 0;
};

struct InitCompareReport {
  std::vector<RunRecord> rows;  ///< sorted by (h, seed, init)
  std::vector<InitSummary> summary;
};

/// Initial weights for one sweep cell. Both initializers consume the same
/// seed, so the Bayesian prior mean equals the random initialization.
ann::Mlp<double> initial_network(const InitCompareConfig& cfg, const ann::TrainingSet<double>& data, double h,
                                 std::uint64_t seed, Initializer init);

InitCompareReport run_init_compare(const InitCompareConfig& cfg, const ann::TrainingSet<double>& data);

/// Per-(h, init) medians, recomputable from the rows alone.
std::vector<InitSummary> summarize(const std::vector<RunRecord>& rows);

/// `h,seed,init,steps,converged,wall_ms` with a header row.
std::string init_compare_csv(const std::vector<RunRecord>& rows);
/// `h,init,median_steps,mean_steps,converged,runs` preceded by `#` comment lines.
std::string init_summary_csv(const InitCompareReport& report, const InitCompareConfig& cfg);

}  // namespace ocrkit::bench
