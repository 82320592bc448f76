#include "ocrkit/bench/init_compare.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "ocrkit/bayes/bayes_init.hpp"
#include "ocrkit/bench/report.hpp"

namespace ocrkit::bench {

const char* to_string(Initializer init) { return init == Initializer::bayes ? "bayes" : "random"; }

void InitCompareConfig::validate() const {
  if (h_grid.empty()) throw InvalidArgument("h grid is empty");
  if (seeds.empty()) throw InvalidArgument("seed list is empty");
  if (layers.size() < 2) throw InvalidArgument("need at least two layers");
  for (double h : h_grid)
    if (!(h > 0)) throw InvalidArgument("h values must be positive");
  ann::TrainConfig{eta, max_epochs, epsilon, 0, 0}.validate();
}

ann::Mlp<double> initial_network(const InitCompareConfig& cfg, const ann::TrainingSet<double>& data, double h,
                                 std::uint64_t seed, Initializer init) {
  if (init == Initializer::random) return ann::random_initialize<double>(cfg.layers, cfg.activation, cfg.bias, h, seed);
  bayes::InitConfig bi;
  bi.h = h;
  bi.iterations = cfg.bi_iterations;
  bi.off_diag = cfg.off_diag;
  bi.subset_size = cfg.bi_subset;
  bi.seed = seed;
  return bayes::bayes_initialize<double>(cfg.layers, cfg.activation, cfg.bias, data, bi);
}

InitCompareReport run_init_compare(const InitCompareConfig& cfg, const ann::TrainingSet<double>& data) {
  cfg.validate();
  if (data.empty()) throw InvalidArgument("init-compare needs training data");
  std::vector<RunRecord> rows;
  for (double h : cfg.h_grid)
    for (auto seed : cfg.seeds)
      for (auto init : {Initializer::random, Initializer::bayes}) rows.push_back({h, seed, init, 0, false, 0});

  parallel_for(rows.size(), cfg.workers, [&](std::size_t i) {
    auto& row = rows[i];
    const auto start = std::chrono::steady_clock::now();
    auto net = initial_network(cfg, data, row.h, row.seed, row.init);
    try {
      const auto report = ann::train(net, data, {cfg.eta, cfg.max_epochs, cfg.epsilon, row.seed, row.seed});
      row.steps = report.steps;
      row.converged = report.converged;
    } catch (const DivergenceError&) {
      row.steps = cfg.max_epochs;
      row.converged = false;
    }
    if (cfg.timing)
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });

  std::stable_sort(rows.begin(), rows.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.h != b.h) return a.h < b.h;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.init < b.init;
  });
  return {rows, summarize(rows)};
}

std::vector<InitSummary> summarize(const std::vector<RunRecord>& rows) {
  std::map<std::pair<double, Initializer>, std::vector<const RunRecord*>> groups;
  for (const auto& r : rows) groups[{r.h, r.init}].push_back(&r);
  std::vector<InitSummary> out;
  for (const auto& [key, members] : groups) {
    std::vector<double> steps;
    InitSummary s{key.first, key.second, 0, 0, 0, members.size()};
    for (const auto* r : members) {
      steps.push_back(r->steps);
      s.mean_steps += r->steps;
      s.converged += r->converged;
    }
    s.mean_steps /= static_cast<double>(members.size());
    s.median_steps = median(steps);
    out.push_back(s);
  }
  return out;
}

std::string init_compare_csv(const std::vector<RunRecord>& rows) {
  std::ostringstream out;
  out << "h,seed,init,steps,converged,wall_ms\n";
  for (const auto& r : rows)
    out << format_real(r.h) << ',' << r.seed << ',' << to_string(r.init) << ',' << r.steps << ','
        << (r.converged ? 1 : 0) << ',' << format_real(r.wall_ms) << '\n';
  return out.str();
}

std::string init_summary_csv(const InitCompareReport& report, const InitCompareConfig& cfg) {
  std::ostringstream out;
  out << "# layers=";
  for (std::size_t i = 0; i < cfg.layers.size(); ++i) out << (i ? "-" : "") << cfg.layers[i];
  out << " activation=" << ann::to_string(cfg.activation) << " eta=" << format_real(cfg.eta)
      << " epsilon=" << format_real(cfg.epsilon) << " max_epochs=" << cfg.max_epochs << " bias=" << cfg.bias
      << " bi_iterations=" << cfg.bi_iterations << " bi_subset=" << cfg.bi_subset << '\n';
  if (cfg.layers.size() == 5 && cfg.layers[1] == 200 && cfg.layers[2] == 100 && cfg.layers[3] == 50)
    out << "# note: hidden sizes 200-100-50 for L=5 are a harness default, not a published topology\n";
  out << "h,init,median_steps,mean_steps,converged,runs\n";
  for (const auto& s : report.summary)
    out << format_real(s.h) << ',' << to_string(s.init) << ',' << format_real(s.median_steps) << ','
        << format_real(s.mean_steps) << ',' << s.converged << ',' << s.runs << '\n';
  return out.str();
}

}  // namespace ocrkit::bench
