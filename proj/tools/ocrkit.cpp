// ocrkit command-line harness: training, initialization benchmarks,
// segmentation and synthetic corpus generation.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ocrkit/ann/serialize.hpp"
#include "ocrkit/bayes/bayes_init.hpp"
#include "ocrkit/bench/init_compare.hpp"
#include "ocrkit/bench/report.hpp"
#include "ocrkit/bench/segment_compare.hpp"
#include "ocrkit/data/dataset.hpp"
#include "ocrkit/data/pnm.hpp"
#include "ocrkit/data/synth.hpp"

namespace {

using namespace ocrkit;
namespace fs = std::filesystem;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidArgument("bad number '" + s + "'");
  return v;
}

/// "a:b:step" (inclusive) or "x,y,z".
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  const auto parts = split(spec, ':');
  if (parts.size() == 3) {
    const double lo = to_real(parts[0]), hi = to_real(parts[1]), step = to_real(parts[2]);
    if (!(step > 0) || hi < lo) throw InvalidArgument("grid '" + spec + "' needs lo <= hi and step > 0");
    const auto n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int k = 0; k <= n; ++k) out.push_back(std::round((lo + k * step) * 1e9) / 1e9);
  } else if (parts.size() == 1) {
    for (const auto& item : split(spec, ',')) out.push_back(to_real(item));
  } else {
    throw InvalidArgument("grid '" + spec + "' is neither lo:hi:step nor a list");
  }
  return out;
}

/// "a:b" inclusive, or a single integer.
std::pair<long, long> parse_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return {std::stol(parts[0]), std::stol(parts[0])};
  if (parts.size() == 2) return {std::stol(parts[0]), std::stol(parts[1])};
  throw InvalidArgument("range '" + spec + "' is not a:b");
}

std::vector<Eigen::Index> parse_layers(const std::string& spec) {
  std::vector<Eigen::Index> out;
  for (const auto& item : split(spec, ',')) out.push_back(std::stol(item));
  return out;
}

/// A count N (seeds 0..N-1) or an explicit comma list.
std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> out;
  if (spec.find(',') == std::string::npos) {
    const auto n = std::stoul(spec);
    for (std::uint64_t s = 0; s < n; ++s) out.push_back(s);
  } else {
    for (const auto& item : split(spec, ',')) out.push_back(std::stoull(item));
  }
  return out;
}

std::pair<Eigen::Index, Eigen::Index> parse_input_grid(const std::string& spec, const data::GlyphDataset& ds) {
  if (spec.empty()) {
    if (ds.native_rows > 0) return {ds.native_rows, ds.native_cols};
    return {21, 15};
  }
  const auto parts = split(spec, 'x');
  if (parts.size() != 2) throw InvalidArgument("input grid must be ROWSxCOLS");
  return {std::stol(parts[0]), std::stol(parts[1])};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    bench::write_text(path, text);
}

struct DataOptions {
  std::string dir;
  std::size_t subset = 0;
  std::string grid;
  std::string activation = "sigmoid";
};

void add_data_options(CLI::App* cmd, DataOptions& o) {
  cmd->add_option("--data", o.dir, "dataset directory (IDX pair or PBM files + labels.csv)")
      ->required()
      ->check(CLI::ExistingDirectory);
  cmd->add_option("--subset", o.subset, "use a label-stratified subset of N images (0 = all)");
  cmd->add_option("--grid", o.grid, "input grid ROWSxCOLS (default: native image size, else 21x15)");
  cmd->add_option("--activation", o.activation, "tanh or sigmoid")->check(CLI::IsMember({"tanh", "sigmoid"}));
}

std::pair<ann::TrainingSet<double>, int> load_training(const DataOptions& o) {
  auto ds = data::load_dataset(o.dir);
  if (o.subset > 0) ds = data::stratified_subset(ds, o.subset);
  const auto [rows, cols] = parse_input_grid(o.grid, ds);
  const data::EncodingSpec spec{rows, cols, ann::parse_activation(o.activation)};
  return {data::to_training_set(ds, spec), ds.class_count};
}

void check_layers(std::vector<Eigen::Index>& layers, const ann::TrainingSet<double>& set, int classes) {
  if (layers.empty()) throw InvalidArgument("no layers given");
  const auto inputs = set.items.front().input.size();
  if (layers.front() != inputs || layers.back() != classes)
    throw DimensionError("layers must start with " + std::to_string(inputs) + " inputs and end with " +
                         std::to_string(classes) + " outputs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ocrkit: MLP training with Bayesian weight initialization and fuzzy character segmentation"};
  app.require_subcommand(1);

  // train
  auto* train_cmd = app.add_subcommand("train", "train an MLP on a glyph dataset");
  train_cmd->set_help_flag("--help", "Print this help message and exit");
  DataOptions train_data;
  add_data_options(train_cmd, train_data);
  std::string train_layers, train_init = "bayes", train_out, train_report;
  double train_h = 1.0, train_eta = 3.0, train_eps = 0.05;
  int train_epochs = 300, bi_iterations = 2;
  std::size_t bi_subset = 200;
  std::uint64_t train_seed = 0;
  bool no_bias = false;
  train_cmd->add_option("--layers", train_layers, "comma-separated layer sizes, e.g. 784,50,10")->required();
  train_cmd->add_option("--init", train_init, "random or bayes")->check(CLI::IsMember({"random", "bayes"}));
  train_cmd->add_option("--h", train_h, "half-width of the weight sampling interval");
  train_cmd->add_option("--eta", train_eta, "learning rate");
  train_cmd->add_option("--eps", train_eps, "MSE convergence threshold");
  train_cmd->add_option("--max-epochs", train_epochs, "epoch limit");
  train_cmd->add_option("--seed", train_seed, "seed for weights and sample order");
  train_cmd->add_option("--bi-iterations", bi_iterations, "Bayesian fusion iterations");
  train_cmd->add_option("--bi-subset", bi_subset, "samples used for the delta-norm estimate");
  train_cmd->add_flag("--no-bias", no_bias, "omit bias units");
  train_cmd->add_option("--out", train_out, "write the trained model here");
  train_cmd->add_option("--report", train_report, "write the per-epoch MSE trajectory as CSV");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "benchmark sweeps");
  bench_cmd->require_subcommand(1);

  auto* ic_cmd = bench_cmd->add_subcommand("init-compare", "steps to convergence, random vs Bayesian init");
  DataOptions ic_data;
  ic_data.subset = 1000;
  add_data_options(ic_cmd, ic_data);
  std::string ic_grid = "0.7:1.2:0.1", ic_layers = "784,50,10", ic_seeds = "10", ic_out, ic_summary;
  bench::InitCompareConfig ic;
  bool ic_no_bias = false;
  ic_cmd->add_option("--h-grid", ic_grid, "h values, lo:hi:step or a list");
  ic_cmd->add_option("--layers", ic_layers, "comma-separated layer sizes");
  ic_cmd->add_option("--seeds", ic_seeds, "seed count N (0..N-1) or a comma list");
  ic_cmd->add_option("--eta", ic.eta, "learning rate");
  ic_cmd->add_option("--eps", ic.epsilon, "MSE convergence threshold");
  ic_cmd->add_option("--max-epochs", ic.max_epochs, "epoch limit per run");
  ic_cmd->add_option("--bi-iterations", ic.bi_iterations, "Bayesian fusion iterations");
  ic_cmd->add_option("--bi-subset", ic.bi_subset, "samples used for the delta-norm estimate");
  ic_cmd->add_flag("--no-bias", ic_no_bias, "omit bias units");
  ic_cmd->add_flag("--timing", ic.timing, "record wall-clock milliseconds per run");
  ic_cmd->add_option("--out", ic_out, "per-run CSV (default stdout)");
  ic_cmd->add_option("--summary", ic_summary, "summary CSV (default <out>.summary.csv, or stderr)");

  auto* sc_cmd = bench_cmd->add_subcommand("segment-compare", "cut accuracy, fuzzy vs g-only vs h-only");
  std::string sc_data, sc_config, sc_out, sc_summary;
  sc_cmd->add_option("--data", sc_data, "corpus directory with manifest.csv")->required()->check(CLI::ExistingDirectory);
  sc_cmd->add_option("--config", sc_config, "fuzzy config file")->check(CLI::ExistingFile);
  sc_cmd->add_option("--out", sc_out, "per-sample CSV (default stdout)");
  sc_cmd->add_option("--summary", sc_summary, "accuracy CSV (default <out>.summary.csv, or stderr)");

  // segment
  auto* seg_cmd = app.add_subcommand("segment", "split a touching-character bitmap");
  std::string seg_input, seg_config, seg_scores, seg_out_dir;
  int seg_max = 2;
  bool seg_rows = false;
  seg_cmd->add_option("--input", seg_input, "PBM/PGM pattern")->required()->check(CLI::ExistingFile);
  seg_cmd->add_option("--config", seg_config, "fuzzy config file")->check(CLI::ExistingFile);
  seg_cmd->add_option("--max-chars", seg_max, "maximum number of pieces");
  seg_cmd->add_option("--emit-scores", seg_scores, "write per-column features and rho as CSV");
  seg_cmd->add_option("--out-dir", seg_out_dir, "write the pieces as PBM files");
  seg_cmd->add_flag("--rows", seg_rows, "cut between rows instead of columns");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "synthetic corpora");
  synth_cmd->require_subcommand(1);
  auto* touch_cmd = synth_cmd->add_subcommand("touching", "touching pairs with ground-truth cut ranges");
  std::string touch_data, touch_out, touch_overlap = "1:2";
  data::CorpusSpec corpus_spec;
  bool no_crop = false;
  touch_cmd->add_option("--data", touch_data, "source glyph dataset")->required()->check(CLI::ExistingDirectory);
  touch_cmd->add_option("--out", touch_out, "output corpus directory")->required();
  touch_cmd->add_option("--pairs", corpus_spec.pairs, "number of pairs");
  touch_cmd->add_option("--overlap", touch_overlap, "overlap range a:b in columns");
  touch_cmd->add_option("--seed", corpus_spec.seed, "generator seed");
  touch_cmd->add_flag("--no-crop", no_crop, "keep white side columns of the source glyphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "error: usage: " << msg << '\n';
    return 2;
  }

  try {
    if (*train_cmd) {
      const auto [set, classes] = load_training(train_data);
      auto layers = parse_layers(train_layers);
      check_layers(layers, set, classes);
      const auto act = ann::parse_activation(train_data.activation);
      ann::Mlp<double> net =
          train_init == "random"
              ? ann::random_initialize<double>(layers, act, !no_bias, train_h, train_seed)
              : bayes::bayes_initialize<double>(layers, act, !no_bias, set,
                                                {train_h, bi_iterations, 0.7, std::nullopt, bi_subset, 1e-6, train_seed});
      const auto report = ann::train(net, set, {train_eta, train_epochs, train_eps, train_seed, train_seed});
      std::cout << "steps=" << report.steps << " converged=" << report.converged
                << " mse=" << bench::format_real(report.mse_trajectory.back()) << '\n';
      if (!train_out.empty()) ann::save_mlp(train_out, net);
      if (!train_report.empty()) {
        std::string csv = "epoch,mse\n";
        for (std::size_t e = 0; e < report.mse_trajectory.size(); ++e)
          csv += std::to_string(e + 1) + "," + bench::format_real(report.mse_trajectory[e]) + "\n";
        bench::write_text(train_report, csv);
      }
    } else if (*ic_cmd) {
      const auto [set, classes] = load_training(ic_data);
      ic.h_grid = parse_grid(ic_grid);
      ic.layers = parse_layers(ic_layers);
      check_layers(ic.layers, set, classes);
      ic.seeds = parse_seeds(ic_seeds);
      ic.activation = ann::parse_activation(ic_data.activation);
      ic.bias = !ic_no_bias;
      ic.workers = bench::worker_count();
      const auto report = bench::run_init_compare(ic, set);
      emit(ic_out, bench::init_compare_csv(report.rows));
      const auto summary = bench::init_summary_csv(report, ic);
      if (!ic_summary.empty())
        bench::write_text(ic_summary, summary);
      else if (!ic_out.empty() && ic_out != "-")
        bench::write_text(ic_out + ".summary.csv", summary);
      else
        std::cerr << summary;
    } else if (*sc_cmd) {
      const auto cfg = sc_config.empty() ? fuzzy::FuzzyConfig{} : fuzzy::load_fuzzy_config(sc_config);
      const auto report = bench::run_segment_compare(sc_data, cfg);
      emit(sc_out, bench::segment_rows_csv(report));
      const auto summary = bench::segment_summary_csv(report);
      if (!sc_summary.empty())
        bench::write_text(sc_summary, summary);
      else if (!sc_out.empty() && sc_out != "-")
        bench::write_text(sc_out + ".summary.csv", summary);
      else
        std::cerr << summary;
    } else if (*seg_cmd) {
      const auto cfg = seg_config.empty() ? fuzzy::FuzzyConfig{} : fuzzy::load_fuzzy_config(seg_config);
      const auto image = data::load_pnm(seg_input);
      if (!seg_scores.empty()) {
        const auto scored = seg_rows ? image.transposed() : image;
        const auto s = fuzzy::score_columns(scored, cfg);
        std::string csv = "i,d,f,g_t,h_t,rho,valid\n";
        auto opt = [](const std::optional<double>& v) { return v ? bench::format_real(*v) : std::string("nan"); };
        for (Eigen::Index i = 0; i < s.rho.size(); ++i)
          csv += std::to_string(i) + "," + bench::format_real(s.features.d[i]) + "," +
                 std::to_string(s.features.f[i]) + "," + opt(s.features.g_t[i]) + "," + opt(s.features.h_t[i]) + "," +
                 bench::format_real(s.rho[i]) + "," + (s.valid[i] ? "1" : "0") + "\n";
        bench::write_text(seg_scores, csv);
      }
      const auto pieces = seg_rows ? fuzzy::segment_rows(image, seg_max, cfg) : fuzzy::segment(image, seg_max, cfg);
      Eigen::Index edge = 0;
      std::cout << "pieces=" << pieces.size() << " cuts=";
      for (std::size_t p = 0; p + 1 < pieces.size(); ++p) {
        edge += seg_rows ? pieces[p].rows() : pieces[p].cols();
        std::cout << (p ? "," : "") << edge;
      }
      std::cout << '\n';
      if (!seg_out_dir.empty()) {
        fs::create_directories(seg_out_dir);
        for (std::size_t p = 0; p < pieces.size(); ++p) {
          char name[32];
          std::snprintf(name, sizeof name, "piece_%02zu.pbm", p);
          data::save_pbm((fs::path(seg_out_dir) / name).string(), pieces[p]);
        }
      }
    } else if (*touch_cmd) {
      const auto [lo, hi] = parse_range(touch_overlap);
      corpus_spec.overlap_min = lo;
      corpus_spec.overlap_max = hi;
      corpus_spec.crop = !no_crop;
      const auto corpus = data::make_touching_corpus(data::load_dataset(touch_data), corpus_spec);
      data::write_corpus(touch_out, corpus);
      std::cout << "pairs=" << corpus.size() << " out=" << touch_out << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: usage: malformed number in an option (" << e.what() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
