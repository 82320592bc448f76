#include "ocrkit/bench/segment_compare.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "ocrkit/bench/report.hpp"
#include "ocrkit/data/pnm.hpp"

namespace ocrkit::bench {
namespace {

constexpr std::array kMethods{fuzzy::CutMethod::fuzzy, fuzzy::CutMethod::g_only, fuzzy::CutMethod::h_only};

void score_sample(SegmentReport& report, const std::string& file, const GlyphImage* image, Eigen::Index lo,
                  Eigen::Index hi, const std::string& load_error, const fuzzy::FuzzyConfig& cfg) {
  for (std::size_t m = 0; m < kMethods.size(); ++m) {
    SegmentRow row{file, kMethods[m], -1, lo, hi, false, "ok"};
    if (!image) {
      row.status = load_error;
    } else {
      try {
        row.cut = fuzzy::find_cut(*image, kMethods[m], cfg);
        row.correct = row.cut >= lo - kCutTolerance && row.cut <= hi + kCutTolerance;
      } catch (const Error& e) {
        row.status = e.what();
      }
    }
    report.accuracy[m].total += 1;
    report.accuracy[m].correct += row.correct;
    report.rows.push_back(std::move(row));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') c = ' ';
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

SegmentReport empty_report() {
  SegmentReport r;
  for (std::size_t m = 0; m < kMethods.size(); ++m) r.accuracy[m].method = kMethods[m];
  return r;
}

}  // namespace

SegmentReport run_segment_compare(const std::vector<data::TouchingPair>& corpus, const fuzzy::FuzzyConfig& cfg) {
  auto report = empty_report();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "pair_%04zu.pbm", i);
    score_sample(report, name, &corpus[i].image, corpus[i].lo, corpus[i].hi, {}, cfg);
  }
  return report;
}

SegmentReport run_segment_compare(const std::string& corpus_dir, const fuzzy::FuzzyConfig& cfg) {
  auto report = empty_report();
  for (const auto& entry : data::read_manifest(corpus_dir)) {
    try {
      const auto image = data::load_pnm((std::filesystem::path(corpus_dir) / entry.file).string());
      score_sample(report, entry.file, &image, entry.lo, entry.hi, {}, cfg);
    } catch (const Error& e) {
      score_sample(report, entry.file, nullptr, entry.lo, entry.hi, e.what(), cfg);
    }
  }
  return report;
}

std::string segment_rows_csv(const SegmentReport& report) {
  std::ostringstream out;
  out << "file,method,cut,lo,hi,correct,status\n";
  for (const auto& r : report.rows)
    out << csv_field(r.file) << ',' << fuzzy::to_string(r.method) << ',' << r.cut << ',' << r.lo << ',' << r.hi << ','
        << (r.correct ? 1 : 0) << ',' << csv_field(r.status) << '\n';
  return out.str();
}

std::string segment_summary_csv(const SegmentReport& report) {
  std::ostringstream out;
  out << "method,correct,total,accuracy\n";
  for (const auto& a : report.accuracy)
    out << fuzzy::to_string(a.method) << ',' << a.correct << ',' << a.total << ',' << format_real(a.accuracy())
        << '\n';
  return out.str();
}

}  // namespace ocrkit::bench
