#pragma once

// Fuzzy segmenter configuration and its plain-text key/value file format.
//
//   # comment
//   d.low    = 0 0 0.15 0.35     trapezoid corners a b c d for a set
//   g.medium = 0.3 0.5 0.5 0.7   prefixes: d, f, g, h, rho, gh (g, h and rho at once)
//   f.high   = 2 4 m m           'm' stands for the open right end (pattern height)
//   peak_mode  = global | local
//   tie_break  = center | index
//   rule7_g    = tilde | bar
//   resolution = 201
//
// Keys may appear in any order; later lines override earlier ones.

#include <iosfwd>
#include <string>

#include "ocrkit/fuzzy/mamdani.hpp"

namespace ocrkit::fuzzy {

enum class TieBreak {
  center_then_index,  ///< prefer the column closer to the center, then the lower index
  index,              ///< lower index only
};

struct FuzzyConfig {
  Partitions partitions = default_partitions(1);
  PeakMode peak_mode = PeakMode::global;
  TieBreak tie_break = TieBreak::center_then_index;
  Rule7G rule7 = Rule7G::tilde;
  int resolution = 201;

  /// Partitions with the crossing-count universe set to 0..rows.
  Partitions partitions_for(int rows) const;
  RuleBase rules() const { return default_rules(rule7); }
  void validate() const;
};

FuzzyConfig parse_fuzzy_config(std::istream& in);
FuzzyConfig load_fuzzy_config(const std::string& path);
void write_fuzzy_config(std::ostream& out, const FuzzyConfig& cfg);

}  // namespace ocrkit::fuzzy
