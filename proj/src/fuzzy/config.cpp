#include "ocrkit/fuzzy/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ocrkit::fuzzy {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Term parse_term(const std::string& s) {
  if (s == "low") return Term::low;
  if (s == "medium") return Term::medium;
  if (s == "high") return Term::high;
  throw InvalidArgument("unknown fuzzy set '" + s + "'");
}

double parse_corner(const std::string& token) {
  if (token == "m") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(token, &used);
  if (used != token.size()) throw InvalidArgument("bad number '" + token + "'");
  return v;
}

void set_shape(FuzzyPartition& p, Term term, const Trapezoid& shape) {
  for (auto& [t, s] : p.sets) {
    if (t == term) {
      s = shape;
      return;
    }
  }
  p.sets.emplace_back(term, shape);
}

void write_corner(std::ostream& out, double v) {
  if (std::isinf(v))
    out << 'm';
  else
    out << v;
}

}  // namespace

Partitions FuzzyConfig::partitions_for(int rows) const {
  Partitions p = partitions;
  p.f.hi = static_cast<double>(std::max(rows, 1));
  return p;
}

void FuzzyConfig::validate() const {
  for (const auto* p : {&partitions.d, &partitions.f, &partitions.g_t, &partitions.h_t, &partitions.rho}) p->validate();
  for (const auto* p : {&partitions.d, &partitions.g_t, &partitions.h_t, &partitions.rho})
    for (auto t : {Term::low, Term::medium, Term::high})
      if (!p->has(t)) throw InvalidArgument("partition '" + p->name + "' needs a '" + to_string(t) + "' set");
  for (auto t : {Term::low, Term::high})
    if (!partitions.f.has(t)) throw InvalidArgument(std::string("partition 'f' needs a '") + to_string(t) + "' set");
  if (resolution < 2) throw InvalidArgument("resolution must be at least 2");
}

FuzzyConfig parse_fuzzy_config(std::istream& in) {
  FuzzyConfig cfg;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value' in fuzzy config", line_start);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      if (key == "peak_mode") {
        if (value != "global" && value != "local") throw InvalidArgument("peak_mode must be global or local");
        cfg.peak_mode = value == "global" ? PeakMode::global : PeakMode::local;
      } else if (key == "tie_break") {
        if (value != "center" && value != "index") throw InvalidArgument("tie_break must be center or index");
        cfg.tie_break = value == "center" ? TieBreak::center_then_index : TieBreak::index;
      } else if (key == "rule7_g") {
        if (value != "tilde" && value != "bar") throw InvalidArgument("rule7_g must be tilde or bar");
        cfg.rule7 = value == "tilde" ? Rule7G::tilde : Rule7G::bar;
      } else if (key == "resolution") {
        cfg.resolution = std::stoi(value);
      } else if (const auto dot = key.find('.'); dot != std::string::npos) {
        const auto feature = key.substr(0, dot);
        const auto term = parse_term(key.substr(dot + 1));
        std::istringstream corners(value);
        std::string a, b, c, d, extra;
        if (!(corners >> a >> b >> c >> d) || (corners >> extra))
          throw InvalidArgument("'" + key + "' needs exactly four corners");
        const Trapezoid shape{parse_corner(a), parse_corner(b), parse_corner(c), parse_corner(d)};
        auto& p = cfg.partitions;
        if (feature == "d") set_shape(p.d, term, shape);
        else if (feature == "f") {
          if (term == Term::medium) throw InvalidArgument("the crossing count has only low and high sets");
          set_shape(p.f, term, shape);
        } else if (feature == "g") set_shape(p.g_t, term, shape);
        else if (feature == "h") set_shape(p.h_t, term, shape);
        else if (feature == "rho") set_shape(p.rho, term, shape);
        else if (feature == "gh") {
          set_shape(p.g_t, term, shape);
          set_shape(p.h_t, term, shape);
          set_shape(p.rho, term, shape);
        } else {
          throw InvalidArgument("unknown feature '" + feature + "'");
        }
      } else {
        throw InvalidArgument("unknown key '" + key + "'");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("fuzzy config: ") + e.what(), line_start);
    } catch (const std::logic_error&) {
      throw ParseError("fuzzy config: bad number in '" + key + "'", line_start);
    }
  }
  cfg.validate();
  return cfg;
}

FuzzyConfig load_fuzzy_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fuzzy config '" + path + "'");
  return parse_fuzzy_config(in);
}

void write_fuzzy_config(std::ostream& out, const FuzzyConfig& cfg) {
  const auto& p = cfg.partitions;
  for (const auto& [prefix, part] : {std::pair{"d", &p.d}, {"f", &p.f}, {"g", &p.g_t}, {"h", &p.h_t}, {"rho", &p.rho}}) {
    for (const auto& [term, s] : part->sets) {
      out << prefix << '.' << to_string(term) << " =";
      for (double v : {s.a, s.b, s.c, s.d}) {
        out << ' ';
        write_corner(out, v);
      }
      out << '\n';
    }
  }
  out << "peak_mode = " << (cfg.peak_mode == PeakMode::global ? "global" : "local") << '\n';
  out << "tie_break = " << (cfg.tie_break == TieBreak::center_then_index ? "center" : "index") << '\n';
  out << "rule7_g = " << (cfg.rule7 == Rule7G::tilde ? "tilde" : "bar") << '\n';
  out << "resolution = " << cfg.resolution << '\n';
}

}  // namespace ocrkit::fuzzy
