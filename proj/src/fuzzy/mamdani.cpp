#include "ocrkit/fuzzy/mamdani.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ocrkit::fuzzy {

void Trapezoid::validate(const std::string& what) const {
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d) || !(a <= b && b <= c && c <= d))
    throw InvalidArgument(what + ": membership corners must satisfy a <= b <= c <= d");
}

const char* to_string(Term t) {
  switch (t) {
    case Term::low: return "low";
    case Term::medium: return "medium";
    case Term::high: return "high";
  }
  return "?";
}

bool FuzzyPartition::has(Term t) const {
  return std::any_of(sets.begin(), sets.end(), [t](const auto& s) { return s.first == t; });
}

double FuzzyPartition::membership(Term t, double x) const {
  for (const auto& [term, shape] : sets)
    if (term == t) return shape(x);
  throw InvalidArgument("partition '" + name + "' has no set '" + to_string(t) + "'");
}

void FuzzyPartition::validate() const {
  if (sets.empty()) throw InvalidArgument("partition '" + name + "' has no sets");
  for (const auto& [term, shape] : sets) shape.validate(name + "." + to_string(term));
  constexpr int probes = 1000;
  for (int k = 0; k <= probes; ++k) {
    const double x = lo + (hi - lo) * k / probes;
    const bool covered = std::any_of(sets.begin(), sets.end(), [x](const auto& s) { return s.second(x) > 0.0; });
    if (!covered) throw InvalidArgument("partition '" + name + "' leaves " + std::to_string(x) + " uncovered");
  }
}

RuleBase default_rules(Rule7G rule7) {
  using enum Input;
  using enum Term;
  const Input g7 = rule7 == Rule7G::tilde ? g_t : g_bar;
  return {
      {{{d, low}, {g_t, high, true}, {h_t, high, true}, {f, low}}, low},
      {{{g_t, low}, {h_t, low}, {d, medium}, {f, low}}, low},
      {{{g_t, low}, {d, high, true}, {h_t, low, true}, {f, low}}, low},
      {{{d, low}, {g_t, high, true}, {h_t, high, true}, {f, high}}, medium},
      {{{g_t, low}, {h_t, low}, {d, medium}, {f, high}}, medium},
      {{{g_t, low}, {d, high, true}, {h_t, low, true}, {f, high}}, medium},
      {{{h_t, low}, {d, high, true}, {g7, low, true}, {f, low}}, medium},
      {{{d, medium}, {g_t, medium}, {h_t, medium}, {f, low}}, medium},
      {{}, high},
  };
}

void validate_rules(const RuleBase& rules) {
  if (rules.size() != 9) throw InvalidArgument("the rule base must have exactly 9 rules");
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const Term expected = r < 3 ? Term::low : r < 8 ? Term::medium : Term::high;
    if (rules[r].then != expected) throw InvalidArgument("rule " + std::to_string(r + 1) + " has the wrong consequent");
    if ((r == 8) != rules[r].when.empty())
      throw InvalidArgument("only rule 9 may be the residual rule, and it must be last");
  }
}

Partitions default_partitions(int rows) {
  const std::vector<std::pair<Term, Trapezoid>> shared = {
      {Term::low, {0, 0, 0.2, 0.4}}, {Term::medium, {0.3, 0.5, 0.5, 0.7}}, {Term::high, {0.6, 0.8, 1, 1}}};
  const double inf = std::numeric_limits<double>::infinity();
  Partitions p;
  p.d = {"d", 0, 1, {{Term::low, {0, 0, 0.15, 0.35}}, {Term::medium, {0.2, 0.4, 0.4, 0.6}}, {Term::high, {0.5, 0.7, 1, 1}}}};
  p.f = {"f", 0, static_cast<double>(std::max(rows, 1)), {{Term::low, {0, 0, 2, 4}}, {Term::high, {2, 4, inf, inf}}}};
  p.g_t = {"g", 0, 1, shared};
  p.h_t = {"h", 0, 1, shared};
  p.rho = {"rho", 0, 1, shared};
  return p;
}

namespace {

double input_value(const ColumnInputs& in, Input which) {
  switch (which) {
    case Input::d: return in.d;
    case Input::f: return in.f;
    case Input::g_t: return in.g_t;
    case Input::h_t: return in.h_t;
    case Input::g_bar: return 1.0 - in.g_t;
  }
  return 0.0;
}

const FuzzyPartition& input_partition(const Partitions& p, Input which) {
  switch (which) {
    case Input::d: return p.d;
    case Input::f: return p.f;
    case Input::g_t:
    case Input::g_bar: return p.g_t;
    case Input::h_t: return p.h_t;
  }
  return p.d;
}

}  // namespace

std::vector<double> rule_strengths(const ColumnInputs& in, const Partitions& parts, const RuleBase& rules) {
  std::vector<double> strength(rules.size(), 0.0);
  double fired = 0.0;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    if (rules[r].when.empty()) continue;
    double s = 1.0;
    for (const auto& ante : rules[r].when) {
      const double mu = input_partition(parts, ante.input).membership(ante.term, input_value(in, ante.input));
      s = std::min(s, ante.negated ? 1.0 - mu : mu);
    }
    strength[r] = s;
    fired = std::max(fired, s);
  }
  for (std::size_t r = 0; r < rules.size(); ++r)
    if (rules[r].when.empty()) strength[r] = std::max(0.0, 1.0 - fired);
  return strength;
}

double infer(const ColumnInputs& in, const Partitions& parts, const RuleBase& rules, int resolution) {
  if (resolution < 2) throw InvalidArgument("output resolution must be at least 2");
  const auto strength = rule_strengths(in, parts, rules);
  const double lo = parts.rho.lo;
  const double span = parts.rho.hi - parts.rho.lo;
  double mass = 0.0;
  double moment = 0.0;
  for (int k = 0; k < resolution; ++k) {
    const double u = lo + span * k / (resolution - 1);
    double aggregate = 0.0;
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (strength[r] > 0.0) aggregate += std::min(strength[r], parts.rho.membership(rules[r].then, u));
    const double weight = k == 0 || k == resolution - 1 ? 0.5 : 1.0;
    mass += weight * aggregate;
    moment += weight * u * aggregate;
  }
  return mass > 0.0 ? moment / mass : 1.0;
}

}  // namespace ocrkit::fuzzy
