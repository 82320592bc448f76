#pragma once

// Mamdani inference for cut scores.
//
// Antecedents are combined with min, "not S" is 1 - mu_S, each rule clips its
// consequent set with min, clipped sets are summed pointwise and the crisp
// score is the centroid of the sum. Low scores mark good cut positions.

#include <array>
#include <string>
#include <vector>

#include "ocrkit/fuzzy/features.hpp"

namespace ocrkit::fuzzy {

/// Linear rise a->b, plateau b->c, linear fall c->d. Triangles have b == c;
/// shoulders have a == b or c == d. Infinite c, d give an open right shoulder.
struct Trapezoid {
  double a = 0, b = 0, c = 0, d = 0;

  double operator()(double x) const {
    if (x < a || x > d) return 0.0;
    if (x < b) return (x - a) / (b - a);
    if (x <= c) return 1.0;
    return (d - x) / (d - c);
  }

  void validate(const std::string& what) const;
};

enum class Term { low, medium, high };

const char* to_string(Term t);

/// Named sets over a closed universe.
struct FuzzyPartition {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::pair<Term, Trapezoid>> sets;

  bool has(Term t) const;
  double membership(Term t, double x) const;

  /// Each set valid, every probed universe point covered by some set.
  void validate() const;
};

/// Rule inputs. g_bar stands for the normalized g itself (1 - g~).
enum class Input { d, f, g_t, h_t, g_bar };

struct Antecedent {
  Input input;
  Term term;
  bool negated = false;
};

struct Rule {
  std::vector<Antecedent> when;  ///< empty for the residual "otherwise" rule
  Term then;
};

using RuleBase = std::vector<Rule>;

/// Which value rule 7's "g is not Low" tests.
enum class Rule7G { tilde, bar };

/// The fixed nine-rule base. Rules 1-3 conclude Low, 4-8 Medium, 9 High.
RuleBase default_rules(Rule7G rule7 = Rule7G::tilde);

/// Checks the structural invariants of the nine-rule base.
void validate_rules(const RuleBase& rules);

struct Partitions {
  FuzzyPartition d;
  FuzzyPartition f;
  FuzzyPartition g_t;
  FuzzyPartition h_t;
  FuzzyPartition rho;
};

/// Defaults: trapezoids for d, shared Low/Medium/High for g~, h~ and rho,
/// two sets for the crossing count over 0..rows.
Partitions default_partitions(int rows);

struct ColumnInputs {
  double d = 0;
  double f = 0;
  double g_t = 0;
  double h_t = 0;
};

/// Firing strength per rule; the residual rule gets 1 - max of the others.
std::vector<double> rule_strengths(const ColumnInputs& in, const Partitions& parts, const RuleBase& rules);

/// Crisp cut score rho in [0, 1]; 1 when nothing fires. The centroid uses
/// trapezoid weights over `resolution` evenly spaced points.
double infer(const ColumnInputs& in, const Partitions& parts, const RuleBase& rules, int resolution = 201);

}  // namespace ocrkit::fuzzy
