#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lingapprox/cardinality.hpp"
#include "lingapprox/label.hpp"

namespace lingapprox {

struct AssignOptions {
  double threshold = 0.0;
  // Top two compatibilities closer than this are reported together.
  double tie_tolerance = 0.05;
};

struct QuantifierAssignment {
  // One name, a tied pair in vocabulary order, or empty for no quantifier.
  std::vector<std::string> names;
  double compatibility = 0.0;

  bool matched() const { return !names.empty(); }
  std::string label() const;
};

// Picks from per-quantifier compatibilities listed in vocabulary order.
QuantifierAssignment select_quantifier(const std::vector<double>& compat,
                                       const std::vector<QuantifierDef>& quantifiers,
                                       const AssignOptions& opts = {});

QuantifierAssignment assign_quantifier(double p, const std::vector<QuantifierDef>& quantifiers,
                                       const AssignOptions& opts = {});

enum class QuantifyMethod { Sigma, Fuzzy };

std::string_view method_name(QuantifyMethod m);

struct QuantifyOptions {
  AssignOptions assign;
  std::string subject = "X";
  // Fuzzy method: divide a subnormal FECount by its height before matching.
  bool normalize = false;
  // Fuzzy method: restrict alpha to the levels where A and X partially
  // overlap. Off means the full (0, 1] range.
  bool cap_levels = true;
};

struct QuantifiedProposition {
  QuantifierAssignment quantifier;
  std::string subject;
  LabelExpr clause;
  std::string clause_text;
  double compatibility;
  QuantifyMethod method;
  bool whole_label;
  // Sigma method: relative sigma count. Fuzzy method: the FECount peak.
  double proportion;
  std::vector<double> scores;

  std::string sentence() const;
};

// Level ceiling used by the fuzzy method:
// min(height(A and X), height(max(X - A, 0))), or 0 when either vanishes.
double overlap_ceiling(const FuzzySet& a, const FuzzySet& x);

FuzzyCardinality matching_cardinality(const FuzzySet& a, const FuzzySet& x, bool cap_levels);

double fuzzy_compatibility(const FuzzyCardinality& fe, const QuantifierDef& q, bool normalize);

std::vector<QuantifiedProposition> quantify_sigma(const FuzzySet& target, const LabelExpr& label,
                                                  const Vocabulary& vocab,
                                                  const QuantifyOptions& opts = {});

std::vector<QuantifiedProposition> quantify_fuzzy(const FuzzySet& target, const LabelExpr& label,
                                                  const Vocabulary& vocab,
                                                  const QuantifyOptions& opts = {});

double truth_of(std::string_view quantifier, const LabelExpr& clause, const FuzzySet& target,
                const Vocabulary& vocab);

// Clause propositions joined with "; " (the whole-label one when alone).
std::string summary(const std::vector<QuantifiedProposition>& props);

}  // namespace lingapprox
