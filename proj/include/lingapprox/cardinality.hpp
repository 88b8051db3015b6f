#pragma once

#include <optional>
#include <vector>

#include "lingapprox/fuzzy_set.hpp"

namespace lingapprox {

enum class CardinalityKind { Absolute, Relative };
enum class Completion { AtLeast, AtMost, None };

struct CardinalityPoint {
  double value;
  double membership;

  bool operator==(const CardinalityPoint&) const = default;
};

// Discrete fuzzy number over counts (absolute) or proportions (relative).
class FuzzyCardinality {
 public:
  FuzzyCardinality(CardinalityKind kind, Completion completion,
                   std::vector<CardinalityPoint> support);

  CardinalityKind kind() const { return kind_; }
  Completion completion() const { return completion_; }
  const std::vector<CardinalityPoint>& support() const { return support_; }

  // At-least: membership of the smallest support value >= v. At-most:
  // membership of the largest support value <= v. None: exact support
  // values only.
  double membership_at(double v) const;

  double height() const;

 private:
  CardinalityKind kind_;
  Completion completion_;
  std::vector<CardinalityPoint> support_;
};

struct LevelOptions {
  // Restricts alpha to (0, ceiling]. Unset means (0, 1].
  std::optional<double> ceiling;
};

// Distinct nonzero memberships of a (plus its complement when asked) and x.
std::vector<double> alpha_grid(const FuzzySet& a, const FuzzySet* x,
                               bool with_complement);

FuzzyCardinality fg_count(const FuzzySet& a, const FuzzySet* relative_to = nullptr,
                          const LevelOptions& opts = {});
FuzzyCardinality fl_count(const FuzzySet& a, const FuzzySet* relative_to = nullptr,
                          const LevelOptions& opts = {});
FuzzyCardinality fe_count(const FuzzySet& a, const FuzzySet* relative_to = nullptr,
                          const LevelOptions& opts = {});

}  // namespace lingapprox
