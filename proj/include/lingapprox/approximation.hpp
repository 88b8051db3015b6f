#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingapprox/label.hpp"

namespace lingapprox {

enum class MeasureKind { Height, HammingComplement, Similarity, RelativeCount };

std::string_view measure_name(MeasureKind kind);
// CLI spellings: height, hamming, similarity, relcount.
std::optional<MeasureKind> measure_from_name(std::string_view name);

double measure(MeasureKind kind, const FuzzySet& target, const FuzzySet& label_set);

std::vector<FuzzySet> segment(const FuzzySet& target);

struct SearchConfig {
  MeasureKind measure = MeasureKind::HammingComplement;
  std::size_t max_clauses = 2;
  std::size_t max_modifiers_per_term = 1;
  std::size_t top_k = 5;
  double complexity_penalty = 0.0;
  // 0 picks the hardware concurrency.
  std::size_t threads = 1;
};

void validate(const SearchConfig& config);

struct SegmentScore {
  std::size_t segment;
  std::string clause;
  double value;
};

struct Approximation {
  LabelExpr expr;
  std::string text;
  double score;
  double adjusted_score;
  std::vector<SegmentScore> segment_scores;
};

// Every label the search visits, in generation order.
std::vector<LabelExpr> enumerate_labels(const Vocabulary& vocab, const SearchConfig& config);

std::vector<Approximation> approximate(const FuzzySet& target, const Vocabulary& vocab,
                                       const SearchConfig& config);

std::vector<SegmentScore> annotate_segments(const LabelExpr& expr, const FuzzySet& target,
                                            const Vocabulary& vocab, MeasureKind kind);

}  // namespace lingapprox
