#include <gtest/gtest.h>

#include <set>

#include "lingapprox/reference_sets.hpp"
#include "support.hpp"

using namespace lingapprox;
using testsupport::grid;
using testsupport::set_of;

namespace {

const Vocabulary& temp_vocab() {
  static const Vocabulary v = Vocabulary::defaults(temperature_universe());
  return v;
}

}  // namespace

TEST(Measure, Examples) {
  const auto u = grid(2);
  EXPECT_EQ(measure(MeasureKind::HammingComplement, set_of(u, {1, 0}), set_of(u, {.5, .5})), 0.5);
  EXPECT_EQ(measure(MeasureKind::Height, set_of(u, {0.3, 0.7}), set_of(u, {1, 1})), 0.7);
  EXPECT_EQ(measure(MeasureKind::RelativeCount, set_of(u, {1, 0}), set_of(u, {.5, .5})), 0.5);
  // Disjoint crisp sets: mean difference 1 over means 1 + 1.
  EXPECT_EQ(measure(MeasureKind::Similarity, set_of(u, {1, 0}), set_of(u, {0, 1})), 0.5);
  EXPECT_EQ(measure(MeasureKind::Similarity, set_of(u, {1, 0}), set_of(u, {.5, 0})), 1.0 - 0.5 / 1.5);
  EXPECT_THROW(measure(MeasureKind::RelativeCount, set_of(u, {1, 0}), set_of(u, {0, 0})), Error);
  EXPECT_THROW(measure(MeasureKind::Similarity, set_of(u, {0, 0}), set_of(u, {0, 0})), Error);
  EXPECT_THROW(measure(MeasureKind::HammingComplement, set_of(u, {1, 0}), set_of(grid(3), {0, 0, 0})),
               Error);
}

TEST(Measure, ReflexiveAndBounded) {
  std::mt19937_64 rng(31);
  const auto u = grid(15);
  for (int t = 0; t < 500; ++t) {
    auto am = testsupport::random_memberships(rng, 15);
    am[t % 15] = std::max(am[t % 15], 0.01);
    const auto a = set_of(u, am), b = set_of(u, testsupport::random_memberships(rng, 15));
    for (auto k : {MeasureKind::HammingComplement, MeasureKind::Similarity,
                   MeasureKind::RelativeCount})
      EXPECT_NEAR(measure(k, a, a), 1.0, 1e-12);
    for (auto k : {MeasureKind::Height, MeasureKind::HammingComplement, MeasureKind::Similarity,
                   MeasureKind::RelativeCount}) {
      const double v = measure(k, a, b);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(Segment, Examples) {
  const auto u = grid(5);
  EXPECT_EQ(segment(set_of(u, {0, .5, 1, .5, 0})).size(), 1u);

  const auto gap = segment(set_of(u, {1, .5, 0, .5, 1}));
  ASSERT_EQ(gap.size(), 2u);
  EXPECT_EQ(gap[0].memberships(), (std::vector<double>{1, .5, 0, 0, 0}));
  EXPECT_EQ(gap[1].memberships(), (std::vector<double>{0, 0, 0, .5, 1}));

  const auto valley = segment(set_of(u, {1, .5, .2, .5, 1}));
  ASSERT_EQ(valley.size(), 2u);
  EXPECT_EQ(valley[0].memberships(), (std::vector<double>{1, .5, .2, 0, 0}));
  EXPECT_EQ(valley[1].memberships(), (std::vector<double>{0, 0, 0, .5, 1}));

  const auto plateau = segment(set_of(grid(6), {1, .2, .2, .2, .6, 0}));
  ASSERT_EQ(plateau.size(), 2u);
  EXPECT_EQ(plateau[0].memberships(), (std::vector<double>{1, .2, .2, .2, 0, 0}));

  EXPECT_THROW(segment(set_of(u, {0, 0, 0, 0, 0})), Error);
}

TEST(Segment, PartitionProperty) {
  std::mt19937_64 rng(41);
  const auto u = grid(20);
  for (int t = 0; t < 300; ++t) {
    auto m = testsupport::random_memberships(rng, 20);
    for (auto& v : m) v = std::round(v * 4) / 4;
    m[0] = 1.0;
    const auto segs = segment(set_of(u, m));
    for (std::size_t i = 0; i < m.size(); ++i) {
      int owners = 0;
      for (const auto& s : segs) {
        if (s[i] > 0.0) {
          ++owners;
          EXPECT_EQ(s[i], m[i]);
        }
      }
      EXPECT_EQ(owners, m[i] > 0.0 ? 1 : 0) << "index " << i;
    }
    for (const auto& s : segs) EXPECT_GT(sigma_count(s), 0.0);
  }
}

TEST(Search, CountsForSmallBounds) {
  SearchConfig cfg;
  cfg.max_clauses = 1;
  cfg.max_modifiers_per_term = 0;
  EXPECT_EQ(enumerate_labels(temp_vocab(), cfg).size(), 3u);
  cfg.max_modifiers_per_term = 1;
  EXPECT_EQ(enumerate_labels(temp_vocab(), cfg).size(), 21u);
  cfg.max_clauses = 2;
  // 21 clauses plus C(21, 2) pairs for each connective.
  EXPECT_EQ(enumerate_labels(temp_vocab(), cfg).size(), 21u + 2u * 210u);
  cfg.max_clauses = 3;
  const auto all = enumerate_labels(temp_vocab(), cfg);
  std::set<std::string> texts;
  for (const auto& e : all) texts.insert(render(e));
  EXPECT_EQ(texts.size(), all.size());
}

TEST(Search, BruteForceOptimum) {
  const auto& v = temp_vocab();
  std::vector<LabelExpr> clauses;
  for (const auto& t : v.terms()) {
    clauses.push_back(LabelExpr::term(t.name));
    for (const auto& m : v.modifiers())
      clauses.push_back(LabelExpr::modified(m.name, LabelExpr::term(t.name)));
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    auto m = testsupport::random_memberships(rng, v.universe()->size());
    const auto target = set_of(v.universe(), m);
    double best = -1.0;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const auto si = evaluate(clauses[i], v);
      best = std::max(best, measure(MeasureKind::HammingComplement, target, si));
      for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto sj = evaluate(clauses[j], v);
        best = std::max(best, measure(MeasureKind::HammingComplement, target, intersect(si, sj)));
        best = std::max(best, measure(MeasureKind::HammingComplement, target, unite(si, sj)));
      }
    }
    const auto found = approximate(target, v, SearchConfig{});
    ASSERT_FALSE(found.empty());
    EXPECT_DOUBLE_EQ(found.front().score, best);
    EXPECT_EQ(measure(MeasureKind::HammingComplement, target, evaluate(found.front().expr, v)),
              found.front().score);
    for (std::size_t i = 1; i < found.size(); ++i)
      EXPECT_GE(found[i - 1].adjusted_score, found[i].adjusted_score);
  }
}

TEST(Search, ExactTermScoresOne) {
  const auto& v = temp_vocab();
  const auto vl = evaluate(parse("very large", v), v);
  const auto found = approximate(vl, v, SearchConfig{});
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front().text, "very large");
  EXPECT_EQ(found.front().score, 1.0);
}

TEST(Search, ReferenceSetsTopLabel) {
  const auto& v = temp_vocab();
  for (const auto& x : {reference_x1(v), reference_x2(v)}) {
    const auto found = approximate(x, v, SearchConfig{});
    ASSERT_FALSE(found.empty());
    EXPECT_EQ(found.front().text, "more or less medium or very large");
    ASSERT_EQ(found.front().segment_scores.size(), 2u);
    EXPECT_EQ(found.front().segment_scores[0].clause, "more or less medium");
    EXPECT_EQ(found.front().segment_scores[1].clause, "very large");
  }
}

TEST(Search, PenaltyPrefersShorterLabels) {
  const auto& v = temp_vocab();
  SearchConfig cfg;
  cfg.complexity_penalty = 1.0;
  const auto found = approximate(reference_x1(v), v, cfg);
  ASSERT_EQ(found.size(), 5u);
  for (std::size_t i = 0; i < found.size(); ++i)
    EXPECT_EQ(found[i].expr.node_count(), i < 3 ? 1u : 2u);
}

TEST(Search, Errors) {
  const auto& v = temp_vocab();
  const auto zero = FuzzySet::zeros(v.universe());
  try {
    approximate(zero, v, SearchConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyFuzzySet);
  }
  const Vocabulary empty(v.universe(), {}, default_modifiers(), default_quantifiers());
  try {
    approximate(reference_x1(v), empty, SearchConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VocabularyEmpty);
  }
  SearchConfig bad;
  bad.max_clauses = 0;
  EXPECT_THROW(approximate(reference_x1(v), v, bad), Error);
  bad.max_clauses = 5;
  EXPECT_THROW(approximate(reference_x1(v), v, bad), Error);
  bad = {};
  bad.top_k = 0;
  EXPECT_THROW(approximate(reference_x1(v), v, bad), Error);
}

TEST(Search, DeterministicAcrossThreadCounts) {
  const auto& v = temp_vocab();
  SearchConfig cfg;
  cfg.max_clauses = 3;
  cfg.top_k = 20;
  const auto base = testsupport::fingerprint(approximate(reference_x2(v), v, cfg));
  for (std::size_t th : {2u, 3u, 8u, 0u}) {
    cfg.threads = th;
    EXPECT_EQ(testsupport::fingerprint(approximate(reference_x2(v), v, cfg)), base);
  }
}

TEST(Search, EveryMeasureRuns) {
  const auto& v = temp_vocab();
  for (auto k : {MeasureKind::Height, MeasureKind::HammingComplement, MeasureKind::Similarity,
                 MeasureKind::RelativeCount}) {
    SearchConfig cfg;
    cfg.measure = k;
    const auto found = approximate(reference_x1(v), v, cfg);
    ASSERT_EQ(found.size(), 5u);
    for (const auto& a : found) {
      EXPECT_GE(a.score, 0.0);
      EXPECT_LE(a.score, 1.0);
    }
  }
}
