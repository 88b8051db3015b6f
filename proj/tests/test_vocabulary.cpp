#include <gtest/gtest.h>

#include <cmath>

#include "lingapprox/reference_sets.hpp"
#include "support.hpp"

using namespace lingapprox;
using testsupport::grid;
using testsupport::set_of;

namespace {

UniversePtr pts(std::vector<double> p) { return make_universe(Universe("u", std::move(p))); }

}  // namespace

TEST(SampleTerm, Shapes) {
  EXPECT_EQ(sample_term({"t", Triangular{0, 5, 10}}, pts({0, 5, 10})).memberships(),
            (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(shape_membership(Trapezoidal{0, 0, 2, 4}, 3.0), 0.5);
  EXPECT_EQ(shape_membership(Trapezoidal{0, 0, 2, 4}, 0.0), 1.0);
  EXPECT_EQ(shape_membership(Triangular{0.98, 1, 1}, 1.0), 1.0);
  EXPECT_EQ(shape_membership(Triangular{0, 0, 0.05}, 0.0), 1.0);
  const auto e = sample_term({"e", Explicit{{0.1, 0.2, 0.3}}}, pts({0, 1, 2}));
  EXPECT_EQ(e.memberships(), (std::vector<double>{0.1, 0.2, 0.3}));
}

TEST(SampleTerm, Errors) {
  std::vector<double> g(11);
  for (int i = 0; i <= 10; ++i) g[i] = i;
  try {
    sample_term({"far", Triangular{100, 110, 120}}, pts(g));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ShapeOutOfRange);
  }
  try {
    sample_term({"e", Explicit{{0.1, 0.2}}}, pts({0, 1, 2}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::LengthMismatch);
  }
  EXPECT_THROW(sample_term({"bad", Triangular{5, 2, 8}}, pts(g)), Error);
}

TEST(Modifiers, Examples) {
  const auto u = grid(1 + 1);
  const auto half = set_of(u, {0.5, 0.3});
  EXPECT_EQ(apply_modifier(ModifierRule::Very, half)[0], 0.25);
  EXPECT_EQ(apply_modifier(ModifierRule::Not, half)[1], 0.7);
  EXPECT_EQ(apply_modifier(ModifierRule::MoreLess, set_of(u, {0.25, 1.0}))[0], 0.5);
}

TEST(Modifiers, IndeedContrast) {
  const auto u = grid(3);
  EXPECT_EQ(apply_modifier(ModifierRule::Indeed, set_of(u, {0.0, 0.5, 1.0})).memberships(),
            (std::vector<double>{0.0, 0.5, 1.0}));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(1e-6, 0.5 - 1e-6);
  for (int t = 0; t < 500; ++t) {
    const double lo = d(rng), hi = 1.0 - d(rng);
    const auto r = apply_modifier(ModifierRule::Indeed, set_of(u, {lo, hi, 0.5}));
    EXPECT_LT(r[0], lo);
    EXPECT_GT(r[1], hi);
  }
}

TEST(Modifiers, AboveBelowAnchorOnPeak) {
  const auto u = grid(6);
  const auto a = set_of(u, {0.2, 0.6, 1.0, 1.0, 0.4, 0.1});
  EXPECT_EQ(apply_modifier(ModifierRule::Above, a).memberships(),
            (std::vector<double>{0, 0, 0, 0, 0.6, 0.9}));
  const auto below = apply_modifier(ModifierRule::Below, a).memberships();
  EXPECT_EQ(below[0], 0.8);
  EXPECT_DOUBLE_EQ(below[1], 0.4);
  EXPECT_EQ((std::vector<double>(below.begin() + 2, below.end())),
            (std::vector<double>{0, 0, 0, 0}));
  const auto z = set_of(u, std::vector<double>(6, 0.0));
  EXPECT_EQ(apply_modifier(ModifierRule::Above, z), z);
  EXPECT_EQ(apply_modifier(ModifierRule::Below, z), z);
}

TEST(Modifiers, RuleNames) {
  EXPECT_EQ(modifier_rule_from_name("more or less"), ModifierRule::MoreLess);
  EXPECT_EQ(modifier_rule_from_name("more_less"), ModifierRule::MoreLess);
  try {
    modifier_rule_from_name("extremely");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownModifier);
  }
}

TEST(Quantifiers, DefaultsCoverAndOrder) {
  const auto qs = default_quantifiers();
  ASSERT_EQ(qs.size(), 7u);
  EXPECT_EQ(qs.front().name, "none");
  EXPECT_EQ(qs.back().name, "all");
  EXPECT_EQ(qs.back().membership(1.0), 1.0);
  EXPECT_EQ(qs.front().membership(0.0), 1.0);
  for (std::size_t i = 1; i < qs.size(); ++i) EXPECT_LT(qs[i - 1].peak(), qs[i].peak());
  for (int k = 0; k <= 100000; ++k) {
    const double p = k / 100000.0;
    double best = 0.0;
    for (const auto& q : qs) {
      const double m = q.membership(p);
      EXPECT_GE(m, 0.0);
      EXPECT_LE(m, 1.0);
      best = std::max(best, m);
    }
    EXPECT_GT(best, 0.0) << "dead zone at " << p;
  }
}

TEST(Vocabulary, DefaultTermsOnTemperature) {
  const auto u = temperature_universe();
  const auto v = Vocabulary::defaults(u);
  const auto& small = v.term_set("small");
  const auto& medium = v.term_set("medium");
  const auto& large = v.term_set("large");
  EXPECT_EQ(small[0], 1.0);
  EXPECT_EQ(small[10], 1.0);
  EXPECT_EQ(small[25], 0.5);
  EXPECT_EQ(small[40], 0.0);
  EXPECT_EQ(medium[50], 1.0);
  EXPECT_EQ(medium[35], 0.5);
  EXPECT_EQ(large[75], 0.5);
  EXPECT_EQ(large[100], 1.0);
  EXPECT_THROW(v.term_set("huge"), Error);
}

TEST(Vocabulary, AliasesAndCollisions) {
  const auto u = grid(5);
  const auto v = Vocabulary::defaults(u);
  ASSERT_NE(v.find_modifier("more/less"), nullptr);
  EXPECT_EQ(v.find_modifier("more/less")->name, "more or less");
  ASSERT_NE(v.find_quantifier("usually"), nullptr);
  EXPECT_EQ(v.find_quantifier("usually")->name, "most");
  EXPECT_EQ(v.find_quantifier("lots"), nullptr);

  auto terms = default_terms(*u);
  terms.push_back({"or", Triangular{0, 1, 2}});
  EXPECT_THROW(Vocabulary(u, terms, default_modifiers(), default_quantifiers()), Error);
  auto dup = default_terms(*u);
  dup.push_back(dup.front());
  EXPECT_THROW(Vocabulary(u, dup, default_modifiers(), default_quantifiers()), Error);
  auto clash = default_terms(*u);
  clash.push_back({"very", Triangular{0, 1, 2}});
  EXPECT_THROW(Vocabulary(u, clash, default_modifiers(), default_quantifiers()), Error);
}
