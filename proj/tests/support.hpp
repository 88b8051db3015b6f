#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lingapprox/approximation.hpp"
#include "lingapprox/cardinality.hpp"
#include "lingapprox/label.hpp"

namespace testsupport {

using namespace lingapprox;

inline UniversePtr grid(std::size_t n) {
  std::vector<double> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<double>(i);
  return make_universe(Universe("grid", pts));
}

inline FuzzySet set_of(const UniversePtr& u, std::vector<double> mu) {
  return FuzzySet(u, std::move(mu));
}

// Brute-force alpha-level oracle. Every distinct nonzero value of a, 1 - a
// and x becomes a level; each membership is a supremum taken by scanning all
// levels and recounting the cuts from scratch.
class CardinalityOracle {
 public:
  CardinalityOracle(const FuzzySet& a, const FuzzySet* x, std::optional<double> ceiling = {})
      : a_(a.memberships()) {
    if (x) x_ = x->memberships();
    std::vector<double> raw;
    for (double v : a_) raw.push_back(v), raw.push_back(1.0 - v);
    for (double v : x_) raw.push_back(v);
    for (double v : raw) {
      if (v <= 0.0) continue;
      if (ceiling && v > *ceiling) continue;
      if (std::find(levels_.begin(), levels_.end(), v) == levels_.end()) levels_.push_back(v);
    }
    if (ceiling && std::find(levels_.begin(), levels_.end(), *ceiling) == levels_.end()) {
      bool above = false;
      for (double v : raw) above = above || v > *ceiling;
      if (above) levels_.push_back(*ceiling);
    }
  }

  std::size_t n() const { return a_.size(); }

  std::size_t count_a(double lv) const {
    std::size_t c = 0;
    for (double v : a_) if (v >= lv) ++c;
    return c;
  }
  std::size_t count_not_a(double lv) const {
    std::size_t c = 0;
    for (double v : a_) if (1.0 - v >= lv) ++c;
    return c;
  }
  std::size_t count_x(double lv) const {
    std::size_t c = 0;
    for (double v : x_) if (v >= lv) ++c;
    return c;
  }
  std::size_t count_a_and_x(double lv) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) if (a_[i] >= lv && x_[i] >= lv) ++c;
    return c;
  }
  std::size_t count_x_outside_not_a(double lv) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) if (x_[i] >= lv && !(1.0 - a_[i] >= lv)) ++c;
    return c;
  }

  double fg_abs(std::size_t c) const {
    double best = c == 0 ? 1.0 : 0.0;
    for (double lv : levels_) if (count_a(lv) >= c) best = std::max(best, lv);
    return best;
  }
  double fl_abs(std::size_t c) const {
    double best = c == n() ? 1.0 : 0.0;
    for (double lv : levels_) if (n() - count_not_a(lv) <= c) best = std::max(best, lv);
    return best;
  }

  std::optional<double> ratio(double lv) const {
    const auto d = count_x(lv);
    if (d == 0) return std::nullopt;
    return static_cast<double>(count_a_and_x(lv)) / static_cast<double>(d);
  }
  std::optional<double> outside_ratio(double lv) const {
    const auto d = count_x(lv);
    if (d == 0) return std::nullopt;
    return static_cast<double>(count_x_outside_not_a(lv)) / static_cast<double>(d);
  }

  bool any_level_used() const {
    for (double lv : levels_) if (ratio(lv)) return true;
    return false;
  }

  std::vector<double> fg_rel_values() const {
    std::vector<double> v{0.0};
    for (double lv : levels_) if (auto r = ratio(lv)) v.push_back(*r);
    return uniq(v);
  }
  std::vector<double> fl_rel_values() const {
    std::vector<double> v{1.0};
    for (double lv : levels_) if (auto r = outside_ratio(lv)) v.push_back(*r);
    return uniq(v);
  }

  double fg_rel(double p) const {
    double best = p == 0.0 ? 1.0 : 0.0;
    for (double lv : levels_) if (auto r = ratio(lv); r && *r >= p) best = std::max(best, lv);
    return best;
  }
  double fl_rel(double p) const {
    double best = p == 1.0 ? 1.0 : 0.0;
    for (double lv : levels_)
      if (auto r = outside_ratio(lv); r && *r <= p) best = std::max(best, lv);
    return best;
  }

 private:
  static std::vector<double> uniq(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  std::vector<double> a_, x_;
  std::vector<double> levels_;
};

// Compares fg/fl/fe against the oracle; returns an empty string on success.
inline std::string check_against_oracle(const FuzzySet& a, const FuzzySet* x,
                                        std::optional<double> ceiling = {}) {
  const CardinalityOracle o(a, x, ceiling);
  LevelOptions opts;
  opts.ceiling = ceiling;
  auto mismatch = [](const char* what, double v, double got, double want) {
    return std::string(what) + " at " + std::to_string(v) + ": got " + std::to_string(got) +
           " want " + std::to_string(want);
  };
  const auto fg = fg_count(a, x, opts);
  const auto fl = fl_count(a, x, opts);
  const auto fe = fe_count(a, x, opts);
  if (!x) {
    if (fg.support().size() != o.n() + 1 || fl.support().size() != o.n() + 1 ||
        fe.support().size() != o.n() + 1)
      return "absolute support size";
    for (std::size_t c = 0; c <= o.n(); ++c) {
      const double v = static_cast<double>(c);
      const double g = o.fg_abs(c), l = o.fl_abs(c);
      if (fg.support()[c].value != v || fg.support()[c].membership != g)
        return mismatch("fg", v, fg.support()[c].membership, g);
      if (fl.support()[c].value != v || fl.support()[c].membership != l)
        return mismatch("fl", v, fl.support()[c].membership, l);
      if (fe.support()[c].value != v || fe.support()[c].membership != std::min(g, l))
        return mismatch("fe", v, fe.support()[c].membership, std::min(g, l));
    }
    return {};
  }
  const auto gv = o.fg_rel_values();
  const auto lv = o.fl_rel_values();
  if (fg.support().size() != gv.size()) return "relative fg support size";
  for (std::size_t i = 0; i < gv.size(); ++i)
    if (fg.support()[i].value != gv[i] || fg.support()[i].membership != o.fg_rel(gv[i]))
      return mismatch("fg_rel", gv[i], fg.support()[i].membership, o.fg_rel(gv[i]));
  if (fl.support().size() != lv.size()) return "relative fl support size";
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (fl.support()[i].value != lv[i] || fl.support()[i].membership != o.fl_rel(lv[i]))
      return mismatch("fl_rel", lv[i], fl.support()[i].membership, o.fl_rel(lv[i]));
  std::vector<double> ev = gv;
  ev.insert(ev.end(), lv.begin(), lv.end());
  std::sort(ev.begin(), ev.end());
  ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
  if (fe.support().size() != ev.size()) return "relative fe support size";
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double want = std::min(o.fg_rel(ev[i]), o.fl_rel(ev[i]));
    if (fe.support()[i].value != ev[i] || fe.support()[i].membership != want)
      return mismatch("fe_rel", ev[i], fe.support()[i].membership, want);
  }
  return {};
}

inline std::vector<double> random_memberships(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& m : v) m = u(rng);
  return v;
}

inline std::vector<double> random_crisp(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution b(0.5);
  std::vector<double> v(n);
  for (auto& m : v) m = b(rng) ? 1.0 : 0.0;
  return v;
}

inline LabelExpr random_clause(std::mt19937_64& rng, const Vocabulary& vocab,
                               std::size_t max_mods) {
  std::uniform_int_distribution<std::size_t> pick_t(0, vocab.terms().size() - 1);
  std::uniform_int_distribution<std::size_t> pick_m(0, vocab.modifiers().size() - 1);
  std::uniform_int_distribution<std::size_t> mods(0, max_mods);
  LabelExpr e = LabelExpr::term(vocab.terms()[pick_t(rng)].name);
  for (std::size_t k = mods(rng); k > 0; --k)
    e = LabelExpr::modified(vocab.modifiers()[pick_m(rng)].name, e);
  return e;
}

// Arbitrary AST: any nesting, modifiers over composites included.
inline LabelExpr random_ast(std::mt19937_64& rng, const Vocabulary& vocab, std::size_t depth) {
  std::uniform_int_distribution<int> kind(0, depth == 0 ? 0 : 2);
  switch (kind(rng)) {
    case 1: {
      std::uniform_int_distribution<std::size_t> m(0, vocab.modifiers().size() - 1);
      return LabelExpr::modified(vocab.modifiers()[m(rng)].name,
                                 random_ast(rng, vocab, depth - 1));
    }
    case 2: {
      std::bernoulli_distribution b(0.5);
      const auto c = b(rng) ? Connective::And : Connective::Or;
      auto l = random_ast(rng, vocab, depth - 1);
      return LabelExpr::composite(l, c, random_ast(rng, vocab, depth - 1));
    }
    default: {
      std::uniform_int_distribution<std::size_t> t(0, vocab.terms().size() - 1);
      return LabelExpr::term(vocab.terms()[t(rng)].name);
    }
  }
}

// Serializes a ranked list at full precision for byte comparisons.
inline std::string fingerprint(const std::vector<Approximation>& found) {
  std::string out;
  char buf[64];
  for (const auto& a : found) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g", a.score, a.adjusted_score);
    out += a.text + buf;
    for (const auto& s : a.segment_scores) {
      std::snprintf(buf, sizeof buf, " %zu:%.17g", s.segment, s.value);
      out += " [" + s.clause + buf + "]";
    }
    out += '\n';
  }
  return out;
}

}  // namespace testsupport
