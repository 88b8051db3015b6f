#include "lingapprox/cardinality.hpp"

#include <algorithm>
#include <map>

#include <fmt/core.h>

namespace lingapprox {

FuzzyCardinality::FuzzyCardinality(CardinalityKind kind, Completion completion,
                                   std::vector<CardinalityPoint> support)
    : kind_(kind), completion_(completion), support_(std::move(support)) {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const auto& p = support_[i];
    if (!(p.membership >= 0.0 && p.membership <= 1.0))
      throw Error(ErrorCode::InvalidMembership,
                  fmt::format("cardinality membership {} at {} outside [0, 1]",
                              p.membership, p.value));
    if (kind_ == CardinalityKind::Relative && !(p.value >= 0.0 && p.value <= 1.0))
      throw Error(ErrorCode::InvalidConfig,
                  fmt::format("relative cardinality value {} outside [0, 1]", p.value));
    if (i == 0) continue;
    const auto& q = support_[i - 1];
    if (!(p.value > q.value))
      throw Error(ErrorCode::InvalidConfig, "cardinality support not strictly ascending");
    if (completion_ == Completion::AtLeast && p.membership > q.membership)
      throw Error(ErrorCode::InvalidConfig, "at-least cardinality must be nonincreasing");
    if (completion_ == Completion::AtMost && p.membership < q.membership)
      throw Error(ErrorCode::InvalidConfig, "at-most cardinality must be nondecreasing");
  }
}

double FuzzyCardinality::membership_at(double v) const {
  switch (completion_) {
    case Completion::AtLeast: {
      auto it = std::lower_bound(
          support_.begin(), support_.end(), v,
          [](const CardinalityPoint& p, double x) { return p.value < x; });
      return it == support_.end() ? 0.0 : it->membership;
    }
    case Completion::AtMost: {
      auto it = std::upper_bound(
          support_.begin(), support_.end(), v,
          [](double x, const CardinalityPoint& p) { return x < p.value; });
      return it == support_.begin() ? 0.0 : std::prev(it)->membership;
    }
    case Completion::None:
      for (const auto& p : support_)
        if (p.value == v) return p.membership;
      return 0.0;
  }
  return 0.0;
}

double FuzzyCardinality::height() const {
  double h = 0.0;
  for (const auto& p : support_) h = std::max(h, p.membership);
  return h;
}

std::vector<double> alpha_grid(const FuzzySet& a, const FuzzySet* x,
                               bool with_complement) {
  std::vector<double> g;
  for (double m : a.memberships()) {
    if (m > 0.0) g.push_back(m);
    if (with_complement && 1.0 - m > 0.0) g.push_back(1.0 - m);
  }
  if (x)
    for (double m : x->memberships())
      if (m > 0.0) g.push_back(m);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

namespace {

// Sorted membership values; count_at_least answers |cut| at any level.
class CutCounter {
 public:
  explicit CutCounter(std::vector<double> values) : v_(std::move(values)) {
    std::sort(v_.begin(), v_.end());
  }
  std::size_t count_at_least(double level) const {
    return static_cast<std::size_t>(v_.end() - std::lower_bound(v_.begin(), v_.end(), level));
  }

 private:
  std::vector<double> v_;
};

std::vector<double> levels_for(const FuzzySet& a, const FuzzySet* x,
                               bool with_complement, const LevelOptions& opts) {
  auto grid = alpha_grid(a, x, with_complement);
  if (!opts.ceiling) return grid;
  const double c = *opts.ceiling;
  if (!(c > 0.0 && c <= 1.0))
    throw Error(ErrorCode::InvalidAlpha, fmt::format("alpha ceiling {} outside (0, 1]", c));
  if (grid.empty() || c >= grid.back()) return grid;
  // Cuts are constant between grid values, so a level at the ceiling itself
  // stands in for the partial interval below it.
  grid.erase(std::lower_bound(grid.begin(), grid.end(), c), grid.end());
  grid.push_back(c);
  return grid;
}

std::vector<double> complement_values(const FuzzySet& a) {
  std::vector<double> out;
  out.reserve(a.size());
  for (double m : a.memberships()) out.push_back(1.0 - m);
  return out;
}

std::vector<double> min_values(const std::vector<double>& p, const FuzzySet& x) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::min(p[i], x[i]);
  return out;
}

struct Sample {
  double value;
  double level;
};

// Relative numerators and denominators per level, skipping empty X cuts.
std::vector<Sample> relative_samples(const std::vector<double>& levels,
                                     const CutCounter& numer, const CutCounter& xc,
                                     bool complement_side) {
  std::vector<Sample> out;
  for (double lv : levels) {
    const std::size_t nx = xc.count_at_least(lv);
    if (nx == 0) continue;
    const std::size_t k = numer.count_at_least(lv);
    const std::size_t hits = complement_side ? nx - k : k;
    out.push_back({static_cast<double>(hits) / static_cast<double>(nx), lv});
  }
  if (out.empty())
    throw Error(ErrorCode::EmptyReference, "reference set has no nonempty alpha cut");
  return out;
}

FuzzyCardinality fg_absolute(const FuzzySet& a, const LevelOptions& opts) {
  const std::size_t n = a.size();
  const auto levels = levels_for(a, nullptr, false, opts);
  const CutCounter ac(a.memberships());
  std::vector<double> mu(n + 1, 0.0);
  mu[0] = 1.0;
  std::size_t filled = 0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const std::size_t k = ac.count_at_least(*it);
    for (; filled < k; ++filled) mu[filled + 1] = std::max(mu[filled + 1], *it);
  }
  std::vector<CardinalityPoint> s(n + 1);
  for (std::size_t c = 0; c <= n; ++c) s[c] = {static_cast<double>(c), mu[c]};
  return FuzzyCardinality(CardinalityKind::Absolute, Completion::AtLeast, std::move(s));
}

FuzzyCardinality fl_absolute(const FuzzySet& a, const LevelOptions& opts) {
  const std::size_t n = a.size();
  const auto levels = levels_for(a, nullptr, true, opts);
  const CutCounter bc(complement_values(a));
  std::vector<double> mu(n + 1, 0.0);
  std::size_t low = n + 1;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const std::size_t k = n - bc.count_at_least(*it);
    for (; low > k; --low) mu[low - 1] = std::max(mu[low - 1], *it);
  }
  mu[n] = 1.0;
  std::vector<CardinalityPoint> s(n + 1);
  for (std::size_t c = 0; c <= n; ++c) s[c] = {static_cast<double>(c), mu[c]};
  return FuzzyCardinality(CardinalityKind::Absolute, Completion::AtMost, std::move(s));
}

FuzzyCardinality fg_relative(const FuzzySet& a, const FuzzySet& x, const LevelOptions& opts) {
  const auto levels = levels_for(a, &x, false, opts);
  const auto samples = relative_samples(levels, CutCounter(min_values(a.memberships(), x)),
                                        CutCounter(x.memberships()), false);
  std::map<double, double> best{{0.0, 1.0}};
  for (const auto& s : samples) best[s.value] = std::max(best[s.value], s.level);
  std::vector<CardinalityPoint> out;
  double run = 0.0;
  for (auto it = best.rbegin(); it != best.rend(); ++it) {
    run = std::max(run, it->second);
    out.push_back({it->first, run});
  }
  std::reverse(out.begin(), out.end());
  return FuzzyCardinality(CardinalityKind::Relative, Completion::AtLeast, std::move(out));
}

FuzzyCardinality fl_relative(const FuzzySet& a, const FuzzySet& x, const LevelOptions& opts) {
  const auto levels = levels_for(a, &x, true, opts);
  const auto samples = relative_samples(levels, CutCounter(min_values(complement_values(a), x)),
                                        CutCounter(x.memberships()), true);
  std::map<double, double> best{{1.0, 1.0}};
  for (const auto& s : samples) best[s.value] = std::max(best[s.value], s.level);
  std::vector<CardinalityPoint> out;
  double run = 0.0;
  for (const auto& [v, m] : best) {
    run = std::max(run, m);
    out.push_back({v, run});
  }
  return FuzzyCardinality(CardinalityKind::Relative, Completion::AtMost, std::move(out));
}

}  // namespace

FuzzyCardinality fg_count(const FuzzySet& a, const FuzzySet* relative_to,
                          const LevelOptions& opts) {
  if (!relative_to) return fg_absolute(a, opts);
  require_same_universe(a, *relative_to);
  return fg_relative(a, *relative_to, opts);
}

FuzzyCardinality fl_count(const FuzzySet& a, const FuzzySet* relative_to,
                          const LevelOptions& opts) {
  if (!relative_to) return fl_absolute(a, opts);
  require_same_universe(a, *relative_to);
  return fl_relative(a, *relative_to, opts);
}

FuzzyCardinality fe_count(const FuzzySet& a, const FuzzySet* relative_to,
                          const LevelOptions& opts) {
  const auto fg = fg_count(a, relative_to, opts);
  const auto fl = fl_count(a, relative_to, opts);
  std::vector<double> values;
  for (const auto& p : fg.support()) values.push_back(p.value);
  for (const auto& p : fl.support()) values.push_back(p.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<CardinalityPoint> out;
  out.reserve(values.size());
  for (double v : values)
    out.push_back({v, std::min(fg.membership_at(v), fl.membership_at(v))});
  return FuzzyCardinality(fg.kind(), Completion::None, std::move(out));
}

}  // namespace lingapprox
