#include "lingapprox/quantifier.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace lingapprox {

std::string QuantifierAssignment::label() const {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += '/';
    out += n;
  }
  return out;
}

namespace {

void check_options(const AssignOptions& o) {
  if (!(o.threshold >= 0.0 && o.threshold <= 1.0))
    throw Error(ErrorCode::InvalidConfig, fmt::format("threshold {} outside [0, 1]", o.threshold));
  if (!(o.tie_tolerance >= 0.0) || !std::isfinite(o.tie_tolerance))
    throw Error(ErrorCode::InvalidConfig, "tie tolerance must be finite and >= 0");
}

}  // namespace

QuantifierAssignment select_quantifier(const std::vector<double>& compat,
                                       const std::vector<QuantifierDef>& quantifiers,
                                       const AssignOptions& opts) {
  check_options(opts);
  if (quantifiers.empty()) throw Error(ErrorCode::EmptyQuantifierSet, "no quantifiers defined");
  std::size_t best = 0;
  for (std::size_t i = 1; i < compat.size(); ++i)
    if (compat[i] > compat[best]) best = i;
  QuantifierAssignment out;
  out.compatibility = compat[best];
  if (compat[best] < opts.threshold) return out;

  std::size_t second = compat.size();
  for (std::size_t i = 0; i < compat.size(); ++i)
    if (i != best && (second == compat.size() || compat[i] > compat[second])) second = i;
  if (second < compat.size() && compat[second] > 0.0 &&
      compat[best] - compat[second] < opts.tie_tolerance) {
    const auto [lo, hi] = std::minmax(best, second);
    out.names = {quantifiers[lo].name, quantifiers[hi].name};
  } else {
    out.names = {quantifiers[best].name};
  }
  return out;
}

QuantifierAssignment assign_quantifier(double p, const std::vector<QuantifierDef>& quantifiers,
                                       const AssignOptions& opts) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::InvalidConfig, fmt::format("proportion {} outside [0, 1]", p));
  std::vector<double> compat;
  for (const auto& q : quantifiers) compat.push_back(q.membership(p));
  return select_quantifier(compat, quantifiers, opts);
}

std::string_view method_name(QuantifyMethod m) { return m == QuantifyMethod::Sigma ? "sigma" : "fuzzy"; }

std::string QuantifiedProposition::sentence() const {
  const std::string q = quantifier.matched() ? quantifier.label() : "(no quantifier)";
  return fmt::format("{} {} are {}", q, subject, clause_text);
}

double overlap_ceiling(const FuzzySet& a, const FuzzySet& x) {
  require_same_universe(a, x);
  double inside = 0.0, outside = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    inside = std::max(inside, std::min(a[i], x[i]));
    outside = std::max(outside, x[i] - a[i]);
  }
  return std::min(inside, outside);
}

FuzzyCardinality matching_cardinality(const FuzzySet& a, const FuzzySet& x, bool cap_levels) {
  LevelOptions levels;
  if (cap_levels) {
    const double h = overlap_ceiling(a, x);
    if (h > 0.0) levels.ceiling = h;
  }
  return fe_count(a, &x, levels);
}

double fuzzy_compatibility(const FuzzyCardinality& fe, const QuantifierDef& q, bool normalize) {
  const double h = fe.height();
  double best = 0.0;
  for (const auto& p : fe.support()) {
    const double m = normalize && h > 0.0 ? p.membership / h : p.membership;
    best = std::max(best, std::min(q.membership(p.value), m));
  }
  return best;
}

namespace {

std::vector<LabelExpr> scopes(const LabelExpr& label) {
  std::vector<LabelExpr> out{label};
  const auto clauses = top_level_clauses(label);
  if (clauses.size() > 1) out.insert(out.end(), clauses.begin(), clauses.end());
  return out;
}

void require_nonzero(const FuzzySet& target) {
  if (sigma_count(target) == 0.0)
    throw Error(ErrorCode::EmptyFuzzySet, "cannot quantify over the all-zero set");
}

}  // namespace

std::vector<QuantifiedProposition> quantify_sigma(const FuzzySet& target, const LabelExpr& label,
                                                  const Vocabulary& vocab,
                                                  const QuantifyOptions& opts) {
  require_nonzero(target);
  const auto& qs = vocab.quantifiers();
  std::vector<QuantifiedProposition> out;
  bool first = true;
  for (const auto& clause : scopes(label)) {
    const double p = relative_sigma_count(evaluate(clause, vocab), target);
    std::vector<double> compat;
    for (const auto& q : qs) compat.push_back(q.membership(p));
    auto pick = select_quantifier(compat, qs, opts.assign);
    const double c = pick.compatibility;
    out.push_back({std::move(pick), opts.subject, clause, render(clause), c,
                   QuantifyMethod::Sigma, first, p, std::move(compat)});
    first = false;
  }
  return out;
}

std::vector<QuantifiedProposition> quantify_fuzzy(const FuzzySet& target, const LabelExpr& label,
                                                  const Vocabulary& vocab,
                                                  const QuantifyOptions& opts) {
  require_nonzero(target);
  const auto& qs = vocab.quantifiers();
  std::vector<QuantifiedProposition> out;
  bool first = true;
  for (const auto& clause : scopes(label)) {
    const auto fe = matching_cardinality(evaluate(clause, vocab), target, opts.cap_levels);
    std::vector<double> compat;
    for (const auto& q : qs) compat.push_back(fuzzy_compatibility(fe, q, opts.normalize));
    double peak = 0.0, peak_mu = -1.0;
    for (const auto& p : fe.support())
      if (p.membership > peak_mu) peak = p.value, peak_mu = p.membership;
    auto pick = select_quantifier(compat, qs, opts.assign);
    const double c = pick.compatibility;
    out.push_back({std::move(pick), opts.subject, clause, render(clause), c,
                   QuantifyMethod::Fuzzy, first, peak, std::move(compat)});
    first = false;
  }
  return out;
}

double truth_of(std::string_view quantifier, const LabelExpr& clause, const FuzzySet& target,
                const Vocabulary& vocab) {
  const auto* q = vocab.find_quantifier(quantifier);
  if (!q) throw Error(ErrorCode::UnknownName, fmt::format("unknown quantifier '{}'", quantifier));
  require_nonzero(target);
  return q->membership(relative_sigma_count(evaluate(clause, vocab), target));
}

std::string summary(const std::vector<QuantifiedProposition>& props) {
  std::string out;
  for (const auto& p : props) {
    if (p.whole_label && props.size() > 1) continue;
    if (!out.empty()) out += "; ";
    out += p.sentence();
  }
  return out;
}

}  // namespace lingapprox
