#include "lingapprox/vocabulary.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/core.h>

namespace lingapprox {

double shape_membership(const Triangular& t, double x) {
  if (x < t.a || x > t.c) return 0.0;
  if (x <= t.b) return t.b == t.a ? 1.0 : (x - t.a) / (t.b - t.a);
  return t.c == t.b ? 1.0 : (t.c - x) / (t.c - t.b);
}

double shape_membership(const Trapezoidal& t, double x) {
  if (x < t.a || x > t.d) return 0.0;
  if (x < t.b) return (x - t.a) / (t.b - t.a);
  if (x <= t.c) return 1.0;
  return (t.d - x) / (t.d - t.c);
}

namespace {

void check_ordered(const std::string& name, std::initializer_list<double> params) {
  double prev = -INFINITY;
  for (double p : params) {
    if (!std::isfinite(p) || p < prev)
      throw Error(ErrorCode::InvalidVocabulary,
                  fmt::format("shape parameters of '{}' must be finite and nondecreasing", name));
    prev = p;
  }
}

void check_tokenizable(const std::string& name) {
  if (name.empty() || name.find_first_of("()") != std::string::npos ||
      name.front() == ' ' || name.back() == ' ' || name.find("  ") != std::string::npos)
    throw Error(ErrorCode::InvalidVocabulary, fmt::format("invalid name '{}'", name));
}

}  // namespace

FuzzySet sample_term(const TermDef& def, const UniversePtr& universe) {
  const auto& pts = universe->points();
  std::vector<double> mu(pts.size());
  auto sample = [&](const auto& shape, double lo, double hi) {
    if (hi < universe->front() || lo > universe->back())
      throw Error(ErrorCode::ShapeOutOfRange,
                  fmt::format("term '{}' support [{}, {}] misses universe [{}, {}]",
                              def.name, lo, hi, universe->front(), universe->back()));
    for (std::size_t i = 0; i < pts.size(); ++i) mu[i] = shape_membership(shape, pts[i]);
  };
  if (const auto* t = std::get_if<Triangular>(&def.shape)) {
    check_ordered(def.name, {t->a, t->b, t->c});
    sample(*t, t->a, t->c);
  } else if (const auto* z = std::get_if<Trapezoidal>(&def.shape)) {
    check_ordered(def.name, {z->a, z->b, z->c, z->d});
    sample(*z, z->a, z->d);
  } else {
    const auto& e = std::get<Explicit>(def.shape);
    if (e.memberships.size() != pts.size())
      throw Error(ErrorCode::LengthMismatch,
                  fmt::format("term '{}' has {} memberships, universe has {} points",
                              def.name, e.memberships.size(), pts.size()));
    mu = e.memberships;
  }
  try {
    return FuzzySet(universe, std::move(mu));
  } catch (const Error& err) {
    throw Error(err.code(), fmt::format("term '{}': {}", def.name, err.what()));
  }
}

std::string_view modifier_rule_name(ModifierRule rule) {
  switch (rule) {
    case ModifierRule::Not: return "not";
    case ModifierRule::Very: return "very";
    case ModifierRule::MoreLess: return "more_less";
    case ModifierRule::Indeed: return "indeed";
    case ModifierRule::Above: return "above";
    case ModifierRule::Below: return "below";
  }
  return "";
}

ModifierRule modifier_rule_from_name(std::string_view name) {
  if (name == "not") return ModifierRule::Not;
  if (name == "very") return ModifierRule::Very;
  if (name == "more_less" || name == "more or less" || name == "more/less")
    return ModifierRule::MoreLess;
  if (name == "indeed") return ModifierRule::Indeed;
  if (name == "above") return ModifierRule::Above;
  if (name == "below") return ModifierRule::Below;
  throw Error(ErrorCode::UnknownModifier, fmt::format("unknown modifier rule '{}'", name));
}

FuzzySet apply_modifier(ModifierRule rule, const FuzzySet& a) {
  if (rule == ModifierRule::Not) return complement(a);
  const auto& m = a.memberships();
  const std::size_t n = m.size();
  std::vector<double> out(n, 0.0);
  switch (rule) {
    case ModifierRule::Not:
      break;
    case ModifierRule::Very:
      for (std::size_t i = 0; i < n; ++i) out[i] = m[i] * m[i];
      break;
    case ModifierRule::MoreLess:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(m[i]);
      break;
    case ModifierRule::Indeed:
      for (std::size_t i = 0; i < n; ++i) {
        const double u = m[i];
        out[i] = u <= 0.5 ? 2.0 * u * u : 1.0 - 2.0 * (1.0 - u) * (1.0 - u);
      }
      break;
    case ModifierRule::Above: {
      const double h = *std::max_element(m.begin(), m.end());
      std::size_t peak = n - 1;
      while (m[peak] != h) --peak;
      for (std::size_t i = peak + 1; i < n; ++i) out[i] = 1.0 - m[i];
      break;
    }
    case ModifierRule::Below: {
      const auto peak = static_cast<std::size_t>(
          std::max_element(m.begin(), m.end()) - m.begin());
      for (std::size_t i = 0; i < peak; ++i) out[i] = 1.0 - m[i];
      break;
    }
  }
  return FuzzySet(a.universe(), std::move(out));
}

double QuantifierDef::membership(double p) const {
  return std::visit([p](const auto& s) { return shape_membership(s, p); }, shape);
}

double QuantifierDef::peak() const {
  if (const auto* t = std::get_if<Triangular>(&shape)) return t->b;
  const auto& z = std::get<Trapezoidal>(shape);
  return 0.5 * (z.b + z.c);
}

std::vector<QuantifierDef> default_quantifiers() {
  return {
      {"none", Triangular{0.0, 0.0, 0.05}},
      {"almost none", Triangular{0.0, 0.07, 0.14}},
      {"some", Triangular{0.10, 0.17, 0.26}},
      {"few", Triangular{0.22, 0.45, 0.75}},
      {"most", Triangular{0.68, 0.80, 0.87}},
      {"almost all", Triangular{0.85, 0.93, 0.995}},
      {"all", Triangular{0.98, 1.0, 1.0}},
  };
}

std::vector<ModifierDef> default_modifiers() {
  return {
      {"not", ModifierRule::Not},         {"very", ModifierRule::Very},
      {"more or less", ModifierRule::MoreLess}, {"indeed", ModifierRule::Indeed},
      {"above", ModifierRule::Above},     {"below", ModifierRule::Below},
  };
}

std::vector<TermDef> default_terms(const Universe& u) {
  const double lo = u.front();
  const double hi = u.back();
  const double r = hi - lo;
  auto at = [&](int tenths) { return lo + r * tenths / 10.0; };
  return {
      {"small", Trapezoidal{lo, lo, at(1), at(4)}},
      {"medium", Triangular{at(2), at(5), at(8)}},
      {"large", Trapezoidal{at(6), at(9), hi, hi}},
  };
}

Vocabulary::Vocabulary(UniversePtr universe, std::vector<TermDef> terms,
                       std::vector<ModifierDef> modifiers,
                       std::vector<QuantifierDef> quantifiers)
    : universe_(std::move(universe)),
      terms_(std::move(terms)),
      modifiers_(std::move(modifiers)),
      quantifiers_(std::move(quantifiers)) {
  std::set<std::string, std::less<>> words{"and", "or"};
  auto claim = [&](const std::string& name, const char* what) {
    check_tokenizable(name);
    if (!words.insert(name).second)
      throw Error(ErrorCode::InvalidVocabulary,
                  fmt::format("{} name '{}' collides with another vocabulary word", what, name));
  };
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    claim(terms_[i].name, "term");
    term_index_.emplace(terms_[i].name, i);
    sampled_.push_back(sample_term(terms_[i], universe_));
  }
  for (std::size_t i = 0; i < modifiers_.size(); ++i) {
    claim(modifiers_[i].name, "modifier");
    modifier_index_.emplace(modifiers_[i].name, i);
  }
  std::set<std::string, std::less<>> qnames;
  for (std::size_t i = 0; i < quantifiers_.size(); ++i) {
    const auto& q = quantifiers_[i];
    check_tokenizable(q.name);
    if (!qnames.insert(q.name).second)
      throw Error(ErrorCode::InvalidVocabulary, fmt::format("duplicate quantifier '{}'", q.name));
    if (const auto* t = std::get_if<Triangular>(&q.shape))
      check_ordered(q.name, {t->a, t->b, t->c});
    else {
      const auto& z = std::get<Trapezoidal>(q.shape);
      check_ordered(q.name, {z.a, z.b, z.c, z.d});
    }
    quantifier_index_.emplace(q.name, i);
  }
  if (auto it = modifier_index_.find("more or less");
      it != modifier_index_.end() && !words.count("more/less"))
    modifier_index_.emplace("more/less", it->second);
  if (auto it = quantifier_index_.find("most");
      it != quantifier_index_.end() && !qnames.count("usually"))
    quantifier_index_.emplace("usually", it->second);
}

Vocabulary Vocabulary::defaults(UniversePtr universe) {
  auto terms = default_terms(*universe);
  return Vocabulary(std::move(universe), std::move(terms), default_modifiers(),
                    default_quantifiers());
}

const TermDef* Vocabulary::find_term(std::string_view name) const {
  auto it = term_index_.find(name);
  return it == term_index_.end() ? nullptr : &terms_[it->second];
}

const ModifierDef* Vocabulary::find_modifier(std::string_view name) const {
  auto it = modifier_index_.find(name);
  return it == modifier_index_.end() ? nullptr : &modifiers_[it->second];
}

const QuantifierDef* Vocabulary::find_quantifier(std::string_view name) const {
  auto it = quantifier_index_.find(name);
  return it == quantifier_index_.end() ? nullptr : &quantifiers_[it->second];
}

const FuzzySet& Vocabulary::term_set(std::string_view name) const {
  auto it = term_index_.find(name);
  if (it == term_index_.end())
    throw Error(ErrorCode::UnknownName, fmt::format("unknown term '{}'", name));
  return sampled_[it->second];
}

std::vector<std::string> Vocabulary::token_names() const {
  std::vector<std::string> out{"and", "or"};
  for (const auto& [name, idx] : term_index_) out.push_back(name);
  for (const auto& [name, idx] : modifier_index_) out.push_back(name);
  return out;
}

}  // namespace lingapprox
