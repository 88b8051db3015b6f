#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingapprox/fuzzy_set.hpp"

namespace lingapprox {

struct Triangular {
  double a, b, c;
};

struct Trapezoidal {
  double a, b, c, d;
};

struct Explicit {
  std::vector<double> memberships;
};

using TermShape = std::variant<Triangular, Trapezoidal, Explicit>;
using QuantifierShape = std::variant<Triangular, Trapezoidal>;

double shape_membership(const Triangular& t, double x);
double shape_membership(const Trapezoidal& t, double x);

struct TermDef {
  std::string name;
  TermShape shape;
};

FuzzySet sample_term(const TermDef& def, const UniversePtr& universe);

enum class ModifierRule { Not, Very, MoreLess, Indeed, Above, Below };

std::string_view modifier_rule_name(ModifierRule rule);
// Accepts rule names ("more_less") and canonical modifier names ("more or less").
ModifierRule modifier_rule_from_name(std::string_view name);

struct ModifierDef {
  std::string name;
  ModifierRule rule;
};

FuzzySet apply_modifier(ModifierRule rule, const FuzzySet& a);
inline FuzzySet apply_modifier(const ModifierDef& def, const FuzzySet& a) {
  return apply_modifier(def.rule, a);
}

struct QuantifierDef {
  std::string name;
  QuantifierShape shape;

  double membership(double p) const;
  double peak() const;
};

std::vector<QuantifierDef> default_quantifiers();
std::vector<ModifierDef> default_modifiers();
// small / medium / large laid over the universe range.
std::vector<TermDef> default_terms(const Universe& u);

class Vocabulary {
 public:
  Vocabulary(UniversePtr universe, std::vector<TermDef> terms,
             std::vector<ModifierDef> modifiers,
             std::vector<QuantifierDef> quantifiers);

  static Vocabulary defaults(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<TermDef>& terms() const { return terms_; }
  const std::vector<ModifierDef>& modifiers() const { return modifiers_; }
  const std::vector<QuantifierDef>& quantifiers() const { return quantifiers_; }

  const TermDef* find_term(std::string_view name) const;
  const ModifierDef* find_modifier(std::string_view name) const;
  const QuantifierDef* find_quantifier(std::string_view name) const;

  // Throws UnknownName.
  const FuzzySet& term_set(std::string_view name) const;

  // Every word sequence the tokenizer may match, aliases included.
  std::vector<std::string> token_names() const;

 private:
  UniversePtr universe_;
  std::vector<TermDef> terms_;
  std::vector<ModifierDef> modifiers_;
  std::vector<QuantifierDef> quantifiers_;
  std::vector<FuzzySet> sampled_;
  std::map<std::string, std::size_t, std::less<>> term_index_;
  std::map<std::string, std::size_t, std::less<>> modifier_index_;
  std::map<std::string, std::size_t, std::less<>> quantifier_index_;
};

}  // namespace lingapprox
