#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lingapprox/fuzzy_set.hpp"
#include "lingapprox/vocabulary.hpp"

namespace lingapprox {

enum class Connective { And, Or };

std::string_view connective_name(Connective c);

// Immutable label AST; copies share nodes.
class LabelExpr {
 public:
  enum class Kind { Term, Modified, Composite };

  static LabelExpr term(std::string name);
  static LabelExpr modified(std::string modifier, LabelExpr operand);
  static LabelExpr composite(LabelExpr lhs, Connective c, LabelExpr rhs);

  Kind kind() const;
  // Term name for terms, modifier name for modified nodes.
  const std::string& name() const;
  const LabelExpr& operand() const;
  const LabelExpr& lhs() const;
  const LabelExpr& rhs() const;
  Connective connective() const;

  std::size_t node_count() const;
  std::size_t depth() const;
  const void* identity() const { return node_.get(); }

  bool operator==(const LabelExpr& other) const;

 private:
  struct Node;
  explicit LabelExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline constexpr std::size_t kMaxLabelDepth = 64;

LabelExpr parse(std::string_view text, const Vocabulary& vocab);
std::string render(const LabelExpr& expr);
FuzzySet evaluate(const LabelExpr& expr, const Vocabulary& vocab);

// Operands of the outermost or-chain, left to right; a non-or label is its
// own single clause.
std::vector<LabelExpr> top_level_clauses(const LabelExpr& expr);

}  // namespace lingapprox
