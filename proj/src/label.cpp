#include "lingapprox/label.hpp"

#include <algorithm>
#include <optional>

#include <fmt/core.h>

namespace lingapprox {

std::string_view connective_name(Connective c) { return c == Connective::And ? "and" : "or"; }

struct LabelExpr::Node {
  Kind kind;
  std::string name;
  Connective conn = Connective::And;
  std::optional<LabelExpr> a;
  std::optional<LabelExpr> b;
  std::size_t nodes = 1;
  std::size_t depth = 1;
};

LabelExpr LabelExpr::term(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Term;
  n->name = std::move(name);
  return LabelExpr(std::move(n));
}

LabelExpr LabelExpr::modified(std::string modifier, LabelExpr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Modified;
  n->name = std::move(modifier);
  n->nodes = operand.node_count() + 1;
  n->depth = operand.depth() + 1;
  n->a = std::move(operand);
  return LabelExpr(std::move(n));
}

LabelExpr LabelExpr::composite(LabelExpr lhs, Connective c, LabelExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Composite;
  n->conn = c;
  n->nodes = lhs.node_count() + rhs.node_count() + 1;
  n->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return LabelExpr(std::move(n));
}

LabelExpr::Kind LabelExpr::kind() const { return node_->kind; }
const std::string& LabelExpr::name() const { return node_->name; }
const LabelExpr& LabelExpr::operand() const { return *node_->a; }
const LabelExpr& LabelExpr::lhs() const { return *node_->a; }
const LabelExpr& LabelExpr::rhs() const { return *node_->b; }
Connective LabelExpr::connective() const { return node_->conn; }
std::size_t LabelExpr::node_count() const { return node_->nodes; }
std::size_t LabelExpr::depth() const { return node_->depth; }

bool LabelExpr::operator==(const LabelExpr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || node_count() != o.node_count()) return false;
  switch (kind()) {
    case Kind::Term: return name() == o.name();
    case Kind::Modified: return name() == o.name() && operand() == o.operand();
    case Kind::Composite:
      return connective() == o.connective() && lhs() == o.lhs() && rhs() == o.rhs();
  }
  return false;
}

namespace {

enum class Tok { LParen, RParen, And, Or, Term, Modifier, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(' || ch == ')') {
      flush();
      words.emplace_back(1, ch);
    } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return words;
}

std::vector<Token> tokenize(std::string_view text, const Vocabulary& vocab) {
  const auto names = vocab.token_names();
  std::size_t longest = 1;
  for (const auto& n : names)
    longest = std::max<std::size_t>(longest, std::count(n.begin(), n.end(), ' ') + 1);

  const auto words = split_words(text);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < words.size()) {
    if (words[i] == "(" || words[i] == ")") {
      out.push_back({words[i] == "(" ? Tok::LParen : Tok::RParen, words[i]});
      ++i;
      continue;
    }
    bool matched = false;
    for (std::size_t k = std::min(longest, words.size() - i); k >= 1 && !matched; --k) {
      std::string phrase = words[i];
      for (std::size_t j = 1; j < k; ++j) phrase += " " + words[i + j];
      if (phrase == "and") {
        out.push_back({Tok::And, phrase});
      } else if (phrase == "or") {
        out.push_back({Tok::Or, phrase});
      } else if (vocab.find_term(phrase)) {
        out.push_back({Tok::Term, phrase});
      } else if (const auto* m = vocab.find_modifier(phrase)) {
        out.push_back({Tok::Modifier, m->name});
      } else {
        continue;
      }
      matched = true;
      i += k;
    }
    if (!matched)
      throw Error(ErrorCode::UnknownToken, fmt::format("unknown token '{}'", words[i]));
  }
  out.push_back({Tok::End, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  LabelExpr run() {
    if (peek().kind == Tok::End) throw Error(ErrorCode::EmptyExpression, "empty label");
    LabelExpr e = parse_or(0);
    if (peek().kind == Tok::RParen)
      throw Error(ErrorCode::UnbalancedParens, "unmatched ')'");
    if (peek().kind != Tok::End)
      throw Error(ErrorCode::UnknownToken,
                  fmt::format("unexpected token '{}'", peek().text));
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  static LabelExpr checked(LabelExpr e) {
    if (e.depth() > kMaxLabelDepth)
      throw Error(ErrorCode::ExpressionTooDeep,
                  fmt::format("label nests deeper than {}", kMaxLabelDepth));
    return e;
  }

  LabelExpr parse_or(std::size_t depth) {
    LabelExpr lhs = parse_and(depth);
    while (peek().kind == Tok::Or) {
      take();
      lhs = checked(LabelExpr::composite(std::move(lhs), Connective::Or, parse_and(depth)));
    }
    return lhs;
  }

  LabelExpr parse_and(std::size_t depth) {
    LabelExpr lhs = parse_unary(depth);
    while (peek().kind == Tok::And) {
      take();
      lhs = checked(LabelExpr::composite(std::move(lhs), Connective::And, parse_unary(depth)));
    }
    return lhs;
  }

  LabelExpr parse_unary(std::size_t depth) {
    if (depth > kMaxLabelDepth)
      throw Error(ErrorCode::ExpressionTooDeep,
                  fmt::format("label nests deeper than {}", kMaxLabelDepth));
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Modifier: {
        std::string name = take().text;
        const Tok next = peek().kind;
        if (next != Tok::Modifier && next != Tok::Term && next != Tok::LParen)
          throw Error(ErrorCode::DanglingModifier,
                      fmt::format("modifier '{}' has no operand", name));
        return checked(LabelExpr::modified(std::move(name), parse_unary(depth + 1)));
      }
      case Tok::Term:
        return LabelExpr::term(take().text);
      case Tok::LParen: {
        take();
        if (peek().kind == Tok::RParen)
          throw Error(ErrorCode::EmptyExpression, "empty parentheses");
        LabelExpr inner = parse_or(depth + 1);
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) throw Error(ErrorCode::UnbalancedParens, "missing ')'");
          throw Error(ErrorCode::UnknownToken,
                      fmt::format("unexpected token '{}'", peek().text));
        }
        take();
        return inner;
      }
      case Tok::RParen:
        throw Error(ErrorCode::UnbalancedParens, "unexpected ')'");
      case Tok::And:
      case Tok::Or:
      case Tok::End:
        throw Error(ErrorCode::EmptyExpression,
                    t.kind == Tok::End ? std::string("label ends where an operand is expected")
                                       : fmt::format("'{}' is missing an operand", t.text));
    }
    throw Error(ErrorCode::EmptyExpression, "operand expected");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const LabelExpr& e) {
  if (e.kind() != LabelExpr::Kind::Composite) return 3;
  return e.connective() == Connective::And ? 2 : 1;
}

void render_into(const LabelExpr& e, std::string& out) {
  switch (e.kind()) {
    case LabelExpr::Kind::Term:
      out += e.name();
      return;
    case LabelExpr::Kind::Modified: {
      out += e.name();
      out += ' ';
      const bool wrap = e.operand().kind() == LabelExpr::Kind::Composite;
      if (wrap) out += '(';
      render_into(e.operand(), out);
      if (wrap) out += ')';
      return;
    }
    case LabelExpr::Kind::Composite: {
      const int p = precedence(e);
      const bool wl = precedence(e.lhs()) < p;
      const bool wr = precedence(e.rhs()) <= p;
      if (wl) out += '(';
      render_into(e.lhs(), out);
      if (wl) out += ')';
      out += ' ';
      out += connective_name(e.connective());
      out += ' ';
      if (wr) out += '(';
      render_into(e.rhs(), out);
      if (wr) out += ')';
      return;
    }
  }
}

void collect_clauses(const LabelExpr& e, std::vector<LabelExpr>& out) {
  if (e.kind() == LabelExpr::Kind::Composite && e.connective() == Connective::Or) {
    collect_clauses(e.lhs(), out);
    collect_clauses(e.rhs(), out);
  } else {
    out.push_back(e);
  }
}

}  // namespace

LabelExpr parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(tokenize(text, vocab)).run();
}

std::string render(const LabelExpr& expr) {
  std::string out;
  render_into(expr, out);
  return out;
}

FuzzySet evaluate(const LabelExpr& expr, const Vocabulary& vocab) {
  switch (expr.kind()) {
    case LabelExpr::Kind::Term:
      return vocab.term_set(expr.name());
    case LabelExpr::Kind::Modified: {
      const auto* m = vocab.find_modifier(expr.name());
      if (!m) throw Error(ErrorCode::UnknownName, fmt::format("unknown modifier '{}'", expr.name()));
      return apply_modifier(*m, evaluate(expr.operand(), vocab));
    }
    case LabelExpr::Kind::Composite: {
      const auto l = evaluate(expr.lhs(), vocab);
      const auto r = evaluate(expr.rhs(), vocab);
      return expr.connective() == Connective::And ? intersect(l, r) : unite(l, r);
    }
  }
  throw Error(ErrorCode::UnknownName, "malformed label");
}

std::vector<LabelExpr> top_level_clauses(const LabelExpr& expr) {
  std::vector<LabelExpr> out;
  collect_clauses(expr, out);
  return out;
}

}  // namespace lingapprox
