#include "lingapprox/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace lingapprox {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidUniverse: return "InvalidUniverse";
    case ErrorCode::InvalidMembership: return "InvalidMembership";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::EmptyReference: return "EmptyReference";
    case ErrorCode::ShapeOutOfRange: return "ShapeOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnknownModifier: return "UnknownModifier";
    case ErrorCode::InvalidVocabulary: return "InvalidVocabulary";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::EmptyExpression: return "EmptyExpression";
    case ErrorCode::DanglingModifier: return "DanglingModifier";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::ExpressionTooDeep: return "ExpressionTooDeep";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::EmptyFuzzySet: return "EmptyFuzzySet";
    case ErrorCode::VocabularyEmpty: return "VocabularyEmpty";
    case ErrorCode::EmptyQuantifierSet: return "EmptyQuantifierSet";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Universe::Universe(std::string name, std::vector<double> points,
                   std::optional<std::string> unit)
    : name_(std::move(name)), points_(std::move(points)), unit_(std::move(unit)) {
  if (points_.size() < 2)
    throw Error(ErrorCode::InvalidUniverse,
                fmt::format("universe '{}' needs at least 2 points, got {}",
                            name_, points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]))
      throw Error(ErrorCode::InvalidUniverse,
                  fmt::format("universe '{}': point {} is not finite", name_, i));
    if (i > 0 && !(points_[i] > points_[i - 1]))
      throw Error(ErrorCode::InvalidUniverse,
                  fmt::format("universe '{}': points not strictly increasing at index {}",
                              name_, i));
  }
}

Universe Universe::from_range(std::string name, double min, double max,
                              double step, std::optional<std::string> unit) {
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step) ||
      step <= 0 || max <= min)
    throw Error(ErrorCode::InvalidUniverse,
                fmt::format("universe '{}': bad range min={} max={} step={}",
                            name, min, max, step));
  const double span = (max - min) / step;
  const double rounded = std::round(span);
  if (std::abs(span - rounded) > 1e-9 * std::max(1.0, std::abs(span)))
    throw Error(ErrorCode::InvalidUniverse,
                fmt::format("universe '{}': step {} does not divide [{}, {}]",
                            name, step, min, max));
  const auto count = static_cast<std::size_t>(rounded) + 1;
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i)
    pts[i] = min + static_cast<double>(i) * step;
  pts.back() = max;
  return Universe(std::move(name), std::move(pts), std::move(unit));
}

UniversePtr make_universe(Universe u) {
  return std::make_shared<const Universe>(std::move(u));
}

FuzzySet::FuzzySet(UniversePtr universe, std::vector<double> memberships)
    : universe_(std::move(universe)), mu_(std::move(memberships)) {
  if (!universe_) throw Error(ErrorCode::InvalidUniverse, "fuzzy set without universe");
  if (mu_.size() != universe_->size())
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("membership vector has {} values, universe '{}' has {} points",
                            mu_.size(), universe_->name(), universe_->size()));
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    const double m = mu_[i];
    if (!(m >= 0.0 && m <= 1.0))
      throw Error(ErrorCode::InvalidMembership,
                  fmt::format("membership {} at index {} is outside [0, 1]", m, i));
  }
}

FuzzySet FuzzySet::zeros(UniversePtr universe) {
  std::vector<double> mu(universe->size(), 0.0);
  return FuzzySet(std::move(universe), std::move(mu));
}

bool FuzzySet::same_universe(const FuzzySet& other) const {
  return universe_ == other.universe_ || *universe_ == *other.universe_;
}

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
  if (!a.same_universe(b))
    throw Error(ErrorCode::UniverseMismatch,
                fmt::format("sets live on different universes ('{}' vs '{}')",
                            a.universe()->name(), b.universe()->name()));
}

FuzzySet pointwise(PointwiseOp op, const FuzzySet& a, const FuzzySet* b) {
  const auto& x = a.memberships();
  std::vector<double> out(x.size());
  if (op == PointwiseOp::Complement) {
    if (b) throw Error(ErrorCode::ArityError, "complement takes a single operand");
    if (a.complement_of_) {
      FuzzySet back(a.universe(), *a.complement_of_);
      back.complement_of_ = std::make_shared<const std::vector<double>>(x);
      return back;
    }
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = 1.0 - x[i];
    FuzzySet r(a.universe(), std::move(out));
    r.complement_of_ = std::make_shared<const std::vector<double>>(x);
    return r;
  }
  if (!b) throw Error(ErrorCode::ArityError, "intersect/union need two operands");
  require_same_universe(a, *b);
  const auto& y = b->memberships();
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = op == PointwiseOp::Intersect ? std::min(x[i], y[i]) : std::max(x[i], y[i]);
  return FuzzySet(a.universe(), std::move(out));
}

FuzzySet complement(const FuzzySet& a) { return pointwise(PointwiseOp::Complement, a); }
FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(PointwiseOp::Intersect, a, &b);
}
FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(PointwiseOp::Union, a, &b);
}

double height(const FuzzySet& a) {
  const auto& m = a.memberships();
  return *std::max_element(m.begin(), m.end());
}

AlphaCut alpha_cut(const FuzzySet& a, double level) {
  if (!(level > 0.0 && level <= 1.0))
    throw Error(ErrorCode::InvalidAlpha,
                fmt::format("alpha level {} outside (0, 1]", level));
  AlphaCut cut{level, {}};
  const auto& m = a.memberships();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] >= level) cut.indices.push_back(i);
  return cut;
}

double sigma_count(const FuzzySet& a) {
  double s = 0.0;
  for (double m : a.memberships()) s += m;
  return s;
}

double relative_sigma_count(const FuzzySet& a, const FuzzySet& x) {
  require_same_universe(a, x);
  const double denom = sigma_count(x);
  if (denom == 0.0)
    throw Error(ErrorCode::EmptyReference, "reference set has zero sigma count");
  return sigma_count(intersect(a, x)) / denom;
}

}  // namespace lingapprox
