#include "lingapprox/reference_sets.hpp"

#include <algorithm>
#include <cmath>

namespace lingapprox {

UniversePtr temperature_universe() {
  return make_universe(Universe::from_range("temperature", 0.0, 100.0, 1.0, "degC"));
}

FuzzySet reference_x1(const Vocabulary& vocab) {
  const auto& medium = vocab.term_set("medium");
  const auto& large = vocab.term_set("large");
  std::vector<double> mu(medium.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    mu[i] = std::max(std::min(0.7, std::sqrt(medium[i])), large[i] * large[i]);
  return FuzzySet(vocab.universe(), std::move(mu));
}

FuzzySet reference_x2(const Vocabulary& vocab) {
  const auto& u = vocab.universe();
  const auto left = sample_term({"left", Triangular{25.0, 50.0, 80.0}}, u);
  const auto right = sample_term({"right", Trapezoidal{70.0, 92.5, 100.0, 100.0}}, u);
  std::vector<double> mu(left.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    mu[i] = std::max(std::sqrt(left[i]), std::min(0.6, right[i] * right[i]));
  return FuzzySet(u, std::move(mu));
}

}  // namespace lingapprox
