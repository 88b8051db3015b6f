// Regenerates the shipped problem files under fixtures/.
#include <fstream>
#include <iostream>

#include <fmt/core.h>

#include "lingapprox/cli.hpp"
#include "lingapprox/reference_sets.hpp"

using namespace lingapprox;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  const auto u = temperature_universe();
  const auto vocab = Vocabulary::defaults(u);

  std::vector<double> inside(u->size()), cold(u->size(), 0.0);
  const auto& medium = vocab.term_set("medium");
  for (std::size_t i = 0; i < u->size(); ++i) {
    inside[i] = 0.5 * medium[i];
    if (u->points()[i] <= 15.0) cold[i] = 1.0;
  }

  cli::ProblemFile p;
  p.universe = u;
  p.sets = {{"X1", reference_x1(vocab)},
            {"X2", reference_x2(vocab)},
            {"VL", evaluate(parse("very large", vocab), vocab)},
            {"IN_MEDIUM", FuzzySet(u, inside)},
            {"COLD", FuzzySet(u, cold)},
            {"EMPTY", FuzzySet::zeros(u)}};
  std::ofstream(dir + "/temperature.json") << cli::problem_to_json(p).dump(2) << '\n';
  std::ofstream(dir + "/vocabulary.json") << cli::vocabulary_to_json(vocab).dump(2) << '\n';

  std::ofstream csv(dir + "/X2.csv");
  csv << "x,mu\n";
  const auto& x2 = p.sets[1].second;
  for (std::size_t i = 0; i < u->size(); ++i) csv << fmt::format("{},{}\n", u->points()[i], x2[i]);

  std::ofstream(dir + "/bad_membership.json")
      << "{\n  \"universe\": {\"name\": \"grid\", \"points\": [0, 1, 2, 3, 4]},\n"
         "  \"sets\": {\"OK\": [0, 0.5, 1, 0.5, 0], \"BAD\": [0, 0.4, 0.9, 1.2, 0.3]}\n}\n";
  std::cout << "wrote fixtures to " << dir << '\n';
  return 0;
}
