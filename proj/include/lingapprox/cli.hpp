#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lingapprox/approximation.hpp"
#include "lingapprox/quantifier.hpp"

namespace lingapprox::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFileOrParse = 2,
  kValidation = 3,
  kEmptySet = 4,
  kBadLabel = 5,
};

int exit_code_for(ErrorCode code);

// Failures detected by the CLI layer itself rather than the engine.
class InputError : public std::runtime_error {
 public:
  InputError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct ProblemFile {
  UniversePtr universe;
  std::vector<std::pair<std::string, FuzzySet>> sets;
  std::optional<Vocabulary> vocabulary;
  std::string digest;

  const FuzzySet& set(const std::string& name) const;
};

std::string fnv1a_hex(const std::string& bytes);

ProblemFile parse_problem_json(const std::string& text);
ProblemFile parse_problem_csv(const std::string& text, const std::string& set_name);
// Dispatches on the extension: .csv files hold one set named after the stem.
ProblemFile load_problem(const std::string& path);

Vocabulary parse_vocabulary(const Json& j, const UniversePtr& universe);
Json vocabulary_to_json(const Vocabulary& vocab);
Json problem_to_json(const ProblemFile& problem);

// Problem override, else the file named by LINGAPPROX_VOCAB, else defaults.
Vocabulary resolve_vocabulary(const ProblemFile& problem);

struct SegmentEntry {
  std::size_t segment;
  std::string clause;
  double value;
};

struct ApproximationEntry {
  std::size_t rank;
  std::string label;
  double score;
  double adjusted_score;
  std::size_t nodes;
  std::vector<SegmentEntry> segments;
};

struct PropositionEntry {
  std::string method;
  std::string scope;
  std::vector<std::string> quantifier;
  std::string clause;
  double compatibility;
  double proportion;
  std::string sentence;
};

struct CardinalityEntry {
  std::string name;
  std::string kind;
  std::string completion;
  std::vector<std::pair<double, double>> support;
};

struct Report {
  std::string command;
  std::string input_digest;
  std::string set;
  std::string universe;
  std::size_t points = 0;
  Json config = Json::object();
  std::optional<std::string> label;
  std::vector<ApproximationEntry> approximations;
  std::vector<PropositionEntry> propositions;
  std::vector<std::pair<std::string, std::string>> summaries;
  std::vector<std::pair<double, double>> curve;
  std::vector<CardinalityEntry> cardinalities;
  std::optional<std::string> quantifier;
  std::optional<double> truth;
  std::optional<std::string> timestamp;
};

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);
std::string report_to_text(const Report& r);

// Full command line without the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lingapprox::cli
